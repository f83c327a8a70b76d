#include "tap/frontend.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tap {

ManifoldInput PresentationFile::manifold() const {
    if (!phi) throw std::invalid_argument("input carries no phi line");
    ManifoldInput in;
    in.presentation = presentation;
    in.phi = phi_from_exponents(presentation, *phi);
    in.thurston_norm = norm;
    in.closed = closed;
    in.label = label;
    return in;
}

namespace {

struct Tok {
    std::string text;
    int column;  // 1-based
};

std::vector<Tok> split_tokens(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

Letter parse_letter(const Tok& t, int line, const Presentation& p) {
    std::string name = t.text;
    int sign = 1;
    if (auto pos = name.find('^'); pos != std::string::npos) {
        if (name.substr(pos) != "^-1")
            throw ParseError(line, t.column, t.text, "only ^-1 exponents are allowed");
        sign = -1;
        name = name.substr(0, pos);
    }
    if (!valid_name(name)) throw ParseError(line, t.column, t.text, "malformed generator token");
    for (int g = 0; g < p.num_generators(); ++g)
        if (p.generators[g] == name) return {g, sign};
    throw SemanticError(line, "unknown generator " + name);
}

long parse_integer(const Tok& t, int line) {
    try {
        size_t used = 0;
        long v = std::stol(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, t.column, t.text, "expected an integer");
    }
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
    PresentationFile f;
    bool have_gens = false, have_phi = false, have_norm = false, have_longitude = false,
         have_closed = false, have_label = false;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    int phi_line = 0;
    std::optional<std::pair<int, std::vector<Tok>>> longitude_toks;
    std::vector<std::pair<int, std::vector<Tok>>> relator_toks;
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::vector<Tok> toks = split_tokens(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;
        if (head.back() != ':')
            throw ParseError(ln, toks[0].column, head, "expected a key ending in ':'");
        std::string key = head.substr(0, head.size() - 1);
        std::vector<Tok> rest(toks.begin() + 1, toks.end());
        if (key == "gens") {
            if (have_gens) throw SemanticError(ln, "duplicate gens line");
            if (rest.empty()) throw ParseError(ln, toks[0].column, head, "gens needs at least one name");
            for (const Tok& t : rest) {
                if (!valid_name(t.text))
                    throw ParseError(ln, t.column, t.text, "malformed generator name");
                f.presentation.generators.push_back(t.text);
            }
            try {
                f.presentation.validate();
            } catch (const std::invalid_argument& e) {
                throw SemanticError(ln, e.what());
            }
            have_gens = true;
        } else if (key == "rel") {
            if (rest.empty())
                throw ParseError(ln, toks[0].column, head, "relator needs at least one token");
            relator_toks.emplace_back(ln, rest);
        } else if (key == "phi") {
            if (have_phi) throw SemanticError(ln, "duplicate phi line");
            if (rest.empty()) throw ParseError(ln, toks[0].column, head, "phi needs integers");
            std::vector<long> e;
            for (const Tok& t : rest) e.push_back(parse_integer(t, ln));
            f.phi = std::move(e);
            phi_line = ln;
            have_phi = true;
        } else if (key == "norm") {
            if (have_norm) throw SemanticError(ln, "duplicate norm line");
            if (rest.size() != 1) throw ParseError(ln, toks[0].column, head, "norm needs one integer");
            long v = parse_integer(rest[0], ln);
            if (v < 0) throw SemanticError(ln, "norm must be nonnegative");
            f.norm = v;
            have_norm = true;
        } else if (key == "longitude") {
            if (have_longitude) throw SemanticError(ln, "duplicate longitude line");
            if (rest.empty())
                throw ParseError(ln, toks[0].column, head, "longitude needs at least one token");
            longitude_toks = {ln, rest};
            have_longitude = true;
        } else if (key == "label") {
            if (have_label) throw SemanticError(ln, "duplicate label line");
            if (rest.size() != 1) throw ParseError(ln, toks[0].column, head, "label needs one token");
            f.label = rest[0].text;
            have_label = true;
        } else if (key == "closed") {
            if (have_closed) throw SemanticError(ln, "duplicate closed line");
            if (rest.size() != 1 || (rest[0].text != "true" && rest[0].text != "false"))
                throw ParseError(ln, toks[0].column, head, "closed needs true or false");
            f.closed = rest[0].text == "true";
            have_closed = true;
        } else {
            throw ParseError(ln, toks[0].column, head, "unknown key " + key);
        }
    }
    if (!have_gens) throw SemanticError(ln, "missing gens line");
    for (const auto& [rl, toks] : relator_toks) {
        Word w;
        for (const Tok& t : toks) w.push_back(parse_letter(t, rl, f.presentation));
        f.presentation.relators.push_back(free_reduce(w));
    }
    if (longitude_toks) {
        Word w;
        for (const Tok& t : longitude_toks->second)
            w.push_back(parse_letter(t, longitude_toks->first, f.presentation));
        f.longitude = free_reduce(w);
    }
    if (f.phi) {
        if (f.phi->size() != f.presentation.generators.size())
            throw SemanticError(phi_line, "phi needs one integer per generator");
        try {
            phi_from_exponents(f.presentation, *f.phi);
        } catch (const NotAHomomorphism& e) {
            throw SemanticError(phi_line, e.what());
        }
    }
    return f;
}

std::string serialize_presentation(const PresentationFile& f) {
    std::ostringstream os;
    os << "gens:";
    for (const std::string& g : f.presentation.generators) os << " " << g;
    os << "\n";
    for (const Word& r : f.presentation.relators)
        os << "rel: " << word_str(r, f.presentation.generators) << "\n";
    if (f.phi) {
        os << "phi:";
        for (long e : *f.phi) os << " " << e;
        os << "\n";
    }
    if (f.norm) os << "norm: " << *f.norm << "\n";
    if (f.longitude) os << "longitude: " << word_str(*f.longitude, f.presentation.generators) << "\n";
    if (f.closed) os << "closed: true\n";
    if (!f.label.empty()) os << "label: " << f.label << "\n";
    return os.str();
}

PresentationFile zero_surgery(const PresentationFile& exterior, int validation_max_order) {
    if (!exterior.longitude) throw LongitudeInvalid("no longitude stored");
    if (!exterior.phi) throw LongitudeInvalid("no phi stored; cannot check phi(longitude)");
    PhiClass phi = phi_from_exponents(exterior.presentation, *exterior.phi);
    if (phi.of_word(*exterior.longitude) != 0)
        throw LongitudeInvalid("phi(longitude) = " +
                               std::to_string(phi.of_word(*exterior.longitude)) + ", expected 0");
    // a longitude commutes with its meridian; test in every small quotient
    Word meridian{{0, 1}};
    for (const FiniteGroup& g : group_catalog(validation_max_order)) {
        for (const Epimorphism& h : enumerate_homomorphisms(exterior.presentation, g)) {
            Perm lm = h.evaluate(word_concat(*exterior.longitude, meridian));
            Perm ml = h.evaluate(word_concat(meridian, *exterior.longitude));
            if (!(lm == ml))
                throw LongitudeInvalid("longitude fails to commute with the meridian in " + g.name);
        }
    }
    PresentationFile closed = exterior;
    closed.presentation.relators.push_back(*exterior.longitude);
    closed.longitude.reset();
    closed.closed = true;
    return closed;
}

PresentationFile braid_to_presentation(const BraidWord& word, int n) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    for (auto [i, s] : word)
        if (i < 0 || i >= n - 1 || (s != 1 && s != -1))
            throw std::invalid_argument("braid letter out of range");
    // closure component count: follow strand positions through the braid
    std::vector<int> posof(n), strandat(n);
    for (int j = 0; j < n; ++j) posof[j] = strandat[j] = j;
    for (auto [i, s] : word) {
        int a = strandat[i], b = strandat[i + 1];
        std::swap(strandat[i], strandat[i + 1]);
        posof[a] = i + 1;
        posof[b] = i;
    }
    {
        std::vector<bool> seen(n, false);
        int cur = 0, cnt = 0;
        while (!seen[cur]) {
            seen[cur] = true;
            ++cnt;
            cur = posof[cur];
        }
        if (cnt != n) throw NotAKnot("braid closure has more than one component");
    }

    // Artin action on the strand labels, level by level
    std::vector<Word> labels(n);
    for (int j = 0; j < n; ++j) labels[j] = {{j, 1}};
    std::vector<std::vector<Word>> levels{labels};
    for (auto [i, s] : word) {
        Word u = labels[i], v = labels[i + 1];
        if (s == 1) {
            labels[i] = word_concat(word_concat(u, v), word_inverse(u));
            labels[i + 1] = u;
        } else {
            labels[i] = v;
            labels[i + 1] = word_concat(word_concat(word_inverse(v), u), v);
        }
        levels.push_back(labels);
    }

    PresentationFile f;
    for (int j = 0; j < n; ++j) f.presentation.generators.push_back("x" + std::to_string(j + 1));
    for (int j = 0; j < n - 1; ++j)
        f.presentation.relators.push_back(
            free_reduce(word_concat(labels[j], word_inverse({{j, 1}}))));

    // longitude: under-passage records along the closure traversal
    Word lam;
    int pos = 0;
    for (int pass = 0; pass < n; ++pass) {
        int p = pos;
        for (size_t li = 0; li < word.size(); ++li) {
            auto [i, s] = word[li];
            if (s == 1) {
                if (p == i) {
                    p = i + 1;
                } else if (p == i + 1) {
                    lam = word_concat(lam, word_inverse(levels[li][i]));
                    p = i;
                }
            } else {
                if (p == i) {
                    lam = word_concat(lam, levels[li][i + 1]);
                    p = i + 1;
                } else if (p == i + 1) {
                    p = i;
                }
            }
        }
        pos = p;
        if (pos == 0) break;
    }
    long e = total_exponent(lam);
    Word corr(static_cast<size_t>(e < 0 ? -e : e), Letter{0, e > 0 ? -1 : 1});
    f.longitude = word_concat(lam, corr);
    f.phi = std::vector<long>(n, 1);
    f.label = "braid_closure";
    return f;
}

LaurentPoly seifert_alexander(const std::vector<std::vector<long>>& v) {
    const int n = static_cast<int>(v.size());
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = LaurentPoly::constant(v[i][j]);
            m.at(i, j) -= LaurentPoly::monomial(BigRat(v[j][i]), 1);
        }
    LaurentPoly d = det_poly(m);
    return d.is_zero() ? d : normalize_unit(primitive_part(d));
}

LaurentPoly torus_bundle_delta(const std::vector<std::vector<long>>& mono) {
    const int n = static_cast<int>(mono.size());
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = LaurentPoly::constant(-mono[i][j]);
            if (i == j) m.at(i, j) += LaurentPoly::monomial(BigRat(1), 1);
        }
    LaurentPoly d = det_poly(m);
    return d.is_zero() ? d : normalize_unit(primitive_part(d));
}

namespace {

PresentationFile must_parse(const std::string& text) { return parse_presentation(text); }

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;

    CorpusEntry unknot;
    unknot.label = "unknot";
    unknot.file = must_parse(
        "gens: a\n"
        "phi: 1\n"
        "label: unknot\n");
    unknot.expected_delta = LaurentPoly::constant(1);
    unknot.fibered = true;
    unknot.genus = 0;
    unknot.provenance = "solid-torus exterior; free group of rank one";
    out.push_back(unknot);

    CorpusEntry trefoil;
    trefoil.label = "trefoil";
    trefoil.file = must_parse(
        "gens: a b\n"
        "rel: a b a b^-1 a^-1 b^-1\n"
        "phi: 1 1\n"
        "longitude: a b a b a b a^-1 a^-1 a^-1 a^-1 a^-1 a^-1\n"
        "label: trefoil\n");
    trefoil.expected_delta = LaurentPoly::from_coeffs({1, -1, 1});
    trefoil.fibered = true;
    trefoil.genus = 1;
    trefoil.provenance = "two-bridge presentation; longitude (ab)^3 a^-6";
    trefoil.seifert = {{-1, 1}, {0, -1}};
    trefoil.monodromy = {{1, -1}, {1, 0}};
    out.push_back(trefoil);

    CorpusEntry fig8;
    fig8.label = "figure8";
    fig8.file = must_parse(
        "gens: a b\n"
        "rel: a b a^-1 b^-1 a b^-1 a^-1 b a b^-1\n"
        "phi: 1 1\n"
        "longitude: a b^-1 a^-1 b b a^-1 b^-1 a\n"
        "label: figure8\n");
    fig8.expected_delta = LaurentPoly::from_coeffs({1, -3, 1});
    fig8.fibered = true;
    fig8.genus = 1;
    fig8.provenance = "two-bridge presentation; longitude w* w with w the reversed relator core";
    fig8.seifert = {{1, 1}, {0, -1}};
    fig8.monodromy = {{2, 1}, {1, 1}};
    out.push_back(fig8);

    CorpusEntry pretzel;
    pretzel.label = "pretzel535";
    pretzel.file = must_parse(
        "gens: a b c\n"
        "rel: a b^-1 a b^-1 a b a^-1 b a^-1 c b^-1 c^-1 b c^-1\n"
        "rel: c b^-1 c b c^-1 b a^-1 c a^-1 c a^-1 c^-1 a c^-1 a c^-1\n"
        "phi: 1 1 1\n"
        "longitude: a a b a^-1 b a^-1 c b^-1 c a c^-1 a c^-1 a b^-1 a b^-1 a b c^-1 b a^-1 c a^-1 "
        "c a^-1 a^-1 a^-1 a^-1 a^-1\n"
        "label: pretzel535\n");
    pretzel.expected_delta = LaurentPoly::from_coeffs({1, -3, 1});
    pretzel.fibered = false;
    pretzel.genus = 1;
    pretzel.provenance = "tangle presentation of the (5,-3,5) pretzel; genus-one, non-fibered";
    pretzel.seifert = {{1, -1}, {-2, 1}};
    out.push_back(pretzel);

    auto add_surgery = [&out](const CorpusEntry& base) {
        CorpusEntry s = base;
        s.label = base.label + "_0surgery";
        s.file = zero_surgery(base.file);
        s.file.label = s.label;
        s.file.norm = 0;  // 2g - 2 with g = 1
        s.provenance = base.provenance + "; 0-surgery, norm = 2g-2 for the genus-one fiber class";
        out.push_back(s);
    };
    add_surgery(trefoil);
    add_surgery(fig8);
    add_surgery(pretzel);
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

const CorpusEntry& corpus_entry(const std::string& label) {
    for (const CorpusEntry& e : corpus())
        if (e.label == label) return e;
    throw std::invalid_argument("no corpus entry named " + label);
}

nlohmann::ordered_json poly_json(const LaurentPoly& p) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) o[std::to_string(e)] = c.get_str();
    return o;
}

nlohmann::ordered_json result_json(const CriterionResult& r) {
    nlohmann::ordered_json o;
    o["group"] = r.group_name;
    o["epi_index"] = r.epi_index;
    nlohmann::ordered_json imgs = nlohmann::ordered_json::array();
    for (const Perm& p : r.alpha.images) imgs.push_back(p.str());
    o["images"] = imgs;
    o["div_phi_g"] = r.div_phi_g;
    o["delta0"] = poly_json(r.bundle.delta0);
    o["delta1"] = poly_json(r.bundle.delta1);
    o["wada_num"] = poly_json(r.bundle.wada_num);
    o["wada_den"] = poly_json(r.bundle.wada_den);
    o["column_used"] = r.bundle.column_used;
    o["content_known"] = r.bundle.content_known;
    o["monic"] = r.monic ? nlohmann::ordered_json(*r.monic) : nlohmann::ordered_json(nullptr);
    o["actual_degree"] =
        r.actual_deg ? nlohmann::ordered_json(*r.actual_deg) : nlohmann::ordered_json(nullptr);
    o["expected_degree"] =
        r.expected_deg ? nlohmann::ordered_json(*r.expected_deg) : nlohmann::ordered_json(nullptr);
    o["status"] = status_str(r.status);
    return o;
}

nlohmann::ordered_json report_json(const PresentationFile& input, const SearchOutcome& outcome,
                                   double seconds) {
    nlohmann::ordered_json o;
    o["version"] = "1.0.0";
    nlohmann::ordered_json in;
    in["label"] = input.label;
    in["text"] = serialize_presentation(input);
    o["input"] = in;
    nlohmann::ordered_json res = nlohmann::ordered_json::array();
    for (const CriterionResult& r : outcome.results) res.push_back(result_json(r));
    o["results"] = res;
    nlohmann::ordered_json v;
    v["obstruction_found"] = outcome.verdict.obstruction_found;
    v["witness"] = outcome.verdict.witness ? result_json(*outcome.verdict.witness)
                                           : nlohmann::ordered_json(nullptr);
    v["max_order"] = outcome.verdict.max_order;
    v["groups_checked"] = outcome.verdict.groups_checked;
    v["epis_checked"] = outcome.verdict.epis_checked;
    v["budget_exceeded"] = outcome.verdict.budget_exceeded;
    o["verdict"] = v;
    nlohmann::ordered_json t;
    t["seconds"] = seconds;
    o["timing"] = t;
    return o;
}

void write_json_atomic(const nlohmann::ordered_json& doc, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << doc.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace tap
