#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tap/frontend.hpp"

namespace {

tap::PresentationFile load_input(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return tap::parse_presentation(ss.str());
}

tap::Word parse_word_arg(const std::string& text, const tap::Presentation& p) {
    std::istringstream is(text);
    std::string tok;
    tap::Word w;
    while (is >> tok) {
        int sign = 1;
        std::string name = tok;
        if (auto pos = name.find('^'); pos != std::string::npos) {
            if (name.substr(pos) != "^-1") throw std::runtime_error("bad token " + tok);
            sign = -1;
            name = name.substr(0, pos);
        }
        int gen = -1;
        for (int g = 0; g < p.num_generators(); ++g)
            if (p.generators[g] == name) gen = g;
        if (gen < 0) throw std::runtime_error("unknown generator " + name);
        w.push_back({gen, sign});
    }
    return tap::free_reduce(w);
}

const tap::FiniteGroup& find_group(const std::string& name,
                                   const std::vector<tap::FiniteGroup>& catalog) {
    for (const tap::FiniteGroup& g : catalog)
        if (g.name == name) return g;
    throw std::runtime_error("no catalog group named " + name);
}

void print_bundle(const tap::CriterionResult& r, const tap::Presentation& p) {
    std::cout << "group: " << r.group_name << "  epi " << r.epi_index << "\n";
    for (int i = 0; i < p.num_generators(); ++i)
        std::cout << "  alpha(" << p.generators[i] << ") = (" << r.alpha.images[i].str() << ")\n";
    std::cout << "  delta0 = " << r.bundle.delta0.str() << "\n";
    std::cout << "  delta1 = " << r.bundle.delta1.str()
              << (r.bundle.content_known ? "" : "  [content unknown, primitive part]") << "\n";
    std::cout << "  wada = [" << r.bundle.wada_num.str() << "] / [" << r.bundle.wada_den.str()
              << "]  (column " << r.bundle.column_used << ")\n";
    std::cout << "  div = " << r.div_phi_g;
    if (r.monic) std::cout << "  monic = " << (*r.monic ? "yes" : "no");
    if (r.actual_deg) std::cout << "  deg = " << *r.actual_deg;
    if (r.expected_deg) std::cout << "  expected deg = " << *r.expected_deg;
    std::cout << "\n  status: " << tap::status_str(r.status) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"twisted Alexander polynomials over finite-quotient representations"};
    app.require_subcommand(1);
    long seed = 0;
    app.add_option("--seed", seed, "rng seed for fuzz harnesses; never affects results");

    std::string input_path, group_name, json_path, element_text;
    std::vector<std::string> subgroup_texts;
    int max_order = 24;
    bool dedupe = false, exhaustive = false;
    double budget_seconds = 0;
    long max_epis = 0;

    auto* cmd_delta = app.add_subcommand("delta", "print DeltaBundles for one input");
    cmd_delta->add_option("--input", input_path, "presentation file")->required();
    cmd_delta->add_option("--group", group_name, "catalog group; default Z/1");
    cmd_delta->add_option("--max-order", max_order, "enumerate all groups up to this order instead");

    auto* cmd_search = app.add_subcommand("search", "sweep the catalog for an obstruction");
    cmd_search->add_option("--input", input_path, "presentation file")->required();
    cmd_search->add_option("--max-order", max_order, "catalog ceiling (default 24)");
    cmd_search->add_flag("--dedupe-conjugacy", dedupe, "one epimorphism per conjugacy orbit");
    cmd_search->add_flag("--exhaustive", exhaustive, "keep sweeping past the first failure");
    cmd_search->add_option("--budget-seconds", budget_seconds, "wall-clock budget (0 = none)");
    cmd_search->add_option("--max-epis", max_epis, "epimorphism-count budget (0 = none)");
    cmd_search->add_option("--json", json_path, "write the report here");

    auto* cmd_epis = app.add_subcommand("epis", "list epimorphisms");
    cmd_epis->add_option("--input", input_path, "presentation file")->required();
    cmd_epis->add_option("--group", group_name, "one catalog group; default: all up to --max-order");
    cmd_epis->add_option("--max-order", max_order, "catalog ceiling");
    cmd_epis->add_flag("--dedupe-conjugacy", dedupe, "one per conjugacy orbit");

    auto* cmd_corpus = app.add_subcommand("corpus", "built-in inputs");
    std::string corpus_action = "list", corpus_label;
    cmd_corpus->add_option("action", corpus_action, "list | run | dump")->required();
    cmd_corpus->add_option("label", corpus_label, "entry label (run/dump)");

    auto* cmd_witness = app.add_subcommand("witness", "separability witness search");
    cmd_witness->add_option("--input", input_path, "presentation file")->required();
    cmd_witness->add_option("--subgroup", subgroup_texts, "subgroup generator word (repeatable)")
        ->required();
    cmd_witness->add_option("--element", element_text, "element to separate")->required();
    cmd_witness->add_option("--max-order", max_order, "catalog ceiling");

    CLI11_PARSE(app, argc, argv);

    if (cmd_delta->parsed()) {
        tap::PresentationFile f = load_input(input_path);
        tap::ManifoldInput in = f.manifold();
        std::vector<tap::FiniteGroup> groups;
        if (!group_name.empty())
            groups.push_back(find_group(group_name, tap::group_catalog(120)));
        else if (cmd_delta->count("--max-order"))
            groups = tap::group_catalog(max_order);
        else
            groups.push_back(tap::FiniteGroup::trivial());
        for (const tap::FiniteGroup& g : groups) {
            int idx = 0;
            for (const tap::Epimorphism& e :
                 tap::enumerate_epimorphisms(in.presentation, g, dedupe)) {
                tap::CriterionResult r = tap::check_epi(in, e);
                r.epi_index = idx++;
                print_bundle(r, in.presentation);
            }
        }
        return 0;
    }

    if (cmd_search->parsed()) {
        tap::PresentationFile f = load_input(input_path);
        tap::ManifoldInput in = f.manifold();
        auto t0 = std::chrono::steady_clock::now();
        tap::SearchOutcome out = tap::search_obstruction(
            in, max_order, dedupe, tap::Budget{budget_seconds, max_epis}, exhaustive);
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        if (!json_path.empty()) tap::write_json_atomic(tap::report_json(f, out, dt.count()), json_path);
        if (out.verdict.obstruction_found) {
            std::cout << "obstruction found:\n";
            print_bundle(*out.verdict.witness, in.presentation);
            return 2;
        }
        std::cout << "consistent up to order " << out.verdict.max_order << " ("
                  << out.verdict.epis_checked << " epimorphisms, " << out.verdict.groups_checked
                  << " groups" << (out.verdict.budget_exceeded ? ", budget exceeded" : "") << ")\n";
        return 0;
    }

    if (cmd_epis->parsed()) {
        tap::PresentationFile f = load_input(input_path);
        std::vector<tap::FiniteGroup> groups;
        if (!group_name.empty())
            groups.push_back(find_group(group_name, tap::group_catalog(120)));
        else
            groups = tap::group_catalog(max_order);
        for (const tap::FiniteGroup& g : groups) {
            auto es = tap::enumerate_epimorphisms(f.presentation, g, dedupe);
            if (es.empty()) continue;
            std::cout << g.name << ": " << es.size() << "\n";
            for (const tap::Epimorphism& e : es) {
                std::cout << " ";
                for (const tap::Perm& p : e.images) std::cout << " (" << p.str() << ")";
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (cmd_corpus->parsed()) {
        if (corpus_action == "list") {
            for (const tap::CorpusEntry& e : tap::corpus())
                std::cout << e.label << (e.file.closed ? "  [closed]" : "") << "  genus " << e.genus
                          << "  " << (e.fibered ? "fibered" : "non-fibered") << "\n";
            return 0;
        }
        if (corpus_action == "dump") {
            std::cout << tap::serialize_presentation(tap::corpus_entry(corpus_label).file);
            return 0;
        }
        if (corpus_action == "run") {
            for (const tap::CorpusEntry& e : tap::corpus()) {
                if (!corpus_label.empty() && e.label != corpus_label) continue;
                tap::ManifoldInput in = e.file.manifold();
                tap::Epimorphism triv{tap::FiniteGroup::trivial(),
                                      std::vector<tap::Perm>(in.presentation.num_generators(),
                                                             tap::Perm::identity(1))};
                tap::CriterionResult r = tap::check_epi(in, triv);
                std::cout << e.label << ": delta1 = " << r.bundle.delta1.str()
                          << "  expected = " << e.expected_delta.str() << "  status "
                          << tap::status_str(r.status) << "\n";
            }
            return 0;
        }
        throw std::runtime_error("corpus action must be list, run or dump");
    }

    if (cmd_witness->parsed()) {
        tap::PresentationFile f = load_input(input_path);
        std::vector<tap::Word> sub;
        for (const std::string& s : subgroup_texts) sub.push_back(parse_word_arg(s, f.presentation));
        tap::Word g = parse_word_arg(element_text, f.presentation);
        tap::SeparabilityWitness w = tap::separability_witness(
            f.presentation, sub, g, tap::group_catalog(max_order), max_order);
        if (w.witness) {
            std::cout << "witness in " << w.witness->target.name << ":\n";
            for (int i = 0; i < f.presentation.num_generators(); ++i)
                std::cout << "  alpha(" << f.presentation.generators[i] << ") = ("
                          << w.witness->images[i].str() << ")\n";
        } else {
            std::cout << "none up to order " << w.max_order_searched << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
