#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tap/fibercheck.hpp"

#include <json.hpp>

namespace tap {

/// Lexical failure with position information.
struct ParseError : std::runtime_error {
    int line;
    int column;
    std::string token;
    ParseError(int ln, int col, std::string tok, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ", col " + std::to_string(col) + ": " +
                             what),
          line(ln),
          column(col),
          token(std::move(tok)) {}
};

/// Well-formed text with inconsistent content (unknown generator,
/// phi not a homomorphism, ...).
struct SemanticError : std::runtime_error {
    int line;
    SemanticError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

struct PresentationFile {
    Presentation presentation;
    std::optional<std::vector<long>> phi;
    std::optional<long> norm;
    std::optional<Word> longitude;
    std::string label;
    bool closed = false;

    bool operator==(const PresentationFile&) const = default;

    ManifoldInput manifold() const;  // requires phi
};

PresentationFile parse_presentation(const std::string& text);
std::string serialize_presentation(const PresentationFile& f);

struct LongitudeInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dehn-fill along the stored longitude: appends it as a relator and marks
/// the result closed. The longitude must have phi-value 0 and commute with
/// the first generator in every finite quotient up to validation_max_order.
PresentationFile zero_surgery(const PresentationFile& exterior, int validation_max_order = 24);

struct NotAKnot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Braid word: letters (i, sign) meaning sigma_{i+1}^{sign}, 0 <= i <= n-2.
using BraidWord = std::vector<std::pair<int, int>>;

/// Presentation of the closure's knot group from the Artin action on the
/// strand labels, with the longitude read off the strand traversal and
/// corrected by meridian^{-writhe}. Throws NotAKnot for multi-component
/// closures.
PresentationFile braid_to_presentation(const BraidWord& word, int n);

struct CorpusEntry {
    std::string label;
    PresentationFile file;
    LaurentPoly expected_delta;  // ordinary (trivial G) Delta_1, primitive form
    bool fibered = false;
    long genus = 0;
    std::string provenance;
    std::vector<std::vector<long>> seifert;    // Seifert matrix oracle, if any
    std::vector<std::vector<long>> monodromy;  // torus-bundle oracle, if any
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& label);

/// det(V - t V^T), unit-normalized.
LaurentPoly seifert_alexander(const std::vector<std::vector<long>>& v);
/// det(tI - M), unit-normalized.
LaurentPoly torus_bundle_delta(const std::vector<std::vector<long>>& m);

nlohmann::ordered_json poly_json(const LaurentPoly& p);
nlohmann::ordered_json result_json(const CriterionResult& r);
nlohmann::ordered_json report_json(const PresentationFile& input, const SearchOutcome& outcome,
                                   double seconds);
/// write-temp-then-rename
void write_json_atomic(const nlohmann::ordered_json& doc, const std::string& path);

}  // namespace tap
