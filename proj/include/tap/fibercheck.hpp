#pragma once

#include <optional>
#include <string>

#include "tap/twisted.hpp"

namespace tap {

struct ManifoldInput {
    Presentation presentation;
    PhiClass phi;
    std::optional<long> thurston_norm;  // metadata, never computed
    bool closed = false;
    std::string label;
};

enum class Status { NONZERO_OK, ZERO_OBSTRUCTION, NONMONIC, DEGREE_MISMATCH, INAPPLICABLE };

std::string status_str(Status s);

struct CriterionResult {
    std::string group_name;
    int epi_index = 0;  // position in canonical enumeration order
    Epimorphism alpha;
    DeltaBundle bundle;
    long div_phi_g = 0;
    std::optional<long> expected_deg;  // only when closed + norm metadata + primitive phi
    std::optional<long> actual_deg;
    std::optional<bool> monic;
    Status status = Status::INAPPLICABLE;
};

struct Verdict {
    bool obstruction_found = false;
    std::optional<CriterionResult> witness;
    int max_order = 0;
    long groups_checked = 0;
    long epis_checked = 0;
    bool budget_exceeded = false;
};

struct SearchOutcome {
    Verdict verdict;
    std::vector<CriterionResult> results;  // canonical order; all epis checked
};

struct Budget {
    double seconds = 0;  // 0: unlimited
    long max_epis = 0;   // 0: unlimited
};

/// |G| * norm + 2 * div. Errors on div = 0.
long expected_degree(long group_order, long thurston_norm, long div);

/// Computes the bundle for one epimorphism and classifies it against the
/// non-vanishing, monic and degree criteria.
CriterionResult check_epi(const ManifoldInput& input, const Epimorphism& alpha);

/// Sweeps the catalog up to max_order in canonical order. First
/// non-NONZERO_OK result becomes the witness; with exhaustive, the sweep
/// continues and records every result anyway. Budget overrun sets the
/// budget_exceeded flag with partial counts.
SearchOutcome search_obstruction(const ManifoldInput& input, int max_order,
                                 bool dedupe_conjugacy = false, Budget budget = {},
                                 bool exhaustive = false);

/// Heuristic display value: max over nonzero results of
/// (span - 2 div) / |G|. Errors on empty or all-zero input.
BigRat norm_estimate(const std::vector<CriterionResult>& results);

}  // namespace tap
