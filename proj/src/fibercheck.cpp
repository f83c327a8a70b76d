#include "tap/fibercheck.hpp"

#include <chrono>
#include <stdexcept>

namespace tap {

std::string status_str(Status s) {
    switch (s) {
        case Status::NONZERO_OK: return "NONZERO_OK";
        case Status::ZERO_OBSTRUCTION: return "ZERO_OBSTRUCTION";
        case Status::NONMONIC: return "NONMONIC";
        case Status::DEGREE_MISMATCH: return "DEGREE_MISMATCH";
        case Status::INAPPLICABLE: return "INAPPLICABLE";
    }
    return "?";
}

long expected_degree(long group_order, long thurston_norm, long div) {
    if (group_order < 0 || thurston_norm < 0 || div < 0)
        throw std::invalid_argument("degree formula needs nonnegative inputs");
    if (div == 0) throw std::domain_error("degenerate restriction: div = 0");
    return group_order * thurston_norm + 2 * div;
}

CriterionResult check_epi(const ManifoldInput& input, const Epimorphism& alpha) {
    CriterionResult r;
    r.group_name = alpha.target.name;
    r.alpha = alpha;
    if (input.phi.is_zero()) {
        r.status = Status::INAPPLICABLE;
        return r;
    }
    TwistRep rep{alpha, input.phi};
    r.bundle = twisted_alexander(input.presentation, rep);
    r.div_phi_g = divisibility_of_restriction(
        input.phi, kernel_schreier_generators(input.presentation, alpha));

    if (r.bundle.delta1.is_zero()) {
        r.status = Status::ZERO_OBSTRUCTION;
        return r;
    }
    LaurentPoly prim = primitive_part(normalize_unit(r.bundle.delta1));
    r.actual_deg = span_degree(prim);
    r.monic = is_monic(prim);
    if (!*r.monic) {
        r.status = Status::NONMONIC;
        return r;
    }
    const bool degree_applicable = input.closed && input.thurston_norm.has_value() &&
                                   input.phi.is_primitive() && r.div_phi_g >= 1;
    if (degree_applicable) {
        r.expected_deg = expected_degree(alpha.target.order(), *input.thurston_norm, r.div_phi_g);
        if (*r.actual_deg != *r.expected_deg) {
            r.status = Status::DEGREE_MISMATCH;
            return r;
        }
    }
    r.status = Status::NONZERO_OK;
    return r;
}

SearchOutcome search_obstruction(const ManifoldInput& input, int max_order, bool dedupe_conjugacy,
                                 Budget budget, bool exhaustive) {
    const auto t0 = std::chrono::steady_clock::now();
    auto over_budget = [&](long epis) {
        if (budget.max_epis > 0 && epis >= budget.max_epis) return true;
        if (budget.seconds > 0) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            if (dt.count() >= budget.seconds) return true;
        }
        return false;
    };

    SearchOutcome out;
    out.verdict.max_order = max_order;
    for (const FiniteGroup& g : group_catalog(max_order)) {
        ++out.verdict.groups_checked;
        int idx = 0;
        for (const Epimorphism& e : enumerate_epimorphisms(input.presentation, g, dedupe_conjugacy)) {
            if (over_budget(out.verdict.epis_checked)) {
                out.verdict.budget_exceeded = true;
                return out;
            }
            CriterionResult r = check_epi(input, e);
            r.epi_index = idx++;
            ++out.verdict.epis_checked;
            const bool failure = r.status != Status::NONZERO_OK && r.status != Status::INAPPLICABLE;
            if (failure && !out.verdict.obstruction_found) {
                out.verdict.obstruction_found = true;
                out.verdict.witness = r;
            }
            out.results.push_back(std::move(r));
            if (out.verdict.obstruction_found && !exhaustive) return out;
        }
    }
    return out;
}

BigRat norm_estimate(const std::vector<CriterionResult>& results) {
    bool any = false;
    BigRat best;
    for (const CriterionResult& r : results) {
        if (!r.actual_deg) continue;
        BigRat v(*r.actual_deg - 2 * r.div_phi_g, r.alpha.target.order());
        v.canonicalize();
        if (!any || v > best) best = v;
        any = true;
    }
    if (!any) throw std::invalid_argument("no nonzero results to estimate from");
    return best;
}

}  // namespace tap
