#ifndef IMPLACE_FEASIBILITY_HPP
#define IMPLACE_FEASIBILITY_HPP

#include <optional>

#include "implace/model.hpp"

namespace implace {

// Structured evidence for the sufficient feasibility conditions: a uniform
// bounding factor of at least 3, circuit ratio within [1/lambda, lambda],
// and an area-dominance bound on the sorted module sequence. worst_ratio is
// the checked max expression; with non-uniform factors it is evaluated
// against min lambda_i for diagnostic value and guaranteed stays false.
struct FeasibilityReport {
    std::optional<double> uniform_lambda;
    bool lambda_ok = false;
    double circuit_ratio = 0.0;
    bool circuit_ratio_ok = false;
    double worst_ratio = 0.0;
    bool condition_ok = false;
    bool guaranteed = false;
};

struct DominanceGap {
    double imp_worst = 0.0;
    double zds_worst = 0.0;
};

// Precondition for the iterative merging placer:
// max_i s_i / sum_{j>i} s_j <= lambda - 1 on the non-increasing sequence.
FeasibilityReport check_imp_condition(const Instance &instance);

// Precondition for the bipartition baseline:
// max_i s_i / s_{i+1} <= lambda - 1 on the non-increasing sequence.
FeasibilityReport check_zds_condition(const Instance &instance);

// Both worst ratios at once; the merge condition never exceeds the
// bipartition condition.
DominanceGap dominance_gap(const Instance &instance);

} // namespace implace

#endif
