#ifndef IMPLACE_ZDS_HPP
#define IMPLACE_ZDS_HPP

#include <vector>

#include "implace/imp.hpp"
#include "implace/model.hpp"

namespace implace {

struct Bipartition {
    std::vector<SoftModule> left_group;
    std::vector<SoftModule> right_group;
    double imbalance = 0.0; // |sum(L) - sum(R)| / (sum(L) + sum(R))
};

// Greedy balancing: walk the modules by non-increasing area, assigning each
// to the group with the smaller running total (ties go left).
Bipartition bipartition(const std::vector<SoftModule> &modules);

// One recursion step of the baseline, for trace assertions.
struct CutRecord {
    PlacedRect region;
    Orientation cut = Orientation::vertical;
    double offset = 0.0; // cut coordinate along the split axis
};

// Recursive top-down area bipartitioning: cut each region parallel to its
// shorter side at the offset proportional to the group totals, the
// left/bottom sub-region taking the left group, down to single modules.
// Requires the zero-deadspace area condition. The merge trace of the
// returned report is empty; cut decisions go to trace_out when non-null.
PlacementReport zds_place(const Instance &instance, std::vector<CutRecord> *trace_out = nullptr);

} // namespace implace

#endif
