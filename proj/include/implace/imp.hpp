#ifndef IMPLACE_IMP_HPP
#define IMPLACE_IMP_HPP

#include <string>
#include <vector>

#include "implace/merge_math.hpp"
#include "implace/model.hpp"
#include "implace/slicing_tree.hpp"

namespace implace {

// A slicing-tree node with its realized rectangle. Orientation and
// first_position are meaningful for internal nodes only.
struct RealizedNode {
    NodeId node = kNoNode;
    PlacedRect rect;
    Orientation orientation = Orientation::vertical;
    FirstPosition first_position = FirstPosition::top_or_left;
};

struct AspectViolation {
    std::string module;
    double ratio = 0.0;
    AspectInterval allowed;
    double magnitude = 0.0; // max(lo/ratio, ratio/hi) - 1, positive when outside
};

struct MergeTraceEntry {
    std::int32_t step = 0;
    std::string first;
    std::string second;
    std::int64_t insert_position = 0;
};

struct PlacementReport {
    Layout layout;
    std::vector<AspectViolation> aspect_violations;
    std::vector<MergeTraceEntry> merge_trace;
};

// Merging stage: repeatedly merge the two least-area modules of the
// sequence (kept sorted by non-increasing area; composites are inserted
// in front of equal-area peers) until one composite remains.
SlicingTree stage1_merge(const std::vector<SoftModule> &modules);

// Realization stage: assign the circuit rectangle to the root, then pop
// composites newest-first, stacking vertically with the larger sub-module
// on top when the composite is at least as tall as wide, side by side with
// the larger on the left otherwise. Requires the zero-deadspace area
// condition. When realized_out is non-null it receives every node's
// realized rectangle and split decision.
PlacementReport stage2_realize(const SlicingTree &tree, const Circuit &circuit,
                               std::vector<RealizedNode> *realized_out = nullptr);

// Both stages.
PlacementReport place(const Instance &instance);

} // namespace implace

#endif
