#ifndef IMPLACE_SLICING_TREE_HPP
#define IMPLACE_SLICING_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "implace/model.hpp"

namespace implace {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// One node of the merge hierarchy. Leaves reference a module by index;
// internal nodes record the merge step that created them. Orientation and
// top/left order are deliberately absent: they are decided only at
// realization time.
struct SlicingNode {
    double area = 0.0;
    NodeId first = kNoNode;  // popped second-to-rearmost; area >= second's
    NodeId second = kNoNode; // popped rearmost
    std::int32_t step = 0;   // 1-based merge step, 0 for leaves
    std::int32_t module_index = -1;

    bool is_leaf() const { return module_index >= 0; }
};

// What happened at one merge step, for traces and diagnostics.
struct MergeRecord {
    std::int32_t step = 0;
    NodeId first = kNoNode;
    NodeId second = kNoNode;
    std::int64_t insert_position = 0; // 1-based position in the working sequence
};

// Immutable result of the merging stage. Nodes live in an arena; leaf i is
// node i, in instance module order. merge_order doubles as the merge stack:
// iterating it backwards pops the root first.
struct SlicingTree {
    std::vector<SoftModule> modules;
    std::vector<SlicingNode> nodes;
    NodeId root = kNoNode;
    std::vector<NodeId> merge_order;
    std::vector<MergeRecord> records;

    std::size_t leaf_count() const { return modules.size(); }
    // Trace name of a node: the module name for leaves, "__c<step>" for composites.
    std::string node_name(NodeId id) const;
};

double node_area(const SlicingTree &tree, NodeId id);

// Leaf modules in first-then-second traversal order.
std::vector<SoftModule> leaves(const SlicingTree &tree);

// Indented one-node-per-line debug dump. Not a stable format.
std::string dump(const SlicingTree &tree);

} // namespace implace

#endif
