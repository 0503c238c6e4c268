#include "implace/imp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace implace {

namespace {

// Working sequence of the merging stage, conceptually a list sorted by
// non-increasing area. The explicit list is never materialized: originals
// are consumed from the back of the sorted input, and composites form a
// FIFO whose head is the oldest (hence least-area, by the monotonicity of
// merge areas) composite. A new composite always goes in front of every
// live composite and in front of equal-area originals, so its sequence
// position is 1 + the number of strictly larger remaining originals.
class MergeSequence {
public:
    explicit MergeSequence(const std::vector<SlicingNode> &nodes,
                           const std::vector<SoftModule> &modules)
        : nodes_(nodes) {
        order_.resize(modules.size());
        std::iota(order_.begin(), order_.end(), NodeId{0});
        std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) {
            return modules[static_cast<std::size_t>(a)].area >
                   modules[static_cast<std::size_t>(b)].area;
        });
        originals_left_ = order_.size();
    }

    std::size_t size() const { return originals_left_ + composites_.size(); }

    // Remove and return the rearmost element. Equal areas: originals sit
    // behind composites (composites are inserted in front of equal-area
    // peers), older composites behind newer ones.
    NodeId pop_rearmost() {
        if (originals_left_ > 0 &&
            (composites_.empty() ||
             area(order_[originals_left_ - 1]) <= area(composites_.front()))) {
            return order_[--originals_left_];
        }
        const NodeId id = composites_.front();
        composites_.pop_front();
        return id;
    }

    // 1-based insert position: after the strictly larger originals, before
    // everything else.
    std::int64_t insert(NodeId id) {
        if (!composites_.empty() && area(id) < area(composites_.back()))
            throw error(errc::internal, "merge areas decreased across steps");
        composites_.push_back(id);
        const double a = area(id);
        const auto begin = order_.begin();
        const auto end = begin + static_cast<std::ptrdiff_t>(originals_left_);
        const auto it = std::partition_point(
            begin, end, [&](NodeId orig) { return area(orig) > a; });
        return (it - begin) + 1;
    }

private:
    double area(NodeId id) const { return nodes_[static_cast<std::size_t>(id)].area; }

    const std::vector<SlicingNode> &nodes_;
    std::vector<NodeId> order_;
    std::size_t originals_left_ = 0;
    std::deque<NodeId> composites_;
};

} // namespace

SlicingTree stage1_merge(const std::vector<SoftModule> &modules) {
    if (modules.empty())
        throw error(errc::invalid_instance, "cannot merge an empty module list");

    SlicingTree tree;
    tree.modules = modules;
    tree.nodes.reserve(2 * modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) {
        SlicingNode leaf;
        leaf.area = modules[i].area;
        leaf.module_index = static_cast<std::int32_t>(i);
        tree.nodes.push_back(leaf);
    }

    MergeSequence sequence(tree.nodes, modules);
    std::int32_t step = 0;
    NodeId last = 0;
    while (sequence.size() > 1) {
        const NodeId second = sequence.pop_rearmost();
        const NodeId first = sequence.pop_rearmost();
        SlicingNode internal;
        internal.first = first;
        internal.second = second;
        internal.area = tree.nodes[static_cast<std::size_t>(first)].area +
                        tree.nodes[static_cast<std::size_t>(second)].area;
        internal.step = ++step;
        const NodeId id = static_cast<NodeId>(tree.nodes.size());
        tree.nodes.push_back(internal);
        const std::int64_t position = sequence.insert(id);
        tree.merge_order.push_back(id);
        tree.records.push_back(MergeRecord{step, first, second, position});
        last = id;
    }
    tree.root = modules.size() == 1 ? NodeId{0} : last;
    return tree;
}

namespace {

struct RawRect {
    double x = 0, y = 0, w = 0, h = 0;
};

void append_violation(std::vector<AspectViolation> &out, const SoftModule &module,
                      const PlacedRect &rect) {
    const AspectInterval allowed = interval_of_module(module);
    const double ratio = rect.aspect_ratio();
    if (allowed.contains(ratio, kDefaultEpsRel))
        return;
    const double magnitude = std::max(allowed.lo / ratio, ratio / allowed.hi) - 1.0;
    out.push_back(AspectViolation{module.name, ratio, allowed, magnitude});
}

} // namespace

PlacementReport stage2_realize(const SlicingTree &tree, const Circuit &circuit,
                               std::vector<RealizedNode> *realized_out) {
    const double area = total_area(tree.modules);
    const double circuit_area = circuit.area();
    if (std::abs(area - circuit_area) > 1e-9 * circuit_area)
        throw error(errc::area_mismatch,
                    "module area does not fill the circuit (zero-deadspace instance required)");

    std::vector<RawRect> rects(tree.nodes.size());
    std::vector<char> oriented(tree.nodes.size(), 0);
    rects[static_cast<std::size_t>(tree.root)] = RawRect{0.0, 0.0, circuit.width, circuit.height};

    // Newest composite first; every node's rectangle is fixed before it is
    // popped, because its parent was merged later and therefore popped
    // earlier.
    for (auto it = tree.merge_order.rbegin(); it != tree.merge_order.rend(); ++it) {
        const NodeId id = *it;
        const SlicingNode &node = tree.nodes[static_cast<std::size_t>(id)];
        const RawRect r = rects[static_cast<std::size_t>(id)];
        const double ratio = r.h / r.w;
        const Orientation orientation =
            ratio >= 1.0 ? Orientation::vertical : Orientation::horizontal;
        oriented[static_cast<std::size_t>(id)] = orientation == Orientation::vertical ? 1 : 2;
        // first.area >= second.area, so the larger sub-module (first on
        // ties) is always the first child.
        const SplitSpec spec(orientation, tree.nodes[static_cast<std::size_t>(node.first)].area,
                             tree.nodes[static_cast<std::size_t>(node.second)].area,
                             FirstPosition::top_or_left);
        const auto [first_rect, second_rect] = split_realize(PlacedRect(r.x, r.y, r.w, r.h), spec);
        rects[static_cast<std::size_t>(node.first)] =
            RawRect{first_rect.x, first_rect.y, first_rect.w, first_rect.h};
        rects[static_cast<std::size_t>(node.second)] =
            RawRect{second_rect.x, second_rect.y, second_rect.w, second_rect.h};
    }

    PlacementReport report;
    report.layout.circuit = circuit;
    report.layout.placements.reserve(tree.leaf_count());
    for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
        const RawRect r = rects[i];
        PlacedRect rect(r.x, r.y, r.w, r.h);
        report.layout.placements.push_back(LayoutEntry{tree.modules[i].name, rect});
        append_violation(report.aspect_violations, tree.modules[i], rect);
    }

    report.merge_trace.reserve(tree.records.size());
    for (const MergeRecord &record : tree.records) {
        report.merge_trace.push_back(MergeTraceEntry{record.step, tree.node_name(record.first),
                                                     tree.node_name(record.second),
                                                     record.insert_position});
    }

    if (realized_out) {
        realized_out->clear();
        realized_out->reserve(tree.nodes.size());
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            const RawRect r = rects[i];
            RealizedNode realized;
            realized.node = static_cast<NodeId>(i);
            realized.rect = PlacedRect(r.x, r.y, r.w, r.h);
            realized.orientation =
                oriented[i] == 2 ? Orientation::horizontal : Orientation::vertical;
            realized.first_position = FirstPosition::top_or_left;
            realized_out->push_back(realized);
        }
    }
    return report;
}

PlacementReport place(const Instance &instance) {
    const SlicingTree tree = stage1_merge(instance.modules);
    return stage2_realize(tree, instance.circuit);
}

} // namespace implace
