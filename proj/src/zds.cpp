#include "implace/zds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace implace {

namespace {

// Greedy split of module indices (pre-sorted by non-increasing area) into
// two groups with nearly equal totals. Returns (left, right, left_total).
struct IndexSplit {
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;
    double left_total = 0.0;
    double right_total = 0.0;
};

IndexSplit greedy_split(const std::vector<SoftModule> &modules,
                        const std::vector<std::int32_t> &sorted_indices) {
    IndexSplit split;
    for (const std::int32_t index : sorted_indices) {
        const double area = modules[static_cast<std::size_t>(index)].area;
        if (split.left_total <= split.right_total) {
            split.left.push_back(index);
            split.left_total += area;
        } else {
            split.right.push_back(index);
            split.right_total += area;
        }
    }
    return split;
}

std::vector<std::int32_t> sorted_by_area(const std::vector<SoftModule> &modules) {
    std::vector<std::int32_t> indices(modules.size());
    std::iota(indices.begin(), indices.end(), 0);
    std::stable_sort(indices.begin(), indices.end(), [&](std::int32_t a, std::int32_t b) {
        return modules[static_cast<std::size_t>(a)].area > modules[static_cast<std::size_t>(b)].area;
    });
    return indices;
}

} // namespace

Bipartition bipartition(const std::vector<SoftModule> &modules) {
    if (modules.size() < 2)
        throw error(errc::invalid_argument, "bipartition needs at least 2 modules");
    const IndexSplit split = greedy_split(modules, sorted_by_area(modules));
    Bipartition result;
    for (const std::int32_t i : split.left)
        result.left_group.push_back(modules[static_cast<std::size_t>(i)]);
    for (const std::int32_t i : split.right)
        result.right_group.push_back(modules[static_cast<std::size_t>(i)]);
    result.imbalance =
        std::abs(split.left_total - split.right_total) / (split.left_total + split.right_total);
    return result;
}

PlacementReport zds_place(const Instance &instance, std::vector<CutRecord> *trace_out) {
    if (instance.modules.empty())
        throw error(errc::invalid_instance, "cannot place an empty instance");
    const double area = total_area(instance.modules);
    const double circuit_area = instance.circuit.area();
    if (std::abs(area - circuit_area) > 1e-9 * circuit_area)
        throw error(errc::area_mismatch,
                    "module area does not fill the circuit (zero-deadspace instance required)");

    const std::vector<SoftModule> &modules = instance.modules;
    std::vector<PlacedRect> rects(modules.size());

    struct Region {
        double x, y, w, h;
        std::vector<std::int32_t> members; // sorted by non-increasing area
    };
    std::vector<Region> work;
    work.push_back(Region{0.0, 0.0, instance.circuit.width, instance.circuit.height,
                          sorted_by_area(modules)});

    while (!work.empty()) {
        Region region = std::move(work.back());
        work.pop_back();
        if (region.members.size() == 1) {
            rects[static_cast<std::size_t>(region.members[0])] =
                PlacedRect(region.x, region.y, region.w, region.h);
            continue;
        }

        IndexSplit split = greedy_split(modules, region.members);
        const double left_fraction = split.left_total / (split.left_total + split.right_total);

        // Cut parallel to the shorter side; squares are cut vertically.
        if (region.w >= region.h) {
            const double cut_w = region.w * left_fraction;
            if (trace_out)
                trace_out->push_back(CutRecord{PlacedRect(region.x, region.y, region.w, region.h),
                                               Orientation::vertical, region.x + cut_w});
            work.push_back(Region{region.x + cut_w, region.y, region.w - cut_w, region.h,
                                  std::move(split.right)});
            work.push_back(Region{region.x, region.y, cut_w, region.h, std::move(split.left)});
        } else {
            const double cut_h = region.h * left_fraction;
            if (trace_out)
                trace_out->push_back(CutRecord{PlacedRect(region.x, region.y, region.w, region.h),
                                               Orientation::horizontal, region.y + cut_h});
            work.push_back(Region{region.x, region.y + cut_h, region.w, region.h - cut_h,
                                  std::move(split.right)});
            work.push_back(Region{region.x, region.y, region.w, cut_h, std::move(split.left)});
        }
    }

    PlacementReport report;
    report.layout.circuit = instance.circuit;
    report.layout.placements.reserve(modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) {
        report.layout.placements.push_back(LayoutEntry{modules[i].name, rects[i]});
        const AspectInterval allowed = interval_of_module(modules[i]);
        const double ratio = rects[i].aspect_ratio();
        if (!allowed.contains(ratio, kDefaultEpsRel)) {
            const double magnitude = std::max(allowed.lo / ratio, ratio / allowed.hi) - 1.0;
            report.aspect_violations.push_back(
                AspectViolation{modules[i].name, ratio, allowed, magnitude});
        }
    }
    return report;
}

} // namespace implace
