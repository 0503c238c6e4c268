#include "implace/merge_math.hpp"

#include <algorithm>
#include <cmath>

namespace implace {

namespace {

void check_merge_args(double s1, double s2) {
    if (!(s1 > 0.0) || !(s2 > 0.0))
        throw error(errc::invalid_argument, "merge areas must be positive");
}

} // namespace

std::optional<AspectInterval> merged_interval_vertical(double s1, const AspectInterval &i1,
                                                       double s2, const AspectInterval &i2) {
    check_merge_args(s1, s2);
    // Module k keeps its ratio iff the common width is in
    // [sqrt(s_k/hi_k), sqrt(s_k/lo_k)].
    const double w_min = std::max(std::sqrt(s1 / i1.hi), std::sqrt(s2 / i2.hi));
    const double w_max = std::min(std::sqrt(s1 / i1.lo), std::sqrt(s2 / i2.lo));
    if (w_min > w_max)
        return std::nullopt;
    const double total = s1 + s2;
    return AspectInterval(total / (w_max * w_max), total / (w_min * w_min));
}

std::optional<AspectInterval> merged_interval_horizontal(double s1, const AspectInterval &i1,
                                                         double s2, const AspectInterval &i2) {
    check_merge_args(s1, s2);
    // Common height h must be in [sqrt(s_k * lo_k), sqrt(s_k * hi_k)] per
    // module; the composite ratio is h^2 / (s1 + s2).
    const double h_min = std::max(std::sqrt(s1 * i1.lo), std::sqrt(s2 * i2.lo));
    const double h_max = std::min(std::sqrt(s1 * i1.hi), std::sqrt(s2 * i2.hi));
    if (h_min > h_max)
        return std::nullopt;
    const double total = s1 + s2;
    return AspectInterval((h_min * h_min) / total, (h_max * h_max) / total);
}

OrientedIntervals oriented_merge(double s1, const AspectInterval &i1, double s2,
                                 const AspectInterval &i2) {
    return OrientedIntervals{merged_interval_vertical(s1, i1, s2, i2),
                             merged_interval_horizontal(s1, i1, s2, i2)};
}

bool check_merge_feasible(double s_big, double lambda_big, double s_small, double lambda_small) {
    if (!(s_small > 0.0) || s_big < s_small)
        throw error(errc::invalid_argument, "check_merge_feasible requires s_big >= s_small > 0");
    if (!(lambda_big >= 1.0) || !(lambda_small >= 1.0))
        throw error(errc::invalid_argument, "bounding factors must be >= 1");
    if (lambda_big <= 1.0 || lambda_small <= 1.0)
        return false; // lambda - 1 = 0 admits no alpha >= 1
    const double alpha = s_big / s_small;
    return 1.0 / (lambda_big - 1.0) <= alpha && alpha <= lambda_small - 1.0;
}

double composite_bound(double lambda1, double lambda2, double alpha) {
    if (!(alpha >= 1.0))
        throw error(errc::invalid_argument, "composite_bound requires alpha >= 1");
    if (!(lambda1 >= 1.0) || !(lambda2 >= 1.0))
        throw error(errc::invalid_argument, "bounding factors must be >= 1");
    return std::min((1.0 + 1.0 / alpha) * lambda1, (1.0 + alpha) * lambda2);
}

std::pair<PlacedRect, PlacedRect> split_realize(const PlacedRect &parent, const SplitSpec &spec) {
    const double parent_area = parent.w * parent.h;
    const double sum = spec.first_area + spec.second_area;
    if (std::abs(sum - parent_area) > 1e-9 * parent_area)
        throw error(errc::area_mismatch, "split areas do not sum to the parent area");

    if (spec.orientation == Orientation::vertical) {
        const double h1 = spec.first_area / parent.w;
        const double h2 = spec.second_area / parent.w;
        if (spec.first_position == FirstPosition::top_or_left) {
            return {PlacedRect(parent.x, parent.y + h2, parent.w, h1),
                    PlacedRect(parent.x, parent.y, parent.w, h2)};
        }
        return {PlacedRect(parent.x, parent.y, parent.w, h1),
                PlacedRect(parent.x, parent.y + h1, parent.w, h2)};
    }

    const double w1 = spec.first_area / parent.h;
    const double w2 = spec.second_area / parent.h;
    if (spec.first_position == FirstPosition::top_or_left) {
        return {PlacedRect(parent.x, parent.y, w1, parent.h),
                PlacedRect(parent.x + w1, parent.y, w2, parent.h)};
    }
    return {PlacedRect(parent.x + w2, parent.y, w1, parent.h),
            PlacedRect(parent.x, parent.y, w2, parent.h)};
}

std::pair<double, double> child_target_ratios(double parent_ratio, Orientation orientation,
                                              double s1, double s2) {
    if (!(parent_ratio > 0.0) || !(s1 > 0.0) || !(s2 > 0.0))
        throw error(errc::invalid_argument, "child_target_ratios requires positive inputs");
    const double total = s1 + s2;
    if (orientation == Orientation::vertical)
        return {parent_ratio * s1 / total, parent_ratio * s2 / total};
    return {parent_ratio * total / s1, parent_ratio * total / s2};
}

} // namespace implace
