#ifndef IMPLACE_MERGE_MATH_HPP
#define IMPLACE_MERGE_MATH_HPP

#include <optional>
#include <utility>

#include "implace/model.hpp"

namespace implace {

enum class Orientation { vertical, horizontal };
enum class FirstPosition { top_or_left, bottom_or_right };

// Ratio intervals a pair of modules can realize in each merge direction.
// Empty optional means that direction admits no common pasted side.
struct OrientedIntervals {
    std::optional<AspectInterval> vertical;
    std::optional<AspectInterval> horizontal;
};

// How to cut a parent rectangle into its two sub-rectangles.
struct SplitSpec {
    Orientation orientation = Orientation::vertical;
    double first_area = 0.0;
    double second_area = 0.0;
    FirstPosition first_position = FirstPosition::top_or_left;

    SplitSpec() = default;
    SplitSpec(Orientation orientation_, double first_area_, double second_area_,
              FirstPosition first_position_)
        : orientation(orientation_), first_area(first_area_), second_area(second_area_),
          first_position(first_position_) {
        if (!(first_area > 0.0) || !(second_area > 0.0))
            throw error(errc::invalid_argument, "split areas must be positive");
    }
};

// Ratio interval of two modules stacked on a common width. The common
// width w ranges over the intersection of [sqrt(s_k/hi_k), sqrt(s_k/lo_k)];
// the composite ratio (s1+s2)/w^2 then spans the returned interval.
std::optional<AspectInterval> merged_interval_vertical(double s1, const AspectInterval &i1,
                                                       double s2, const AspectInterval &i2);

// Same for a side-by-side merge on a common height.
std::optional<AspectInterval> merged_interval_horizontal(double s1, const AspectInterval &i1,
                                                         double s2, const AspectInterval &i2);

// Both directions at once.
OrientedIntervals oriented_merge(double s1, const AspectInterval &i1, double s2,
                                 const AspectInterval &i2);

// Whether two modules merge into a composite whose ratio interval still
// reaches 1 from below, i.e. 1/(lambda_big - 1) <= s_big/s_small <= lambda_small - 1.
// Callers pass the larger module first.
bool check_merge_feasible(double s_big, double lambda_big, double s_small, double lambda_small);

// Bounding factor of the composite of two modules with area ratio
// alpha = s_big/s_small >= 1: min((1 + 1/alpha) lambda1, (1 + alpha) lambda2),
// lambda1 belonging to the larger module. Never below min(lambda1, lambda2).
double composite_bound(double lambda1, double lambda2, double alpha);

// Cut a parent rectangle into two children with the given areas. Vertical
// splits share the parent width, horizontal splits share the parent height.
// The first child occupies the position named by spec.first_position.
std::pair<PlacedRect, PlacedRect> split_realize(const PlacedRect &parent, const SplitSpec &spec);

// Ratios the two children of a split end up with, given the parent ratio.
std::pair<double, double> child_target_ratios(double parent_ratio, Orientation orientation,
                                              double s1, double s2);

} // namespace implace

#endif
