#ifndef IMPLACE_VERIFY_HPP
#define IMPLACE_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "implace/model.hpp"

namespace implace {

enum class ViolationKind {
    dimension_mismatch,
    aspect_out_of_range,
    overlap,
    out_of_bounds,
};

struct Violation {
    ViolationKind kind = ViolationKind::dimension_mismatch;
    std::string module_a;
    std::string module_b;    // overlap only
    double magnitude = 0.0;  // aspect excess / overlap area / bounds excess
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;
    double deadspace_fraction = 0.0;
    std::optional<double> hpwl;

    double max_violation() const;
};

// Independent legality check of a layout against its instance: positive
// dimensions, ratios within each module's interval, pairwise
// non-overlapping beyond eps_rel * min(W, H), containment in the outline,
// plus deadspace accounting and (when nets exist) wirelength. Recomputes
// everything from the raw rectangles.
VerifyReport verify(const Layout &layout, const Instance &instance,
                    double eps_rel = kDefaultEpsRel);

// Half-perimeter wirelength: per net, the bounding-box half-perimeter of
// the member rectangle centers.
double hpwl(const Layout &layout, const std::vector<Net> &nets);

} // namespace implace

#endif
