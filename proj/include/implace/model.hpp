#ifndef IMPLACE_MODEL_HPP
#define IMPLACE_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "implace/error.hpp"

namespace implace {

// Default relative tolerance for geometric comparisons. Individual
// operations state their own tolerance where they need a different one.
inline constexpr double kDefaultEpsRel = 1e-9;

// Rectangular block with fixed area and free dimensions. Legal shapes are
// those with height/width ratio inside [1/bounding_factor, bounding_factor].
struct SoftModule {
    std::string name;
    double area = 0.0;
    double bounding_factor = 1.0;

    SoftModule() = default;
    SoftModule(std::string name_, double area_, double bounding_factor_)
        : name(std::move(name_)), area(area_), bounding_factor(bounding_factor_) {
        if (name.empty())
            throw error(errc::invalid_argument, "module name must be nonempty");
        if (!(area > 0.0))
            throw error(errc::invalid_argument, "module '" + name + "': area must be positive");
        if (!(bounding_factor >= 1.0))
            throw error(errc::invalid_argument,
                        "module '" + name + "': bounding factor must be >= 1");
    }
};

// The fixed outline every module must be placed inside.
struct Circuit {
    double width = 0.0;
    double height = 0.0;

    Circuit() = default;
    Circuit(double width_, double height_) : width(width_), height(height_) {
        if (!(width > 0.0) || !(height > 0.0))
            throw error(errc::invalid_argument, "circuit dimensions must be positive");
    }

    double aspect_ratio() const { return height / width; }
    double area() const { return width * height; }
};

// Closed interval of legal height/width ratios.
struct AspectInterval {
    double lo = 1.0;
    double hi = 1.0;

    AspectInterval() = default;
    AspectInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo > 0.0) || !(lo <= hi))
            throw error(errc::invalid_argument, "aspect interval requires 0 < lo <= hi");
    }

    // Ratio interval of the same shapes rotated a quarter turn.
    AspectInterval reciprocal() const { return AspectInterval(1.0 / hi, 1.0 / lo); }

    bool contains(double ratio, double eps_rel = kDefaultEpsRel) const {
        return ratio >= lo * (1.0 - eps_rel) && ratio <= hi * (1.0 + eps_rel);
    }
};

// Axis-aligned placed rectangle: (x, y) is the bottom-left corner.
// The validating constructor rejects nonpositive dimensions; the default
// constructor exists so deserialized layouts can carry arbitrary values
// into the verifier, which re-checks everything.
struct PlacedRect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    PlacedRect() = default;
    PlacedRect(double x_, double y_, double w_, double h_) : x(x_), y(y_), w(w_), h(h_) {
        if (!(w > 0.0) || !(h > 0.0))
            throw error(errc::invalid_argument, "rect dimensions must be positive");
    }

    double x2() const { return x + w; }
    double y2() const { return y + h; }
    double area() const { return w * h; }
    double aspect_ratio() const { return h / w; }
};

struct LayoutEntry {
    std::string name;
    PlacedRect rect;
};

// Realized placement: one rectangle per module, in a stable order.
struct Layout {
    Circuit circuit;
    std::vector<LayoutEntry> placements;

    Layout() = default;
    Layout(Circuit circuit_, std::vector<LayoutEntry> placements_);

    const PlacedRect *find(const std::string &name) const;
};

using Net = std::vector<std::string>;

// A problem instance: the outline, the soft modules, and an optional
// netlist used only for wirelength reporting.
struct Instance {
    Circuit circuit;
    std::vector<SoftModule> modules;
    std::vector<Net> nets;
    std::map<std::string, std::string> meta; // free-form, preserved by serialization

    Instance() = default;
    Instance(Circuit circuit_, std::vector<SoftModule> modules_, std::vector<Net> nets_ = {},
             std::map<std::string, std::string> meta_ = {});
};

// Legal ratio interval [1/lambda, lambda] of a module.
AspectInterval interval_of_module(const SoftModule &m);

// Sum of module areas in input order. Throws invalid_instance when empty.
double total_area(const std::vector<SoftModule> &modules);

} // namespace implace

#endif
