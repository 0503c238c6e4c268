#ifndef IMPLACE_SVG_HPP
#define IMPLACE_SVG_HPP

#include <string>

#include "implace/model.hpp"

namespace implace {

// SVG 1.1 picture of a layout: one labeled rectangle per module plus the
// stroked circuit outline. Modules whose realized ratio falls outside their
// interval are filled in a warning color. The y axis is flipped so it grows
// upward, matching the layout coordinates.
std::string render_svg(const Layout &layout, const Instance &instance);

} // namespace implace

#endif
