#ifndef IMPLACE_JSON_IO_HPP
#define IMPLACE_JSON_IO_HPP

#include <string>
#include <string_view>

#include "implace/model.hpp"

namespace implace {

// Instance file:
//   {"circuit": {"width": W, "height": H},
//    "modules": [{"name": "...", "area": A, "lambda": L}, ...],
//    "nets": [["a", "b", ...], ...],          (optional)
//    "meta": {"key": "value", ...}}           (optional)
// Layout file:
//   {"circuit": {"width": W, "height": H},
//    "placements": [{"name": "...", "x":, "y":, "w":, "h":}, ...]}
// Numbers are written as shortest round-trip decimals, so write-then-read
// reproduces every value exactly.

std::string instance_to_json(const Instance &instance);
Instance instance_from_json(std::string_view text);

std::string layout_to_json(const Layout &layout);
Layout layout_from_json(std::string_view text);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view content);

} // namespace implace

#endif
