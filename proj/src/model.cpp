#include "implace/model.hpp"

#include <unordered_map>
#include <unordered_set>

namespace implace {

Layout::Layout(Circuit circuit_, std::vector<LayoutEntry> placements_)
    : circuit(circuit_), placements(std::move(placements_)) {
    std::unordered_set<std::string> seen;
    for (const auto &entry : placements) {
        if (!seen.insert(entry.name).second)
            throw error(errc::invalid_layout, "duplicate placement for module '" + entry.name + "'");
    }
}

const PlacedRect *Layout::find(const std::string &name) const {
    for (const auto &entry : placements)
        if (entry.name == name)
            return &entry.rect;
    return nullptr;
}

Instance::Instance(Circuit circuit_, std::vector<SoftModule> modules_, std::vector<Net> nets_,
                   std::map<std::string, std::string> meta_)
    : circuit(circuit_), modules(std::move(modules_)), nets(std::move(nets_)),
      meta(std::move(meta_)) {
    std::unordered_set<std::string> names;
    for (const auto &m : modules) {
        if (!(m.area > 0.0) || !(m.bounding_factor >= 1.0) || m.name.empty())
            throw error(errc::invalid_instance, "invalid module '" + m.name + "'");
        if (!names.insert(m.name).second)
            throw error(errc::invalid_instance, "duplicate module name '" + m.name + "'");
    }
    for (const auto &net : nets) {
        if (net.size() < 2)
            throw error(errc::invalid_instance, "net must have at least 2 members");
        for (const auto &member : net)
            if (!names.count(member))
                throw error(errc::invalid_instance, "net references unknown module '" + member + "'");
    }
}

AspectInterval interval_of_module(const SoftModule &m) {
    return AspectInterval(1.0 / m.bounding_factor, m.bounding_factor);
}

double total_area(const std::vector<SoftModule> &modules) {
    if (modules.empty())
        throw error(errc::invalid_instance, "total_area of empty module list");
    double sum = 0.0;
    for (const auto &m : modules)
        sum += m.area;
    return sum;
}

} // namespace implace
