#include "implace/instance_gen.hpp"

#include <algorithm>
#include <cmath>

#include "implace/rng.hpp"

namespace implace {

namespace {

constexpr double kAreaCapFactor = 1e6; // relative to the smallest area s_n = 1

void validate(const GenSpec &spec) {
    if (spec.n < 2)
        throw error(errc::invalid_spec, "generator needs n >= 2");
    if (!(spec.lambda >= 1.0))
        throw error(errc::invalid_spec, "generator needs lambda >= 1");
    if (!(spec.ratio_spread > 0.0) || spec.ratio_spread > 1.0)
        throw error(errc::invalid_spec, "ratio_spread must be in (0, 1]");
    const bool constrained = spec.mode != GenMode::unconstrained;
    if (constrained && spec.lambda < 3.0)
        throw error(errc::invalid_spec, "constrained modes need lambda >= 3");
    if ((spec.mode == GenMode::imp_feasible || spec.mode == GenMode::zds_feasible) &&
        spec.ratio_spread * (spec.lambda - 1.0) < 1.0)
        throw error(errc::invalid_spec, "ratio_spread * (lambda - 1) must be >= 1");
}

std::vector<double> build_areas(const GenSpec &spec, SplitMix64 &rng) {
    const std::size_t n = static_cast<std::size_t>(spec.n);
    std::vector<double> areas(n);
    const double bound = spec.ratio_spread * (spec.lambda - 1.0);

    switch (spec.mode) {
    case GenMode::imp_feasible: {
        // Rear-to-front with s_i at most a fraction of the suffix sum, so
        // the dominance condition holds by construction.
        areas[n - 1] = 1.0;
        double suffix = 1.0;
        for (std::size_t i = n - 1; i-- > 0;) {
            const double hi = std::min(bound * suffix, kAreaCapFactor);
            areas[i] = rng.uniform(areas[i + 1], std::max(areas[i + 1], hi));
            suffix += areas[i];
        }
        break;
    }
    case GenMode::zds_feasible: {
        areas[n - 1] = 1.0;
        for (std::size_t i = n - 1; i-- > 0;) {
            const double hi = std::min(bound * areas[i + 1], kAreaCapFactor);
            areas[i] = rng.uniform(areas[i + 1], std::max(areas[i + 1], hi));
        }
        break;
    }
    case GenMode::adversarial: {
        // One module balancing all the unit modules together: the suffix
        // condition holds with worst ratio 1, the adjacent-pair condition
        // fails with worst ratio n - 1.
        areas[0] = static_cast<double>(spec.n - 1);
        std::fill(areas.begin() + 1, areas.end(), 1.0);
        break;
    }
    case GenMode::unconstrained: {
        for (auto &a : areas)
            a = rng.uniform(1.0, 1000.0);
        std::sort(areas.begin(), areas.end(), std::greater<>());
        break;
    }
    }
    return areas;
}

} // namespace

const char *gen_mode_name(GenMode mode) {
    switch (mode) {
    case GenMode::imp_feasible:
        return "imp-feasible";
    case GenMode::zds_feasible:
        return "zds-feasible";
    case GenMode::adversarial:
        return "adversarial";
    case GenMode::unconstrained:
        return "unconstrained";
    }
    return "unknown";
}

Instance generate(const GenSpec &spec) {
    validate(spec);
    SplitMix64 rng(spec.seed);

    const std::vector<double> areas = build_areas(spec, rng);
    std::vector<SoftModule> modules;
    modules.reserve(areas.size());
    for (std::size_t i = 0; i < areas.size(); ++i)
        modules.emplace_back("m" + std::to_string(i + 1), areas[i], spec.lambda);

    double total = 0.0;
    for (const double a : areas)
        total += a;

    // The circuit ratio stays strictly inside the legal band unless the
    // spread is pushed to the boundary.
    const double band = std::max(1.0, spec.ratio_spread * spec.lambda);
    const double gamma = rng.uniform(1.0 / band, band);
    const Circuit circuit(std::sqrt(total / gamma), std::sqrt(total * gamma));

    // Small random netlist for wirelength smoke tests.
    const std::size_t net_count = areas.size() / 2;
    const std::size_t max_pins = std::min<std::size_t>(5, areas.size());
    std::vector<Net> nets;
    nets.reserve(net_count);
    for (std::size_t i = 0; i < net_count; ++i) {
        const std::size_t pins = 2 + rng.next_below(max_pins - 1);
        Net net;
        while (net.size() < pins) {
            const auto pick = static_cast<std::size_t>(rng.next_below(areas.size()));
            const std::string &name = modules[pick].name;
            if (std::find(net.begin(), net.end(), name) == net.end())
                net.push_back(name);
        }
        nets.push_back(std::move(net));
    }

    std::map<std::string, std::string> meta;
    meta["generator"] = "splitmix64/1";
    meta["mode"] = gen_mode_name(spec.mode);
    meta["seed"] = std::to_string(spec.seed);
    meta["ratio_spread"] = std::to_string(spec.ratio_spread);

    return Instance(circuit, std::move(modules), std::move(nets), std::move(meta));
}

} // namespace implace
