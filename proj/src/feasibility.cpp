#include "implace/feasibility.hpp"

#include <algorithm>

namespace implace {

namespace {

std::vector<double> sorted_areas(const Instance &instance) {
    if (instance.modules.size() < 2)
        throw error(errc::invalid_instance, "feasibility checks need at least 2 modules");
    std::vector<double> areas;
    areas.reserve(instance.modules.size());
    for (const auto &m : instance.modules)
        areas.push_back(m.area);
    std::sort(areas.begin(), areas.end(), std::greater<>());
    return areas;
}

// max_i s_i / sum_{j>i} s_j over the non-increasing sequence.
double imp_worst_ratio(const std::vector<double> &areas) {
    const std::size_t n = areas.size();
    std::vector<double> suffix(n, 0.0);
    double running = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        suffix[i] = running;
        running += areas[i];
    }
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        worst = std::max(worst, areas[i] / suffix[i]);
    return worst;
}

// max_i s_i / s_{i+1} over the non-increasing sequence.
double zds_worst_ratio(const std::vector<double> &areas) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < areas.size(); ++i)
        worst = std::max(worst, areas[i] / areas[i + 1]);
    return worst;
}

FeasibilityReport build_report(const Instance &instance, double worst_ratio) {
    FeasibilityReport report;
    report.worst_ratio = worst_ratio;

    bool uniform = true;
    double lambda = instance.modules.front().bounding_factor;
    double min_lambda = lambda;
    for (const auto &m : instance.modules) {
        if (m.bounding_factor != lambda)
            uniform = false;
        min_lambda = std::min(min_lambda, m.bounding_factor);
    }
    if (uniform)
        report.uniform_lambda = lambda;
    report.lambda_ok = uniform && lambda >= 3.0;

    // With non-uniform factors the thresholds use min lambda_i, which is
    // conservative; guaranteed is false there regardless.
    const double effective = min_lambda;
    report.circuit_ratio = instance.circuit.aspect_ratio();
    report.circuit_ratio_ok =
        report.circuit_ratio >= 1.0 / effective && report.circuit_ratio <= effective;
    report.condition_ok = worst_ratio <= effective - 1.0;
    report.guaranteed =
        uniform && report.lambda_ok && report.circuit_ratio_ok && report.condition_ok;
    return report;
}

} // namespace

FeasibilityReport check_imp_condition(const Instance &instance) {
    return build_report(instance, imp_worst_ratio(sorted_areas(instance)));
}

FeasibilityReport check_zds_condition(const Instance &instance) {
    return build_report(instance, zds_worst_ratio(sorted_areas(instance)));
}

DominanceGap dominance_gap(const Instance &instance) {
    const std::vector<double> areas = sorted_areas(instance);
    DominanceGap gap{imp_worst_ratio(areas), zds_worst_ratio(areas)};
    if (gap.imp_worst > gap.zds_worst)
        throw error(errc::internal, "dominance inequality violated");
    return gap;
}

} // namespace implace
