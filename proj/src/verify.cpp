#include "implace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>

namespace implace {

namespace {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

struct PairChecker {
    const std::vector<const LayoutEntry *> &entries;
    double slack;
    std::vector<Violation> &out;

    // Violation of the no-overlap constraint beyond tolerance means the
    // penetration depth exceeds the slack on both axes.
    void check_pair(std::size_t i, std::size_t j) {
        const PlacedRect &a = entries[i]->rect;
        const PlacedRect &b = entries[j]->rect;
        const double dx = std::min(a.x2(), b.x2()) - std::max(a.x, b.x);
        const double dy = std::min(a.y2(), b.y2()) - std::max(a.y, b.y);
        if (dx > slack && dy > slack) {
            std::string first = entries[i]->name;
            std::string second = entries[j]->name;
            if (second < first)
                std::swap(first, second);
            out.push_back(Violation{ViolationKind::overlap, first, second, dx * dy,
                                    "modules '" + first + "' and '" + second +
                                        "' overlap with area " + format_double(dx * dy)});
        }
    }

    void run_quadratic() {
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j)
                check_pair(i, j);
    }

    // Plane sweep over x with a y-ordered set of active intervals. Each
    // rect is shrunk by slack/2 per side so open-interval intersection is
    // exactly "depth > slack" on both axes. While the layout is overlap
    // free the active intervals stay pairwise disjoint and neighbor checks
    // are exhaustive.
    void run_sweep() {
        struct Event {
            double x;
            bool open;
            std::size_t index;
        };
        const double half = slack / 2.0;
        std::vector<Event> events;
        events.reserve(entries.size() * 2);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const PlacedRect &r = entries[i]->rect;
            if (r.w <= slack || r.h <= slack)
                continue; // too thin to penetrate anything beyond the slack
            events.push_back(Event{r.x + half, true, i});
            events.push_back(Event{r.x2() - half, false, i});
        }
        std::sort(events.begin(), events.end(), [](const Event &a, const Event &b) {
            if (a.x != b.x)
                return a.x < b.x;
            return a.open < b.open; // closes first: touching rects never pair
        });

        std::multimap<double, std::size_t> active; // shrunk y1 -> entry index
        std::vector<std::multimap<double, std::size_t>::iterator> where(entries.size(),
                                                                        active.end());
        for (const Event &event : events) {
            if (!event.open) {
                active.erase(where[event.index]);
                continue;
            }
            const PlacedRect &r = entries[event.index]->rect;
            const double y1 = r.y + half;
            const double y2 = r.y2() - half;
            auto it = active.emplace(y1, event.index);
            for (auto back = it; back != active.begin();) {
                --back;
                const PlacedRect &other = entries[back->second]->rect;
                if (other.y2() - half <= y1)
                    break;
                check_pair(std::min(back->second, event.index),
                           std::max(back->second, event.index));
            }
            for (auto fwd = std::next(it); fwd != active.end(); ++fwd) {
                if (fwd->first >= y2)
                    break;
                check_pair(std::min(fwd->second, event.index),
                           std::max(fwd->second, event.index));
            }
            where[event.index] = it;
        }
    }
};

} // namespace

double VerifyReport::max_violation() const {
    double worst = 0.0;
    for (const auto &v : violations)
        worst = std::max(worst, v.magnitude);
    return worst;
}

VerifyReport verify(const Layout &layout, const Instance &instance, double eps_rel) {
    std::unordered_map<std::string, const LayoutEntry *> by_name;
    by_name.reserve(layout.placements.size());
    for (const auto &entry : layout.placements) {
        if (!by_name.emplace(entry.name, &entry).second)
            throw error(errc::invalid_layout, "duplicate placement for module '" + entry.name + "'");
    }
    if (by_name.size() != instance.modules.size())
        throw error(errc::invalid_layout, "layout must place exactly the instance's modules");

    // Everything below iterates in instance order, so the report does not
    // depend on the order of the placements map.
    std::vector<const LayoutEntry *> entries;
    entries.reserve(instance.modules.size());
    for (const auto &m : instance.modules) {
        const auto it = by_name.find(m.name);
        if (it == by_name.end())
            throw error(errc::invalid_layout, "no placement for module '" + m.name + "'");
        entries.push_back(it->second);
    }

    VerifyReport report;
    const double W = layout.circuit.width;
    const double H = layout.circuit.height;
    const double slack = eps_rel * std::min(W, H);

    std::vector<const LayoutEntry *> sound; // entries with usable dimensions
    sound.reserve(entries.size());
    double covered = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const PlacedRect &r = entries[i]->rect;
        const std::string &name = entries[i]->name;
        covered += r.w * r.h;
        if (!(r.w > 0.0) || !(r.h > 0.0) || !std::isfinite(r.w) || !std::isfinite(r.h)) {
            report.violations.push_back(
                Violation{ViolationKind::dimension_mismatch, name, "", 0.0,
                          "module '" + name + "' has nonpositive dimensions " +
                              format_double(r.w) + " x " + format_double(r.h)});
            continue;
        }
        sound.push_back(entries[i]);

        const AspectInterval allowed = interval_of_module(instance.modules[i]);
        const double ratio = r.aspect_ratio();
        if (!allowed.contains(ratio, eps_rel)) {
            const double magnitude = std::max(allowed.lo / ratio, ratio / allowed.hi) - 1.0;
            report.violations.push_back(
                Violation{ViolationKind::aspect_out_of_range, name, "", magnitude,
                          "module '" + name + "' has ratio " + format_double(ratio) +
                              " outside [" + format_double(allowed.lo) + ", " +
                              format_double(allowed.hi) + "]"});
        }

        const double excess = std::max(std::max(0.0 - r.x, 0.0 - r.y),
                                       std::max(r.x2() - W, r.y2() - H));
        if (excess > slack) {
            report.violations.push_back(
                Violation{ViolationKind::out_of_bounds, name, "", excess,
                          "module '" + name + "' leaves the circuit by " + format_double(excess)});
        }
    }

    PairChecker checker{sound, slack, report.violations};
    if (sound.size() <= 4096)
        checker.run_quadratic();
    else
        checker.run_sweep();

    report.deadspace_fraction = std::clamp(1.0 - covered / (W * H), 0.0, 1.0);
    if (!instance.nets.empty())
        report.hpwl = hpwl(layout, instance.nets);

    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation &a, const Violation &b) {
                  if (a.kind != b.kind)
                      return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                  if (a.module_a != b.module_a)
                      return a.module_a < b.module_a;
                  return a.module_b < b.module_b;
              });
    report.ok = report.violations.empty();
    return report;
}

double hpwl(const Layout &layout, const std::vector<Net> &nets) {
    std::unordered_map<std::string, const PlacedRect *> by_name;
    by_name.reserve(layout.placements.size());
    for (const auto &entry : layout.placements)
        by_name.emplace(entry.name, &entry.rect);

    double total = 0.0;
    for (const auto &net : nets) {
        double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
        bool first = true;
        for (const auto &member : net) {
            const auto it = by_name.find(member);
            if (it == by_name.end())
                throw error(errc::invalid_layout, "net member '" + member + "' is not placed");
            const PlacedRect &r = *it->second;
            const double cx = r.x + r.w / 2.0;
            const double cy = r.y + r.h / 2.0;
            if (first) {
                min_x = max_x = cx;
                min_y = max_y = cy;
                first = false;
            } else {
                min_x = std::min(min_x, cx);
                max_x = std::max(max_x, cx);
                min_y = std::min(min_y, cy);
                max_y = std::max(max_y, cy);
            }
        }
        total += (max_x - min_x) + (max_y - min_y);
    }
    return total;
}

} // namespace implace
