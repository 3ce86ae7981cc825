#include "safe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace safe {

namespace {

double distance(const ObjectiveVector& u, const ObjectiveVector& v)
{
    const double d1 = u.f1 - v.f1;
    const double d2 = u.f2 - v.f2;
    return std::sqrt(d1 * d1 + d2 * d2);
}

// Nearest-point search over points sorted by f1: start at the insertion
// position and walk outward until the f1 gap alone exceeds the best distance.
double nearest(const ObjectiveVector& v, std::span<const ObjectiveVector> sorted)
{
    const auto n = static_cast<std::ptrdiff_t>(sorted.size());
    const auto pos = std::lower_bound(sorted.begin(), sorted.end(), v.f1,
                                      [](const ObjectiveVector& p, double f1) { return p.f1 < f1; }) -
                     sorted.begin();
    double best = INFINITY;
    for (std::ptrdiff_t i = pos; i < n; ++i) {
        if (sorted[i].f1 - v.f1 > best) break;
        best = std::min(best, distance(v, sorted[i]));
    }
    for (std::ptrdiff_t i = pos - 1; i >= 0; --i) {
        if (v.f1 - sorted[i].f1 > best) break;
        best = std::min(best, distance(v, sorted[i]));
    }
    return best;
}

} // namespace

IgdResult igd(std::span<const ObjectiveVector> true_front, std::span<const ObjectiveVector> produced)
{
    if (true_front.empty()) throw std::invalid_argument("igd: empty true front");
    if (produced.empty()) throw std::invalid_argument("igd: empty produced front");

    std::vector<ObjectiveVector> sorted(produced.begin(), produced.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const ObjectiveVector& l, const ObjectiveVector& r) { return l.f1 < r.f1; });

    double sum = 0.0;
    for (const auto& v : true_front) sum += nearest(v, sorted);
    return {sum / static_cast<double>(true_front.size()), true_front.size(), produced.size()};
}

Summary summarize(std::span<const double> values)
{
    if (values.empty()) throw std::invalid_argument("summarize: no values");
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    if (values.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

} // namespace safe
