#pragma once

// Brute-force reference computations. Deliberately naive and independent
// of the library's fast paths.

#include "safe/genome.hpp"
#include "safe/zdt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

// Table formulas written out per problem, no shared helpers.
inline safe::ObjectiveVector zdt(safe::ProblemId p, const safe::SolutionGenome& s)
{
    const auto& x = s.genes;
    double g = 0.0;
    if (p == safe::ProblemId::ZDT4) {
        g = 1.0 + 10.0 * 29.0;
        for (int i = 1; i < 30; ++i) g += x[i] * x[i] - 10.0 * std::cos(4.0 * std::numbers::pi * x[i]);
    } else {
        double sum = 0.0;
        for (int i = 1; i < 30; ++i) sum += x[i];
        g = 1.0 + 9.0 * sum / 29.0;
    }
    const double f1 = x[0];
    double f2 = 0.0;
    if (p == safe::ProblemId::ZDT2) f2 = 1.0 - (f1 / g) * (f1 / g);
    else if (p == safe::ProblemId::ZDT3) f2 = 1.0 - std::sqrt(f1 / g) - (f1 / g) * std::sin(10.0 * std::numbers::pi * f1);
    else f2 = 1.0 - std::sqrt(f1 / g);
    return {f1, f2};
}

// Every score O_j(S_i) computed explicitly, then the maximum.
inline std::vector<double> solution_fitness(safe::ProblemId p, const std::vector<safe::SolutionGenome>& sols,
                                            const std::vector<safe::ObjFnGenome>& objfns)
{
    std::vector<double> out;
    for (const auto& s : sols) {
        const auto f = zdt(p, s);
        std::vector<double> scores;
        for (const auto& o : objfns) {
            const double total = o.a() + o.b();
            const double a = total == 0.0 ? 0.5 : o.a() / total;
            const double b = total == 0.0 ? 0.5 : o.b() / total;
            double sum = a * f.f1 + b * f.f2;
            if (sum < 1e-12) sum = 1e-12;
            scores.push_back(1.0 / sum);
        }
        out.push_back(*std::max_element(scores.begin(), scores.end()));
    }
    return out;
}

// Full sort of all distances to the other members and the archive.
inline std::vector<double> novelty(const std::vector<safe::ObjFnGenome>& pop,
                                   const std::vector<safe::ObjFnGenome>& archive, std::size_t k)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        std::vector<double> d;
        for (std::size_t j = 0; j < pop.size(); ++j) {
            if (j != i) d.push_back(std::hypot(pop[i].a() - pop[j].a(), pop[i].b() - pop[j].b()));
        }
        for (const auto& q : archive) d.push_back(std::hypot(pop[i].a() - q.a(), pop[i].b() - q.b()));
        std::sort(d.begin(), d.end());
        const std::size_t n = std::min(k, d.size());
        double sum = 0.0;
        for (std::size_t t = 0; t < n; ++t) sum += d[t];
        out.push_back(n == 0 ? 0.0 : sum / static_cast<double>(n));
    }
    return out;
}

inline bool dominates(const safe::ObjectiveVector& u, const safe::ObjectiveVector& v)
{
    return !(v.f1 < u.f1) && !(v.f2 < u.f2) && !(u.f1 == v.f1 && u.f2 == v.f2);
}

// O(n^2) non-dominated filter, duplicates collapsed, sorted by f1.
inline std::vector<safe::ObjectiveVector> nondominated(const std::vector<safe::ObjectiveVector>& pts)
{
    std::vector<safe::ObjectiveVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < pts.size() && keep; ++j) {
            if (dominates(pts[j], pts[i])) keep = false;
        }
        if (keep && std::find(out.begin(), out.end(), pts[i]) == out.end()) out.push_back(pts[i]);
    }
    std::sort(out.begin(), out.end(), [](auto& l, auto& r) { return l.f1 < r.f1; });
    return out;
}

inline double igd(const std::vector<safe::ObjectiveVector>& tf, const std::vector<safe::ObjectiveVector>& pf)
{
    double sum = 0.0;
    for (const auto& v : tf) {
        double best = INFINITY;
        for (const auto& p : pf) best = std::min(best, std::hypot(v.f1 - p.f1, v.f2 - p.f2));
        sum += best;
    }
    return sum / static_cast<double>(tf.size());
}

// Exact with-replacement tournament win probabilities by enumerating every
// draw sequence (n^size of them), earliest-drawn wins ties.
inline std::vector<double> tournament_probabilities(const std::vector<double>& fitness, int size)
{
    const std::size_t n = fitness.size();
    std::vector<double> prob(n, 0.0);
    std::vector<std::size_t> draw(static_cast<std::size_t>(size), 0);
    double total = 0.0;
    for (;;) {
        std::size_t best = draw[0];
        for (std::size_t t = 1; t < draw.size(); ++t) {
            if (fitness[draw[t]] > fitness[best]) best = draw[t];
        }
        prob[best] += 1.0;
        total += 1.0;
        std::size_t pos = 0;
        while (pos < draw.size() && ++draw[pos] == n) draw[pos++] = 0;
        if (pos == draw.size()) break;
    }
    for (auto& p : prob) p /= total;
    return prob;
}

} // namespace oracle
