#include "safe/zdt.hpp"

#include "safe/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace safe {

std::string_view to_string(ProblemId problem)
{
    switch (problem) {
    case ProblemId::ZDT1: return "zdt1";
    case ProblemId::ZDT2: return "zdt2";
    case ProblemId::ZDT3: return "zdt3";
    case ProblemId::ZDT4: return "zdt4";
    }
    return "?";
}

std::optional<ProblemId> parse_problem(std::string_view name)
{
    for (auto p : kAllProblems) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

namespace {

Domains make_domains(GeneDomain first, GeneDomain rest)
{
    Domains d;
    d.fill(rest);
    d[0] = first;
    return d;
}

} // namespace

const Domains& domains(ProblemId problem)
{
    static const Domains unit = make_domains({0.0, 1.0}, {0.0, 1.0});
    static const Domains zdt4 = make_domains({0.0, 1.0}, {-5.0, 5.0});
    return problem == ProblemId::ZDT4 ? zdt4 : unit;
}

double g_value(ProblemId problem, std::span<const double, kNumGenes> x)
{
    constexpr double k = kNumGenes;
    double sum = 0.0;
    if (problem == ProblemId::ZDT4) {
        for (std::size_t i = 1; i < kNumGenes; ++i) {
            sum += x[i] * x[i] - 10.0 * std::cos(4.0 * std::numbers::pi * x[i]);
        }
        return 1.0 + 10.0 * (k - 1.0) + sum;
    }
    for (std::size_t i = 1; i < kNumGenes; ++i) sum += x[i];
    return 1.0 + 9.0 / (k - 1.0) * sum;
}

ObjectiveVector evaluate(ProblemId problem, std::span<const double, kNumGenes> x)
{
    const auto& dom = domains(problem);
    for (std::size_t i = 0; i < kNumGenes; ++i) {
        if (!dom[i].contains(x[i])) {
            throw DomainError("gene " + std::to_string(i) + " = " + std::to_string(x[i]) +
                              " outside its domain for " + std::string(to_string(problem)));
        }
    }

    const double f1 = x[0];
    const double g = g_value(problem, x);
    const double r = f1 / g;
    double f2 = 0.0;
    switch (problem) {
    case ProblemId::ZDT1:
    case ProblemId::ZDT4: f2 = 1.0 - std::sqrt(r); break;
    case ProblemId::ZDT2: f2 = 1.0 - r * r; break;
    case ProblemId::ZDT3: f2 = 1.0 - std::sqrt(r) - r * std::sin(10.0 * std::numbers::pi * f1); break;
    }
    return {f1, f2};
}

std::vector<ObjectiveVector> true_front(ProblemId problem, std::size_t num_points)
{
    if (num_points < 2) throw std::invalid_argument("true_front needs at least 2 points");

    auto at = [](std::size_t i, std::size_t n) {
        return static_cast<double>(i) / static_cast<double>(n - 1);
    };

    std::vector<ObjectiveVector> front;
    front.reserve(num_points);
    if (problem != ProblemId::ZDT3) {
        for (std::size_t i = 0; i < num_points; ++i) {
            const double t = at(i, num_points);
            front.push_back({t, problem == ProblemId::ZDT2 ? 1.0 - t * t : 1.0 - std::sqrt(t)});
        }
        return front;
    }

    // ZDT3: dense sample of the g = 1 curve, keep the non-dominated pieces.
    const std::size_t dense = 10 * num_points;
    ParetoFront filter;
    for (std::size_t i = 0; i < dense; ++i) {
        const double t = at(i, dense);
        filter.insert({{t, 1.0 - std::sqrt(t) - t * std::sin(10.0 * std::numbers::pi * t)}, {}});
    }
    const auto& kept = filter.entries();
    if (kept.size() <= num_points) {
        for (const auto& e : kept) front.push_back(e.objectives);
        return front;
    }
    // Thin by evenly spaced indices; endpoints always retained.
    for (std::size_t i = 0; i < num_points; ++i) {
        const std::size_t idx = (i * (kept.size() - 1)) / (num_points - 1);
        front.push_back(kept[idx].objectives);
    }
    return front;
}

} // namespace safe
