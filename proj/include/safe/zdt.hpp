#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace safe {

inline constexpr std::size_t kNumGenes = 30;

enum class ProblemId { ZDT1, ZDT2, ZDT3, ZDT4 };

inline constexpr std::array<ProblemId, 4> kAllProblems = {
    ProblemId::ZDT1, ProblemId::ZDT2, ProblemId::ZDT3, ProblemId::ZDT4};

// Lowercase name used in config files, CLI flags and output file names.
std::string_view to_string(ProblemId problem);
std::optional<ProblemId> parse_problem(std::string_view name);

struct GeneDomain {
    double lo;
    double hi;

    bool contains(double x) const { return x >= lo && x <= hi; }
    friend bool operator==(const GeneDomain&, const GeneDomain&) = default;
};

struct ObjectiveVector {
    double f1;
    double f2;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Domains = std::array<GeneDomain, kNumGenes>;

const Domains& domains(ProblemId problem);

// Distance-from-front term g(x). Exposed for tests of the g-minimum property.
double g_value(ProblemId problem, std::span<const double, kNumGenes> x);

// Throws DomainError if any gene lies outside its domain.
ObjectiveVector evaluate(ProblemId problem, std::span<const double, kNumGenes> x);

// Sampled analytic Pareto front, mutually non-dominated and sorted by f1.
std::vector<ObjectiveVector> true_front(ProblemId problem, std::size_t num_points = 1000);

} // namespace safe
