#pragma once

#include "safe/zdt.hpp"

#include <array>

namespace safe {

// A candidate decision vector for one of the ZDT problems.
struct SolutionGenome {
    std::array<double, kNumGenes> genes{};

    friend bool operator==(const SolutionGenome&, const SolutionGenome&) = default;
};

// A candidate weighting [a, b] of the two objectives, a and b in [0, 1].
struct ObjFnGenome {
    std::array<double, 2> genes{};

    double a() const { return genes[0]; }
    double b() const { return genes[1]; }

    friend bool operator==(const ObjFnGenome&, const ObjFnGenome&) = default;
};

inline constexpr std::array<GeneDomain, 2> kWeightDomains = {GeneDomain{0.0, 1.0}, GeneDomain{0.0, 1.0}};

} // namespace safe
