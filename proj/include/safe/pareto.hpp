#pragma once

#include "safe/genome.hpp"
#include "safe/zdt.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace safe {

// Minimization dominance: u no worse in both objectives and strictly better in one.
constexpr bool dominates(const ObjectiveVector& u, const ObjectiveVector& v)
{
    return u.f1 <= v.f1 && u.f2 <= v.f2 && (u.f1 < v.f1 || u.f2 < v.f2);
}

struct FrontEntry {
    ObjectiveVector objectives;
    SolutionGenome genome;

    friend bool operator==(const FrontEntry&, const FrontEntry&) = default;
};

/// Unbounded archive of mutually non-dominated points.
///
/// Entries are kept sorted by ascending f1, which for a non-dominated set
/// means strictly descending f2. A candidate that is dominated by or equal
/// to an existing entry is rejected; otherwise it is added and every entry
/// it dominates is removed.
class ParetoFront {
public:
    // Returns true if the candidate was added.
    bool insert(const FrontEntry& candidate);

    const std::vector<FrontEntry>& entries() const { return entries_; }
    std::vector<ObjectiveVector> objectives() const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const ParetoFront&, const ParetoFront&) = default;

private:
    std::vector<FrontEntry> entries_;
};

} // namespace safe
