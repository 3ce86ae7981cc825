#include "safe/pareto.hpp"

#include <algorithm>

namespace safe {

bool ParetoFront::insert(const FrontEntry& candidate)
{
    const auto& c = candidate.objectives;
    auto by_f1 = [](const FrontEntry& e, double f1) { return e.objectives.f1 < f1; };

    // Last entry with f1 <= c.f1 has the smallest f2 among all such entries.
    auto upper = std::partition_point(entries_.begin(), entries_.end(),
                                      [&](const FrontEntry& e) { return e.objectives.f1 <= c.f1; });
    if (upper != entries_.begin() && std::prev(upper)->objectives.f2 <= c.f2) return false;

    // Entries with f1 >= c.f1 and f2 >= c.f2 form a contiguous run.
    auto first = std::lower_bound(entries_.begin(), entries_.end(), c.f1, by_f1);
    auto last = std::find_if(first, entries_.end(),
                             [&](const FrontEntry& e) { return e.objectives.f2 < c.f2; });
    if (first != last) {
        *first = candidate;
        entries_.erase(std::next(first), last);
    } else {
        entries_.insert(first, candidate);
    }
    return true;
}

std::vector<ObjectiveVector> ParetoFront::objectives() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.objectives);
    return out;
}

} // namespace safe
