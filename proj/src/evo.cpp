#include "safe/evo.hpp"

namespace safe {

std::vector<std::string> validate(const EvolutionParams& params)
{
    std::vector<std::string> bad;
    auto check = [&](bool ok, const char* name) {
        if (!ok) bad.emplace_back(name);
    };
    check(params.solution_pop_size >= 2, "solution_pop_size");
    check(params.objfn_pop_size >= 2, "objfn_pop_size");
    check(params.tournament_size >= 1 && params.tournament_size <= params.solution_pop_size &&
              params.tournament_size <= params.objfn_pop_size,
          "tournament_size");
    check(params.crossover_rate >= 0.0 && params.crossover_rate <= 1.0, "crossover_rate");
    check(params.mutation_prob >= 0.0 && params.mutation_prob <= 1.0, "mutation_prob");
    check(params.elite_count < params.solution_pop_size && params.elite_count < params.objfn_pop_size,
          "elite_count");
    check(params.archive_capacity >= 1, "archive_capacity");
    check(params.novelty_k >= 1, "novelty_k");
    return bad;
}

SolutionGenome init_solution(ProblemId problem, Rng& rng)
{
    const auto& dom = domains(problem);
    SolutionGenome s;
    for (std::size_t i = 0; i < kNumGenes; ++i) s.genes[i] = rng.uniform(dom[i].lo, dom[i].hi);
    return s;
}

ObjFnGenome init_objfn(Rng& rng)
{
    ObjFnGenome o;
    o.genes[0] = rng.uniform01();
    o.genes[1] = rng.uniform01();
    return o;
}

std::size_t tournament_select(std::span<const double> fitness, std::size_t size, Rng& rng)
{
    if (fitness.empty()) throw std::invalid_argument("tournament_select: empty population");
    if (size == 0) throw std::invalid_argument("tournament_select: tournament size must be positive");
    std::size_t best = static_cast<std::size_t>(rng.below(fitness.size()));
    for (std::size_t t = 1; t < size; ++t) {
        const auto c = static_cast<std::size_t>(rng.below(fitness.size()));
        if (fitness[c] > fitness[best]) best = c;
    }
    return best;
}

std::vector<std::size_t> top_indices(std::span<const double> fitness, std::size_t count)
{
    std::vector<std::size_t> idx(fitness.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    count = std::min(count, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                      [&](std::size_t l, std::size_t r) {
                          return fitness[l] > fitness[r] || (fitness[l] == fitness[r] && l < r);
                      });
    idx.resize(count);
    return idx;
}

} // namespace safe
