#pragma once

#include "safe/genome.hpp"
#include "safe/rng.hpp"
#include "safe/zdt.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace safe {

struct EvolutionParams {
    std::size_t solution_pop_size = 500;
    std::size_t objfn_pop_size = 150;
    std::size_t generations = 3000;
    std::size_t tournament_size = 5;
    double crossover_rate = 0.8;
    double mutation_prob = 0.4;
    std::size_t elite_count = 2;
    std::size_t archive_capacity = 1000;
    std::size_t novelty_k = 15;
    std::uint64_t seed = 0;

    friend bool operator==(const EvolutionParams&, const EvolutionParams&) = default;
};

// Names of the fields that violate their constraints; empty when valid.
std::vector<std::string> validate(const EvolutionParams& params);

// Anything with a fixed-size `genes` array.
template <typename G>
concept Genome = requires(G g) {
    { g.genes.size() } -> std::convertible_to<std::size_t>;
    { g.genes[0] } -> std::convertible_to<double>;
};

SolutionGenome init_solution(ProblemId problem, Rng& rng);
ObjFnGenome init_objfn(Rng& rng);

/// Tournament of `size` contestants drawn uniformly with replacement. The
/// contestant with the highest fitness wins; on ties the earliest drawn wins.
/// Returns the index of the winner.
std::size_t tournament_select(std::span<const double> fitness, std::size_t size, Rng& rng);

/// Single-point crossover. With probability `rate` a cut c is drawn from
/// {1, ..., L-1} and the genes from c onward are swapped.
template <Genome G>
std::pair<G, G> crossover(const G& parent1, const G& parent2, double rate, Rng& rng)
{
    std::pair<G, G> children{parent1, parent2};
    const std::size_t len = parent1.genes.size();
    if (len < 2 || !rng.bernoulli(rate)) return children;
    const std::size_t cut = 1 + static_cast<std::size_t>(rng.below(len - 1));
    for (std::size_t i = cut; i < len; ++i) std::swap(children.first.genes[i], children.second.genes[i]);
    return children;
}

/// With probability `prob`, one uniformly chosen gene is replaced by a
/// fresh uniform draw from its domain.
template <Genome G>
G mutate(G genome, double prob, std::span<const GeneDomain> doms, Rng& rng)
{
    if (doms.size() != genome.genes.size()) throw std::invalid_argument("mutate: domain count mismatch");
    if (!rng.bernoulli(prob)) return genome;
    const std::size_t i = static_cast<std::size_t>(rng.below(genome.genes.size()));
    genome.genes[i] = rng.uniform(doms[i].lo, doms[i].hi);
    return genome;
}

// Indices of the `count` highest-fitness individuals, ties by lower index.
std::vector<std::size_t> top_indices(std::span<const double> fitness, std::size_t count);

/// Builds the next population: elites copied verbatim into the first slots,
/// the rest filled pairwise by tournament selection, crossover and mutation.
/// An odd final slot takes the first child of a fresh pair.
template <Genome G>
std::vector<G> next_generation(std::span<const G> population, std::span<const double> fitness,
                               const EvolutionParams& params, std::span<const GeneDomain> doms, Rng& rng)
{
    if (population.size() != fitness.size()) throw std::invalid_argument("next_generation: size mismatch");
    const std::size_t n = population.size();
    std::vector<G> next;
    next.reserve(n);
    for (std::size_t i : top_indices(fitness, std::min(params.elite_count, n))) next.push_back(population[i]);

    while (next.size() < n) {
        const auto& p1 = population[tournament_select(fitness, params.tournament_size, rng)];
        const auto& p2 = population[tournament_select(fitness, params.tournament_size, rng)];
        auto [c1, c2] = crossover(p1, p2, params.crossover_rate, rng);
        next.push_back(mutate(std::move(c1), params.mutation_prob, doms, rng));
        if (next.size() < n) next.push_back(mutate(std::move(c2), params.mutation_prob, doms, rng));
    }
    return next;
}

} // namespace safe
