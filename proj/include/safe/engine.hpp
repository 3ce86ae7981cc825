#pragma once

#include "safe/evo.hpp"
#include "safe/genome.hpp"
#include "safe/pareto.hpp"
#include "safe/rng.hpp"
#include "safe/zdt.hpp"

#include <cstddef>
#include <deque>
#include <functional>
#include <span>
#include <vector>

namespace safe {

// Floor applied to the weighted objective sum before taking its reciprocal.
inline constexpr double kScoreFloor = 1e-12;

struct ScoredSolution {
    SolutionGenome genome;
    ObjectiveVector objectives;
    double fitness;
};

struct ScoredObjFn {
    ObjFnGenome genome;
    double novelty;
    double fitness;
};

// Weights normalized to a convex pair; (0.5, 0.5) when a + b == 0.
std::array<double, 2> normalized_weights(const ObjFnGenome& w);

// Reciprocal of the normalized weighted sum, floored at kScoreFloor.
double objfn_score(const ObjFnGenome& w, const ObjectiveVector& f);

/// Scores every solution against every objective function; a solution's
/// fitness is its best (highest) score.
std::vector<ScoredSolution> score_solutions(std::span<const SolutionGenome> solutions,
                                            std::span<const ObjFnGenome> objfns, ProblemId problem);

/// FIFO store of past objective-function genomes used as extra novelty neighbors.
class NoveltyArchive {
public:
    explicit NoveltyArchive(std::size_t capacity = 1000) : capacity_(capacity) {}

    void push(const ObjFnGenome& g)
    {
        entries_.push_back(g);
        while (entries_.size() > capacity_) entries_.pop_front();
    }

    const std::deque<ObjFnGenome>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }

    friend bool operator==(const NoveltyArchive&, const NoveltyArchive&) = default;

private:
    std::size_t capacity_;
    std::deque<ObjFnGenome> entries_;
};

/// Genotypic novelty: mean Euclidean distance in (a, b) to the k nearest
/// among the other current objective functions and the archive. Fewer than
/// k candidates averages over all of them; no candidates gives 0.
std::vector<ScoredObjFn> score_objfns(std::span<const ObjFnGenome> objfns, const NoveltyArchive& archive,
                                      std::size_t k);

// Appends the generation's most novel genome (ties by lower index).
void update_archive(NoveltyArchive& archive, std::span<const ScoredObjFn> scored);

struct SafeState {
    std::vector<SolutionGenome> solutions;
    std::vector<ObjFnGenome> objfns;
    NoveltyArchive archive;
    std::size_t generation = 0;
    ParetoFront front;
    Rng rng;

    friend bool operator==(const SafeState&, const SafeState&) = default;
};

// Random initial populations; draws solutions first, then objective functions.
SafeState initial_state(ProblemId problem, const EvolutionParams& params);

// Scores both populations and folds the solutions into the front.
struct GenerationScores {
    std::vector<ScoredSolution> solutions;
    std::vector<ScoredObjFn> objfns;
};
GenerationScores score_and_track(SafeState& state, ProblemId problem, const EvolutionParams& params);

/// One SAFE generation: score solutions, score objective functions by
/// novelty, update the front, update the archive, then reproduce both
/// populations (solutions first).
void step(SafeState& state, ProblemId problem, const EvolutionParams& params);

struct TracePoint {
    std::size_t generation;
    double igd;
    std::size_t front_size;
};

struct RunOptions {
    std::size_t tf_points = 1000;
    // Record every n-th generation; generation 0 and the last are always recorded.
    std::size_t trace_every = 1;
};

struct RunResult {
    ParetoFront front;
    std::vector<TracePoint> trace;
    double final_igd = 0.0;
    double wall_time_s = 0.0;
};

/// Runs params.generations steps from a fresh random state. The trace point
/// for generation t reflects the front after t reproduction steps plus the
/// scoring of the resulting population, so trace entries span 0..G.
RunResult run(ProblemId problem, const EvolutionParams& params, const RunOptions& options = {});

} // namespace safe
