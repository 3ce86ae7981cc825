#include "safe/engine.hpp"

#include "safe/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace safe {

std::array<double, 2> normalized_weights(const ObjFnGenome& w)
{
    const double total = w.a() + w.b();
    if (total == 0.0) return {0.5, 0.5};
    return {w.a() / total, w.b() / total};
}

double objfn_score(const ObjFnGenome& w, const ObjectiveVector& f)
{
    const auto [wa, wb] = normalized_weights(w);
    return 1.0 / std::max(wa * f.f1 + wb * f.f2, kScoreFloor);
}

std::vector<ScoredSolution> score_solutions(std::span<const SolutionGenome> solutions,
                                            std::span<const ObjFnGenome> objfns, ProblemId problem)
{
    std::vector<std::array<double, 2>> weights;
    weights.reserve(objfns.size());
    for (const auto& o : objfns) weights.push_back(normalized_weights(o));

    std::vector<ScoredSolution> scored;
    scored.reserve(solutions.size());
    for (const auto& s : solutions) scored.push_back({s, evaluate(problem, s.genes), 0.0});

    // 1/x is monotone on the floored sums, so the best score is the
    // reciprocal of the smallest floored sum.
    for (auto& s : scored) {
        double lowest = INFINITY;
        for (const auto& [wa, wb] : weights) {
            lowest = std::min(lowest, std::max(wa * s.objectives.f1 + wb * s.objectives.f2, kScoreFloor));
        }
        s.fitness = 1.0 / lowest;
    }
    return scored;
}

std::vector<ScoredObjFn> score_objfns(std::span<const ObjFnGenome> objfns, const NoveltyArchive& archive,
                                      std::size_t k)
{
    const auto& past = archive.entries();
    std::vector<double> sq;
    sq.reserve(objfns.size() + past.size());
    auto sqdist = [](const ObjFnGenome& u, const ObjFnGenome& v) {
        const double da = u.a() - v.a();
        const double db = u.b() - v.b();
        return da * da + db * db;
    };

    std::vector<ScoredObjFn> scored;
    scored.reserve(objfns.size());
    for (std::size_t i = 0; i < objfns.size(); ++i) {
        sq.clear();
        for (std::size_t j = 0; j < objfns.size(); ++j) {
            if (j != i) sq.push_back(sqdist(objfns[i], objfns[j]));
        }
        for (const auto& p : past) sq.push_back(sqdist(objfns[i], p));

        double novelty = 0.0;
        const std::size_t count = std::min(k, sq.size());
        if (count > 0) {
            const auto mid = sq.begin() + static_cast<std::ptrdiff_t>(count);
            std::nth_element(sq.begin(), mid - 1, sq.end());
            std::sort(sq.begin(), mid);
            double sum = 0.0;
            for (auto it = sq.begin(); it != mid; ++it) sum += std::sqrt(*it);
            novelty = sum / static_cast<double>(count);
        }
        scored.push_back({objfns[i], novelty, novelty});
    }
    return scored;
}

void update_archive(NoveltyArchive& archive, std::span<const ScoredObjFn> scored)
{
    if (scored.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < scored.size(); ++i) {
        if (scored[i].novelty > scored[best].novelty) best = i;
    }
    archive.push(scored[best].genome);
}

SafeState initial_state(ProblemId problem, const EvolutionParams& params)
{
    SafeState state{{}, {}, NoveltyArchive(params.archive_capacity), 0, {}, Rng(params.seed)};
    state.solutions.reserve(params.solution_pop_size);
    for (std::size_t i = 0; i < params.solution_pop_size; ++i) {
        state.solutions.push_back(init_solution(problem, state.rng));
    }
    state.objfns.reserve(params.objfn_pop_size);
    for (std::size_t i = 0; i < params.objfn_pop_size; ++i) state.objfns.push_back(init_objfn(state.rng));
    return state;
}

GenerationScores score_and_track(SafeState& state, ProblemId problem, const EvolutionParams& params)
{
    GenerationScores scores{score_solutions(state.solutions, state.objfns, problem),
                            score_objfns(state.objfns, state.archive, params.novelty_k)};
    for (const auto& s : scores.solutions) state.front.insert({s.objectives, s.genome});
    return scores;
}

namespace {

template <typename Scored>
std::vector<double> fitness_of(const std::vector<Scored>& scored)
{
    std::vector<double> f;
    f.reserve(scored.size());
    for (const auto& s : scored) f.push_back(s.fitness);
    return f;
}

void advance(SafeState& state, ProblemId problem, const EvolutionParams& params, const GenerationScores& scores)
{
    update_archive(state.archive, scores.objfns);
    const auto& doms = domains(problem);
    state.solutions = next_generation<SolutionGenome>(state.solutions, fitness_of(scores.solutions), params,
                                                      doms, state.rng);
    state.objfns = next_generation<ObjFnGenome>(state.objfns, fitness_of(scores.objfns), params,
                                                kWeightDomains, state.rng);
    ++state.generation;
}

} // namespace

void step(SafeState& state, ProblemId problem, const EvolutionParams& params)
{
    const auto scores = score_and_track(state, problem, params);
    advance(state, problem, params, scores);
}

RunResult run(ProblemId problem, const EvolutionParams& params, const RunOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const auto tf = true_front(problem, options.tf_points);
    const std::size_t every = std::max<std::size_t>(options.trace_every, 1);

    RunResult result;
    SafeState state = initial_state(problem, params);
    for (std::size_t t = 0;; ++t) {
        const auto scores = score_and_track(state, problem, params);
        if (t % every == 0 || t == params.generations) {
            const auto pf = state.front.objectives();
            result.trace.push_back({t, igd(tf, pf).value, pf.size()});
        }
        if (t == params.generations) break;
        advance(state, problem, params, scores);
    }

    result.final_igd = result.trace.back().igd;
    result.front = std::move(state.front);
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace safe
