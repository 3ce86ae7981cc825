#include "oracles.hpp"

#include "safe/evo.hpp"
#include "safe/pareto.hpp"
#include "safe/zdt.hpp"

#include <doctest.h>

#include <cmath>

using namespace safe;

namespace {

SolutionGenome filled(double first, double rest)
{
    SolutionGenome s;
    s.genes.fill(rest);
    s.genes[0] = first;
    return s;
}

} // namespace

TEST_CASE("problem names round-trip and reject unknowns")
{
    for (auto p : kAllProblems) CHECK(parse_problem(to_string(p)) == p);
    CHECK_FALSE(parse_problem("zdt5"));
    CHECK_FALSE(parse_problem("ZDT1"));
    CHECK_FALSE(parse_problem(""));
}

TEST_CASE("domains")
{
    for (auto p : {ProblemId::ZDT1, ProblemId::ZDT2, ProblemId::ZDT3}) {
        const auto& d = domains(p);
        CHECK(d.size() == 30);
        for (const auto& g : d) CHECK(g == GeneDomain{0.0, 1.0});
    }
    const auto& d4 = domains(ProblemId::ZDT4);
    CHECK(d4[0] == GeneDomain{0.0, 1.0});
    for (std::size_t i = 1; i < 30; ++i) CHECK(d4[i] == GeneDomain{-5.0, 5.0});
}

TEST_CASE("evaluate: worked examples")
{
    CHECK(evaluate(ProblemId::ZDT1, filled(0.0, 0.0).genes) == ObjectiveVector{0.0, 1.0});
    CHECK(evaluate(ProblemId::ZDT2, filled(0.5, 0.0).genes) == ObjectiveVector{0.5, 0.75});

    // g = 1 + 9/29 * 29 = 10
    const auto ones = evaluate(ProblemId::ZDT1, filled(1.0, 1.0).genes);
    CHECK(ones.f1 == 1.0);
    CHECK(ones.f2 == doctest::Approx(0.683772233983162).epsilon(1e-14));

    const auto z4 = evaluate(ProblemId::ZDT4, filled(0.25, 0.0).genes);
    CHECK(z4.f1 == 0.25);
    CHECK(z4.f2 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("g is 1 when the tail genes are zero")
{
    for (auto p : kAllProblems) {
        CHECK(std::abs(g_value(p, filled(0.3, 0.0).genes) - 1.0) <= 1e-12);
    }
}

TEST_CASE("evaluate rejects out-of-domain genes")
{
    CHECK_THROWS_AS(evaluate(ProblemId::ZDT1, filled(1.5, 0.0).genes), DomainError);
    CHECK_THROWS_AS(evaluate(ProblemId::ZDT2, filled(0.5, -0.01).genes), DomainError);
    CHECK_THROWS_AS(evaluate(ProblemId::ZDT4, filled(0.5, 5.5).genes), DomainError);
    CHECK_NOTHROW(evaluate(ProblemId::ZDT4, filled(1.0, -5.0).genes));
}

TEST_CASE("evaluate on random genomes: finite, matches table oracle, pure")
{
    Rng rng(7);
    for (auto p : kAllProblems) {
        for (int t = 0; t < 2000; ++t) {
            const auto s = init_solution(p, rng);
            const auto f = evaluate(p, s.genes);
            REQUIRE(std::isfinite(f.f1));
            REQUIRE(std::isfinite(f.f2));
            CHECK(f.f1 >= 0.0);
            CHECK(f.f1 <= 1.0);
            CHECK(g_value(p, s.genes) >= 1.0);
            if (p != ProblemId::ZDT3) CHECK(f.f2 >= 0.0);
            const auto o = oracle::zdt(p, s);
            CHECK(f.f1 == o.f1);
            CHECK(f.f2 == doctest::Approx(o.f2).epsilon(1e-12));
            CHECK(evaluate(p, s.genes) == f);
        }
    }
}

TEST_CASE("true_front sampling")
{
    const auto z1 = true_front(ProblemId::ZDT1, 3);
    REQUIRE(z1.size() == 3);
    CHECK(z1[0] == ObjectiveVector{0.0, 1.0});
    CHECK(z1[1] == ObjectiveVector{0.5, 1.0 - std::sqrt(0.5)});
    CHECK(z1[2] == ObjectiveVector{1.0, 0.0});

    const auto z2 = true_front(ProblemId::ZDT2, 2);
    REQUIRE(z2.size() == 2);
    CHECK(z2[0] == ObjectiveVector{0.0, 1.0});
    CHECK(z2[1] == ObjectiveVector{1.0, 0.0});

    CHECK(true_front(ProblemId::ZDT4, 1000) == true_front(ProblemId::ZDT1, 1000));
    CHECK(true_front(ProblemId::ZDT1).size() == 1000);
    CHECK_THROWS_AS(true_front(ProblemId::ZDT1, 1), std::invalid_argument);
}

TEST_CASE("true_front is mutually non-dominated and sorted for every problem")
{
    for (auto p : kAllProblems) {
        const auto tf = true_front(p, 1000);
        CHECK(tf.size() <= 1000);
        CHECK(tf.size() >= 2);
        for (std::size_t i = 0; i < tf.size(); ++i) {
            if (i > 0) CHECK(tf[i - 1].f1 < tf[i].f1);
            for (std::size_t j = 0; j < tf.size(); ++j) {
                if (oracle::dominates(tf[i], tf[j])) FAIL("dominated true-front point at ", j);
            }
        }
    }
}

TEST_CASE("ZDT3 true front has five disconnected pieces starting at the origin")
{
    const auto tf = true_front(ProblemId::ZDT3, 1000);
    CHECK(tf.front().f1 == 0.0);
    int gaps = 0;
    for (std::size_t i = 1; i < tf.size(); ++i) {
        if (tf[i].f1 - tf[i - 1].f1 > 0.05) ++gaps;
    }
    CHECK(gaps == 4);
    CHECK(tf.back().f2 < -0.7);
}
