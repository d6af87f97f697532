#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "samsched/generators.hpp"
#include "samsched/montecarlo.hpp"
#include "samsched/pairwise.hpp"
#include "test_util.hpp"

using namespace samsched;
using testutil::det_instance;
using testutil::exp_instance;

TEST_CASE("wsept on a deterministic instance reproduces L with zero error") {
    const Instance inst = det_instance({{2.0, 1.0}, {1.0, 3.0}, {0.5, 2.0}});
    const Estimate est = estimate_cost(inst, Policy::Wsept, 1000, 1);
    CHECK(est.mean == l_cost(inst));
    CHECK(est.std_err == 0.0);
}

TEST_CASE("sam estimate matches the exact pairwise value") {
    const Instance inst = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    const Estimate est = estimate_cost(inst, Policy::Sam, 1000000, 21);
    CHECK(std::fabs(est.mean - 13.0 / 6.0) <= 4.0 * est.std_err);
}

TEST_CASE("rnd estimate matches the midpoint of L and H") {
    RngStream g(900, 0);
    const Instance inst = random_mixed_instance(g);
    const Estimate est = estimate_cost(inst, Policy::Rnd, 1000000, 22);
    const double mid = 0.5 * (l_cost(inst) + h_cost(inst));
    CHECK(std::fabs(est.mean - mid) <= 4.0 * est.std_err);
}

TEST_CASE("identical seeds reproduce estimates bit for bit") {
    const Instance inst = exp_instance({{1.0, 2.0}, {3.0, 0.3}, {1.0, 1.0}});
    for (const Policy p : {Policy::Sam, Policy::Rnd, Policy::Wsept}) {
        const Estimate a = estimate_cost(inst, p, 20000, 77);
        const Estimate b = estimate_cost(inst, p, 20000, 77);
        CHECK(a.mean == b.mean);
        CHECK(a.std_err == b.std_err);
        const Estimate c = estimate_cost(inst, p, 20000, 78);
        CHECK(a.mean != c.mean);
    }
}

TEST_CASE("regret is zero when the policy is the realized optimum") {
    // deterministic times make wsept coincide with wspt on every realization
    const Instance inst = det_instance({{2.0, 1.0}, {1.0, 3.0}});
    const Estimate est = estimate_regret(inst, Policy::Wsept, 5000, 5);
    CHECK(est.mean == 0.0);
    CHECK(est.std_err == 0.0);
}

TEST_CASE("adversarial instance: regret and gap estimates match the limits") {
    const Instance inst = example1_instance(5, 100.0, 1e-6);
    const Estimate reg = estimate_regret(inst, Policy::Sam, 1000000, 31);
    CHECK(std::fabs(reg.mean - 396.0) <= 4.0 * reg.std_err + 1e-3);

    const Estimate sam = estimate_cost(inst, Policy::Sam, 1000000, 31);
    const Estimate rnd = estimate_cost(inst, Policy::Rnd, 1000000, 31);
    const double se = std::hypot(sam.std_err, rnd.std_err);
    CHECK(std::fabs((sam.mean - rnd.mean) - 196.0) <= 4.0 * se + 1e-3);
}

TEST_CASE("exact enumeration on the adversarial instance") {
    // a tiny deterministic length stands in for the eps -> 0 limit
    const Instance inst = example1_instance(5, 100.0, 1e-9);
    const double cost = exact_discrete_cost(inst, Policy::Sam);
    CHECK(std::fabs(cost / 496.0 - 1.0) <= 1e-6);

    const double rnd = exact_discrete_cost(inst, Policy::Rnd);
    CHECK(rnd == doctest::Approx(0.5 * (l_cost(inst) + h_cost(inst))).epsilon(1e-12));

    const double wsept = exact_discrete_cost(inst, Policy::Wsept);
    CHECK(wsept == doctest::Approx(l_cost(inst)).epsilon(1e-12));

    const double opt = exact_discrete_opt(inst);
    CHECK(std::fabs(cost - opt - 396.0) <= 1e-3);
}

TEST_CASE("enumerated gap ratios") {
    const Instance two = example1_instance(2, 100.0, 1e-6);
    // limit expression (nM - (n-1) - M)/(nM - M) at n = 2, M = 100
    CHECK(std::fabs(enumerate_rog(two, Policy::Sam) - 0.99) <= 1e-2);

    RngStream g(901, 0);
    const Instance inst = random_discrete_instance(g);
    CHECK(enumerate_rog(inst, Policy::Rnd) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(enumerate_rog(inst, Policy::Wsept) == doctest::Approx(0.0).epsilon(1e-12));

    const Instance ex2 = example2_instance(100.0, 1e-3);
    CHECK(std::fabs(enumerate_rog(ex2, Policy::Sam) - 0.99) <= 0.01);
}

TEST_CASE("enumeration guards") {
    const Instance cont = exp_instance({{1.0, 1.0}, {1.0, 2.0}});
    CHECK_THROWS_AS(exact_discrete_cost(cont, Policy::Sam), NotDiscrete);
    CHECK_THROWS_AS(exact_discrete_opt(cont), NotDiscrete);

    // 2^21 sample combinations exceed the budget
    std::vector<Job> many;
    for (int i = 0; i < 21; ++i) {
        many.emplace_back(1.0, FiniteDiscrete({{1.0, 0.5}, {2.0 + i, 0.5}}));
    }
    const Instance big(std::move(many));
    CHECK_THROWS_AS(exact_discrete_cost(big, Policy::Sam), TooLarge);
    CHECK_THROWS_AS(exact_discrete_cost(big, Policy::Rnd), TooLarge);  // n > 8

    const Instance tied = det_instance({{1.0, 1.0}, {1.0, 1.0}});
    CHECK_THROWS_AS(enumerate_rog(tied, Policy::Sam), DegenerateInstance);
}

TEST_CASE("estimator agrees with the enumeration oracle across seeds") {
    RngStream g(902, 0);
    const Instance inst = random_discrete_instance(g, 4, 2);
    const double exact = exact_discrete_cost(inst, Policy::Sam);
    int hits = 0;
    for (int seed = 0; seed < 100; ++seed) {
        const Estimate est = estimate_cost(inst, Policy::Sam, 10000, seed);
        if (std::fabs(est.mean - exact) <= 4.0 * est.std_err) ++hits;
    }
    CHECK(hits >= 95);
}

TEST_CASE("cross-pipeline agreement on discrete instances") {
    RngStream g(903, 0);
    for (int rep = 0; rep < 5; ++rep) {
        const Instance inst = random_discrete_instance(g);
        const double via_pairs = cost_from_pairwise(inst, pairwise_matrix(inst, Policy::Sam));
        CHECK(std::fabs(via_pairs - exact_discrete_cost(inst, Policy::Sam)) <= 1e-9);
    }
}
