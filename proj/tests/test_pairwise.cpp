#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "samsched/generators.hpp"
#include "samsched/montecarlo.hpp"
#include "samsched/pairwise.hpp"
#include "test_util.hpp"

using namespace samsched;
using testutil::exp_instance;

TEST_CASE("exchangeable exponential pair is a coin flip") {
    const Instance inst = exp_instance({{1.0, 1.0}, {1.0, 1.0}});
    CHECK(p_sam_pair(inst, 0, 1) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("exponential pair with priority ratio 2 matches the closed form") {
    const Instance inst = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    CHECK(std::fabs(p_sam_pair(inst, 0, 1) - 2.0 / 3.0) <= 1e-6);
}

TEST_CASE("uniform pair: quadrature agrees with the closed form and Monte Carlo") {
    // P(X < Y) with X ~ U(0,2), Y ~ U(0,4) is (1/4)(int_0^2 y/2 dy + int_2^4 1 dy) = 3/4
    const Instance inst({Job(1.0, UniformInterval(0.0, 2.0)), Job(1.0, UniformInterval(0.0, 4.0))});
    const double got = p_sam_pair(inst, 0, 1);
    CHECK(std::fabs(got - 0.75) <= 1e-6);

    RngStream g(810, 0);
    const int n_draws = 10000000;
    int before = 0;
    for (int i = 0; i < n_draws; ++i) {
        const double x = 2.0 * g.next_unit();
        const double y = 4.0 * g.next_unit();
        if (x < y) ++before;
    }
    const double freq = static_cast<double>(before) / n_draws;
    const double se = std::sqrt(0.75 * 0.25 / n_draws);
    CHECK(std::fabs(freq - 0.75) <= 4.0 * se);
    CHECK(std::fabs(got - freq) <= 4.0 * se + 1e-6);
}

TEST_CASE("closed form for exponential priorities") {
    CHECK(p_exponential_closed(1.0, 1.0) == doctest::Approx(0.5));
    CHECK(p_exponential_closed(2.0, 1.0) == doctest::Approx(2.0 / 3.0));
    CHECK(p_exponential_closed(8.0, 1.0) == doctest::Approx(8.0 / 9.0));
    // the complement of 8/9 is the separation bound 1/(1+8)
    CHECK(1.0 - p_exponential_closed(8.0, 1.0) <= 1.0 / 9.0 + 1e-15);
    CHECK_THROWS_AS(p_exponential_closed(0.0, 1.0), NonPositivePriority);
    CHECK_THROWS_AS(p_exponential_closed(1.0, -2.0), NonPositivePriority);
}

TEST_CASE("quadrature tracks the closed form on random exponential pairs") {
    RngStream g(811, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const double w0 = log_uniform(g, 1e-2, 1e2);
        const double w1 = log_uniform(g, 1e-2, 1e2);
        const double r0 = log_uniform(g, 1e-2, 1e2);
        const double r1 = log_uniform(g, 1e-2, 1e2);
        const Instance inst({Job(w0, Exponential(r0)), Job(w1, Exponential(r1))});
        const double closed = p_exponential_closed(priority(inst, 0), priority(inst, 1));
        CHECK(std::fabs(p_sam_pair(inst, 0, 1) - closed) <= 1e-6);
    }
}

TEST_CASE("mixed atomic-continuous pairs use exact cdf sums") {
    // j discrete {0, 2}, k ~ Exp(1), unit weights:
    // P(j first) = 0.5 * 1 + 0.5 * P(Y > 2) = 0.5 (1 + e^-2)
    const Instance a({Job(1.0, FiniteDiscrete({{0.0, 0.5}, {2.0, 0.5}})), Job(1.0, Exponential(1.0))});
    CHECK(p_sam_pair(a, 0, 1) == doctest::Approx(0.5 * (1.0 + std::exp(-2.0))).epsilon(1e-12));
    // swapped roles: P(k first) is the complement
    CHECK(p_sam_pair(a, 1, 0) == doctest::Approx(0.5 * (1.0 - std::exp(-2.0))).epsilon(1e-12));

    // deterministic 1 against U(0,2): P(det first) = P(U > 1) = 1/2
    const Instance b({Job(1.0, Deterministic(1.0)), Job(1.0, UniformInterval(0.0, 2.0))});
    CHECK(p_sam_pair(b, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pair probabilities sum to one in both directions") {
    RngStream g(812, 0);
    for (int rep = 0; rep < 12; ++rep) {
        const Instance inst = random_mixed_instance(g);
        for (int j = 0; j < inst.n(); ++j) {
            for (int k = j + 1; k < inst.n(); ++k) {
                const double a = p_sam_pair(inst, j, k);
                const double b = p_sam_pair(inst, k, j);
                CHECK(a >= 0.0);
                CHECK(a <= 1.0);
                CHECK(std::fabs(a + b - 1.0) <= 1e-9);
            }
        }
    }
}

TEST_CASE("pairwise matrices per policy") {
    const Instance inst = exp_instance({{1.0, 2.0}, {1.0, 1.0}, {2.0, 0.5}});

    const PairwiseMatrix rnd = pairwise_matrix(inst, Policy::Rnd);
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (j != k) CHECK(rnd.at(j, k) == 0.5);
        }
    }

    const Instance two = testutil::det_instance({{3.0, 1.0}, {1.0, 1.0}});
    const PairwiseMatrix wsept = pairwise_matrix(two, Policy::Wsept);
    CHECK(wsept.at(0, 1) == 1.0);
    CHECK(wsept.at(1, 0) == 0.0);

    const Instance pair = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    const PairwiseMatrix sam = pairwise_matrix(pair, Policy::Sam);
    CHECK(sam.at(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(sam.at(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("costs recovered from the pairwise matrix") {
    RngStream g(813, 0);
    for (int rep = 0; rep < 10; ++rep) {
        const Instance inst = random_mixed_instance(g);
        const double l = l_cost(inst);
        const double h = h_cost(inst);
        const double scale = std::max(1.0, h);
        CHECK(std::fabs(cost_from_pairwise(inst, pairwise_matrix(inst, Policy::Rnd)) -
                        0.5 * (l + h)) <= 1e-9 * scale);
        CHECK(std::fabs(cost_from_pairwise(inst, pairwise_matrix(inst, Policy::Wsept)) - l) <=
              1e-9 * scale);
    }

    const Instance pair = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    const double cost = cost_from_pairwise(pair, pairwise_matrix(pair, Policy::Sam));
    CHECK(cost == doctest::Approx(13.0 / 6.0).epsilon(1e-12));  // 2 + (1/3) * 0.5
}

TEST_CASE("rog identities") {
    RngStream g(814, 0);
    for (int rep = 0; rep < 10; ++rep) {
        const Instance inst = random_mixed_instance(g);
        const PairwiseMatrix rnd = pairwise_matrix(inst, Policy::Rnd);
        CHECK(rog(inst, rnd) == 0.5);  // exact
        const PairwiseMatrix sam = pairwise_matrix(inst, Policy::Sam);
        const double r = rog(inst, sam);
        const double via_cost =
            (cost_from_pairwise(inst, sam) - l_cost(inst)) / (h_cost(inst) - l_cost(inst));
        CHECK(r == doctest::Approx(via_cost).epsilon(1e-12));
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
    }

    // a two-job instance reduces to the single inversion probability
    const Instance pair = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    PairwiseMatrix m(2);
    m.at(0, 1) = 0.73;
    m.at(1, 0) = 0.27;
    CHECK(rog(pair, m) == doctest::Approx(0.27).epsilon(1e-12));
    CHECK(rog(pair, pairwise_matrix(pair, Policy::Sam)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("rog requires L < H") {
    // equal priorities: w/E is 1 for both jobs
    const Instance tied = exp_instance({{1.0, 1.0}, {2.0, 0.5}});
    CHECK_THROWS_AS(rog(tied, pairwise_matrix(tied, Policy::Sam)), DegenerateInstance);
}

TEST_CASE("kappa per policy") {
    const Instance pair = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    CHECK(kappa(pair, pairwise_matrix(pair, Policy::Wsept)) == 1.0);
    CHECK(kappa(pair, pairwise_matrix(pair, Policy::Rnd)) == 0.5);
    const PairwiseMatrix sam = pairwise_matrix(pair, Policy::Sam);
    CHECK(kappa(pair, sam) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    // the two-job case makes the 1 - kappa bound tight
    CHECK(rog(pair, sam) == doctest::Approx(1.0 - kappa(pair, sam)).epsilon(1e-12));
}

TEST_CASE("separation factor") {
    const Instance a = exp_instance({{4.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}, {1.0, 1.0}});
    CHECK(alpha_separation(a) == doctest::Approx(2.0));
    const Instance tied = exp_instance({{2.0, 1.0}, {2.0, 1.0}});
    CHECK(alpha_separation(tied) == std::numeric_limits<double>::infinity());

    const Instance pair = exp_instance({{3.0, 1.0}, {1.0, 1.0}});
    CHECK(alpha_separation(pair) == doctest::Approx(3.0));
    // the 1/(1+alpha) bound is attained by the two-job instance
    CHECK(rog(pair, pairwise_matrix(pair, Policy::Sam)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("pairwise cost equals brute-force enumeration on discrete instances") {
    RngStream g(815, 0);
    for (int rep = 0; rep < 10; ++rep) {
        const Instance inst = random_discrete_instance(g);
        const double via_pairs = cost_from_pairwise(inst, pairwise_matrix(inst, Policy::Sam));
        const double via_enum = exact_discrete_cost(inst, Policy::Sam);
        CHECK(std::fabs(via_pairs - via_enum) <= 1e-9);
    }

    // deliberate ties: equal atoms, equal and unequal weights
    const Instance ties({Job(1.0, FiniteDiscrete({{1.0, 0.5}, {2.0, 0.5}})),
                         Job(1.0, FiniteDiscrete({{1.0, 0.5}, {2.0, 0.5}})),
                         Job(2.0, FiniteDiscrete({{2.0, 1.0 - 1e-3}, {4.0, 1e-3}}))});
    CHECK(std::fabs(cost_from_pairwise(ties, pairwise_matrix(ties, Policy::Sam)) -
                    exact_discrete_cost(ties, Policy::Sam)) <= 1e-9);
}

TEST_CASE("class guarantees hold on sampled instances") {
    RngStream g(816, 0);
    for (int rep = 0; rep < 8; ++rep) {
        for (const auto* which : {"sym", "shape", "trans"}) {
            Instance inst = std::string(which) == "sym"    ? random_symmetric_instance(g)
                            : std::string(which) == "shape" ? random_shape_uniform_instance(g)
                                                            : random_translated_instance(g);
            const PairwiseMatrix m = pairwise_matrix(inst, Policy::Sam);
            const double k = kappa(inst, m);
            const double r = rog(inst, m);
            CHECK(k >= 0.5 - 1e-8);
            CHECK(r <= 0.5 + 1e-8);
            CHECK(r <= 1.0 - k + 1e-9);
        }
    }
}

TEST_CASE("analysis report fields") {
    const Instance pair = exp_instance({{1.0, 2.0}, {1.0, 1.0}});
    const AnalysisReport rep = analyze(pair, Policy::Sam);
    CHECK(rep.n == 2);
    CHECK(rep.l == doctest::Approx(2.0));
    CHECK(rep.h == doctest::Approx(2.5));
    CHECK(rep.cost == doctest::Approx(13.0 / 6.0).epsilon(1e-12));
    CHECK(rep.rog == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(rep.kappa == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rep.alpha == doctest::Approx(2.0));
    CHECK(rep.bound_half_ok);
    REQUIRE(rep.bound_alpha.has_value());
    CHECK(*rep.bound_alpha == doctest::Approx(1.0 / 3.0));
    CHECK_FALSE(rep.near_degenerate);

    const Instance uni({Job(1.0, UniformInterval(0.0, 2.0)), Job(1.0, UniformInterval(0.0, 4.0))});
    CHECK_FALSE(analyze(uni, Policy::Sam).bound_alpha.has_value());

    // an almost-tied pair is flagged but still reported as computed
    const AnalysisReport nd = analyze(two_job_alpha_instance(1.0), Policy::Sam);
    CHECK(nd.near_degenerate);
    CHECK(nd.rog == doctest::Approx(0.5).epsilon(1e-9));
}
