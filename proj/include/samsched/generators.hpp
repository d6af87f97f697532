#pragma once

#include "samsched/instance.hpp"
#include "samsched/rng.hpp"

namespace samsched {

double log_uniform(RngStream& g, double lo, double hi);
int uniform_int(RngStream& g, int lo, int hi);  // inclusive

// Random families used by `verify` and the acceptance suite. All draw
// n uniformly from {2..8}, weights log-uniform on [0.1, 10] (forced to 1
// for the translated class) and class parameters log-uniform on [0.1, 10].
Instance random_symmetric_instance(RngStream& g);
Instance random_shape_uniform_instance(RngStream& g);  // one base shared per instance
Instance random_translated_instance(RngStream& g);     // unit weights
Instance random_exponential_instance(RngStream& g);

// Exponential groups with exactly equal priorities inside a group and
// consecutive group priorities a factor alpha apart (rates are powers of
// two so the equalities are exact in floating point). alpha == 1 falls
// back to an unconstrained exponential instance.
Instance random_alpha_separated_instance(double alpha, RngStream& g);

// any mix of kinds, used where only means matter
Instance random_mixed_instance(RngStream& g);

// all jobs deterministic or finite discrete
Instance random_discrete_instance(RngStream& g, int max_n = 5, int max_atoms = 3);

// n-1 unit-weight jobs of deterministic length eps plus one job that is 0
// with probability 1 - 1/M and M^2 with probability 1/M
Instance example1_instance(int n, double M, double eps);

// two jobs, weights 1 and 2, the second distribution a copy of the first
// shifted by 1 + eps; the first is 1 w.p. 1 - 1/M and M^2 w.p. 1/M
Instance example2_instance(double M, double eps);

// two exponential jobs with priority ratio alpha (1 + 2e-9 when alpha == 1,
// keeping L < H); the gap bound 1/(1+alpha) is tight here
Instance two_job_alpha_instance(double alpha);

}  // namespace samsched
