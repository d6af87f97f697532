#pragma once

#include <cstdint>

#include "samsched/instance.hpp"
#include "samsched/policies.hpp"

namespace samsched {

struct Estimate {
    double mean = 0;
    double std_err = 0;  // sample standard deviation / sqrt(n_trials)
    std::int64_t n_trials = 0;
    std::uint64_t seed = 0;
};

// Mean realized cost over n_trials. Trial t draws the policy inputs
// (samples or shuffle) from substream (seed, 2t) and the realization from
// (seed, 2t+1); identical (seed, n_trials) reproduce the estimate bit for
// bit, and realizations are shared across policies run on the same seed.
Estimate estimate_cost(const Instance& inst, Policy policy, std::int64_t n_trials,
                       std::uint64_t seed);

// Paired regret estimator: subtracts the realized WSPT optimum on the
// same realization before averaging.
Estimate estimate_regret(const Instance& inst, Policy policy, std::int64_t n_trials,
                         std::uint64_t seed);

// Exact expected cost for instances whose distributions are all
// Deterministic or FiniteDiscrete. SAM enumerates sample combinations
// (at most 1e6) and takes the realization expectation in closed form;
// RND enumerates all n! sequences (n <= 8); WSEPT needs no enumeration.
double exact_discrete_cost(const Instance& inst, Policy policy);

// E[opt(p)] by enumerating realization combinations (at most 1e6)
double exact_discrete_opt(const Instance& inst);

// (exact_discrete_cost - L) / (H - L)
double enumerate_rog(const Instance& inst, Policy policy);

}  // namespace samsched
