#pragma once

#include <span>
#include <string>
#include <vector>

#include "samsched/instance.hpp"
#include "samsched/rng.hpp"

namespace samsched {

enum class Policy { Sam, Rnd, Wsept };

const char* policy_name(Policy p);
Policy parse_policy(const std::string& name);  // "sam" | "rnd" | "wsept"

// Precedence rule shared by the ratio-driven schedules: higher w/t first,
// a zero time counts as an infinite ratio; ties by descending weight,
// then ascending index. Pairwise and enumeration code calls this directly
// so oracles replicate realized schedules exactly.
bool schedules_before(double wj, double tj, int j, double wk, double tk, int k);

// non-increasing w_j / p'_j on sampled times
void sam_schedule_into(std::span<const double> weights, std::span<const double> samples,
                       std::vector<int>& order);
Permutation sam_schedule(std::span<const double> weights, std::span<const double> samples);

// uniform over all n! permutations (unbiased shuffle)
Permutation rnd_schedule(int n, RngStream& rng);

// non-increasing w_j / p_j on realized times; the per-realization optimum
void wspt_schedule_into(std::span<const double> weights, std::span<const double> realization,
                        std::vector<int>& order);
Permutation wspt_schedule(std::span<const double> weights, std::span<const double> realization);

double realized_cost(std::span<const double> weights, std::span<const double> realization,
                     std::span<const int> order);
double realized_cost(std::span<const double> weights, std::span<const double> realization,
                     const Permutation& perm);

}  // namespace samsched
