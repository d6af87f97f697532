#pragma once

#include <optional>
#include <string>
#include <vector>

#include "samsched/instance.hpp"
#include "samsched/policies.hpp"

namespace samsched {

struct PairwiseMatrix {
    int n = 0;
    std::vector<double> p;  // row-major, entry (j,k) = P(j scheduled before k)

    explicit PairwiseMatrix(int n_);
    double& at(int j, int k) { return p[static_cast<std::size_t>(j) * n + k]; }
    double at(int j, int k) const { return p[static_cast<std::size_t>(j) * n + k]; }
};

// P(SAM schedules j before k): exact atom sums for discrete pairs, a 1-D
// integral of f_k(y) * F_j((w_j/w_k) y) for continuous pairs (upper limit
// truncated at the 1 - 1e-12 quantile of k), and exact CDF sums for mixed
// pairs. Discrete ties follow schedules_before.
double p_sam_pair(const Instance& inst, int j, int k, double tol = 1e-9);

// pi_j / (pi_j + pi_k), the exponential closed form
double p_exponential_closed(double pi_j, double pi_k);

// Complete matrix for a policy. SAM pairs where both distributions are
// exponential use the closed form, everything else goes through
// p_sam_pair; entries (k,j) are complements of (j,k).
PairwiseMatrix pairwise_matrix(const Instance& inst, Policy policy, double tol = 1e-9);

// L + sum over priority-ordered pairs of P(inverted) * delta
double cost_from_pairwise(const Instance& inst, const PairwiseMatrix& m);

// sum P(inverted) * delta / sum delta; throws DegenerateInstance when the
// delta sum is not positive (L == H)
double rog(const Instance& inst, const PairwiseMatrix& m);

// min over strict-priority pairs of P(correct order); 1 when no pair of
// priorities differs. Implies rog <= 1 - kappa.
double kappa(const Instance& inst, const PairwiseMatrix& m);

// largest a such that every pair of distinct priorities is at least a
// factor a apart; +inf when all priorities are equal
double alpha_separation(const Instance& inst);

bool all_exponential(const Instance& inst);

struct AnalysisReport {
    int n = 0;
    Policy policy = Policy::Sam;
    double l = 0;
    double h = 0;
    double cost = 0;
    double rog = 0;
    double kappa = 1;
    double alpha = 0;                   // +inf when all priorities are equal
    bool bound_half_ok = false;         // rog <= 1/2 + 1e-9
    std::optional<double> bound_alpha;  // 1/(1+alpha), exponential instances only
    bool near_degenerate = false;       // (h - l) < 1e-9 * l
    std::string method = "exact-pairwise";
};

AnalysisReport analyze(const Instance& inst, Policy policy, double tol = 1e-9);

}  // namespace samsched
