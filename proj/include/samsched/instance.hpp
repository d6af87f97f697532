#pragma once

#include <span>
#include <vector>

#include "samsched/distributions.hpp"

namespace samsched {

struct Job {
    double weight;
    Distribution dist;
    Job(double weight, Distribution dist);
};

struct Instance {
    std::vector<Job> jobs;
    explicit Instance(std::vector<Job> jobs);
    int n() const { return static_cast<int>(jobs.size()); }
};

// 0-based job indices; serialized forms use 1-based ids.
struct Permutation {
    std::vector<int> order;
};

double priority(const Instance& inst, int j);  // w_j / E[P_j]

// non-increasing priority, ties by ascending index
Permutation wsept_order(const Instance& inst);

// sum over positions t of w_sigma(t) * (cumulative mean through t)
double expected_cost_of_permutation(const Instance& inst, const Permutation& perm);

// same position-sum without permutation validation, on cached vectors
double expected_cost_of_order(std::span<const double> weights, std::span<const double> means,
                              std::span<const int> order);

double l_cost(const Instance& inst);  // cost of the wsept order
double h_cost(const Instance& inst);  // cost of the reversed wsept order

// pairwise inversion cost w_j E[P_k] - w_k E[P_j];
// throws OrderViolation unless priority(j) >= priority(k)
double delta(const Instance& inst, int j, int k);

}  // namespace samsched
