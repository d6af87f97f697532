#include "samsched/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace samsched {

namespace {

void check_index(const Instance& inst, int j) {
    if (j < 0 || j >= inst.n()) throw ValidationError("job index out of range");
}

std::vector<double> priorities(const Instance& inst) {
    std::vector<double> prio(inst.jobs.size());
    for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
        prio[j] = inst.jobs[j].weight / mean(inst.jobs[j].dist);
    }
    return prio;
}

}  // namespace

Job::Job(double w, Distribution d) : weight(w), dist(std::move(d)) {
    if (!(std::isfinite(weight) && weight > 0.0)) {
        throw ValidationError("job: weight must be positive and finite");
    }
    const double m = samsched::mean(dist);
    if (!(std::isfinite(m) && m > 0.0)) {
        throw ValidationError("job: processing time mean must be positive and finite");
    }
}

Instance::Instance(std::vector<Job> js) : jobs(std::move(js)) {
    if (jobs.empty()) throw ValidationError("instance: needs at least one job");
}

double priority(const Instance& inst, int j) {
    check_index(inst, j);
    return inst.jobs[j].weight / mean(inst.jobs[j].dist);
}

Permutation wsept_order(const Instance& inst) {
    const std::vector<double> prio = priorities(inst);
    Permutation perm;
    perm.order.resize(inst.n());
    std::iota(perm.order.begin(), perm.order.end(), 0);
    std::sort(perm.order.begin(), perm.order.end(), [&prio](int a, int b) {
        if (prio[a] != prio[b]) return prio[a] > prio[b];
        return a < b;
    });
    return perm;
}

double expected_cost_of_order(std::span<const double> weights, std::span<const double> means,
                              std::span<const int> order) {
    double cum = 0.0;
    double cost = 0.0;
    for (const int j : order) {
        cum += means[j];
        cost += weights[j] * cum;
    }
    return cost;
}

double expected_cost_of_permutation(const Instance& inst, const Permutation& perm) {
    const int n = inst.n();
    if (static_cast<int>(perm.order.size()) != n) {
        throw ValidationError("permutation: wrong length");
    }
    std::vector<char> seen(n, 0);
    for (const int j : perm.order) {
        if (j < 0 || j >= n || seen[j]) throw ValidationError("permutation: not a bijection");
        seen[j] = 1;
    }
    std::vector<double> weights(n), means(n);
    for (int j = 0; j < n; ++j) {
        weights[j] = inst.jobs[j].weight;
        means[j] = mean(inst.jobs[j].dist);
    }
    return expected_cost_of_order(weights, means, perm.order);
}

double l_cost(const Instance& inst) {
    return expected_cost_of_permutation(inst, wsept_order(inst));
}

double h_cost(const Instance& inst) {
    Permutation perm = wsept_order(inst);
    std::reverse(perm.order.begin(), perm.order.end());
    return expected_cost_of_permutation(inst, perm);
}

double delta(const Instance& inst, int j, int k) {
    check_index(inst, j);
    check_index(inst, k);
    if (priority(inst, j) < priority(inst, k)) {
        throw OrderViolation("delta: first job must not have lower priority");
    }
    return inst.jobs[j].weight * mean(inst.jobs[k].dist) -
           inst.jobs[k].weight * mean(inst.jobs[j].dist);
}

}  // namespace samsched
