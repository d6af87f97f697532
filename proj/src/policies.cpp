#include "samsched/policies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace samsched {

namespace {

double ratio_key(double w, double t) {
    return t == 0.0 ? std::numeric_limits<double>::infinity() : w / t;
}

void check_inputs(std::span<const double> weights, std::span<const double> times,
                  const char* what) {
    if (weights.size() != times.size() || weights.empty()) {
        throw ValidationError(std::string(what) + ": weights and times must have equal length");
    }
    for (const double w : weights) {
        if (!(std::isfinite(w) && w > 0.0)) {
            throw ValidationError(std::string(what) + ": weights must be positive");
        }
    }
    for (const double t : times) {
        if (!(t >= 0.0)) throw ValidationError(std::string(what) + ": times must be nonnegative");
    }
}

void ratio_order_into(std::span<const double> weights, std::span<const double> times,
                      std::vector<int>& order) {
    order.resize(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return schedules_before(weights[a], times[a], a, weights[b], times[b], b);
    });
}

}  // namespace

const char* policy_name(Policy p) {
    switch (p) {
        case Policy::Sam: return "sam";
        case Policy::Rnd: return "rnd";
        case Policy::Wsept: return "wsept";
    }
    return "?";
}

Policy parse_policy(const std::string& name) {
    if (name == "sam") return Policy::Sam;
    if (name == "rnd") return Policy::Rnd;
    if (name == "wsept") return Policy::Wsept;
    throw ParseError("unknown policy '" + name + "' (expected sam, rnd or wsept)");
}

bool schedules_before(double wj, double tj, int j, double wk, double tk, int k) {
    const double a = ratio_key(wj, tj);
    const double b = ratio_key(wk, tk);
    if (a != b) return a > b;
    if (wj != wk) return wj > wk;
    return j < k;
}

void sam_schedule_into(std::span<const double> weights, std::span<const double> samples,
                       std::vector<int>& order) {
    check_inputs(weights, samples, "sam_schedule");
    ratio_order_into(weights, samples, order);
}

Permutation sam_schedule(std::span<const double> weights, std::span<const double> samples) {
    Permutation perm;
    sam_schedule_into(weights, samples, perm.order);
    return perm;
}

Permutation rnd_schedule(int n, RngStream& rng) {
    if (n < 1) throw ValidationError("rnd_schedule: n must be at least 1");
    Permutation perm;
    perm.order.resize(n);
    std::iota(perm.order.begin(), perm.order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm.order[i], perm.order[j]);
    }
    return perm;
}

void wspt_schedule_into(std::span<const double> weights, std::span<const double> realization,
                        std::vector<int>& order) {
    check_inputs(weights, realization, "wspt_schedule");
    ratio_order_into(weights, realization, order);
}

Permutation wspt_schedule(std::span<const double> weights, std::span<const double> realization) {
    Permutation perm;
    wspt_schedule_into(weights, realization, perm.order);
    return perm;
}

double realized_cost(std::span<const double> weights, std::span<const double> realization,
                     std::span<const int> order) {
    double cum = 0.0;
    double cost = 0.0;
    for (const int j : order) {
        cum += realization[j];
        cost += weights[j] * cum;
    }
    return cost;
}

double realized_cost(std::span<const double> weights, std::span<const double> realization,
                     const Permutation& perm) {
    const std::size_t n = weights.size();
    if (realization.size() != n || perm.order.size() != n) {
        throw ValidationError("realized_cost: inconsistent lengths");
    }
    std::vector<char> seen(n, 0);
    for (const int j : perm.order) {
        if (j < 0 || static_cast<std::size_t>(j) >= n || seen[j]) {
            throw ValidationError("realized_cost: order is not a permutation");
        }
        seen[j] = 1;
    }
    return realized_cost(weights, realization, std::span<const int>(perm.order));
}

}  // namespace samsched
