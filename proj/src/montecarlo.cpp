#include "samsched/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "samsched/compensated.hpp"

namespace samsched {

namespace {

constexpr double kComboBudget = 1e6;
constexpr int kMaxRndJobs = 8;

// Welford accumulator; exact for constant sequences, so deterministic
// instances report a zero standard error.
struct Welford {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    double std_err() const {
        if (n < 2) return 0.0;
        const double var = std::max(0.0, m2) / static_cast<double>(n - 1);
        return std::sqrt(var / static_cast<double>(n));
    }
};

struct InstanceView {
    std::vector<double> weights;
    std::vector<double> means;

    explicit InstanceView(const Instance& inst) {
        weights.reserve(inst.jobs.size());
        means.reserve(inst.jobs.size());
        for (const Job& job : inst.jobs) {
            weights.push_back(job.weight);
            means.push_back(mean(job.dist));
        }
    }
};

std::vector<std::vector<Atom>> atom_lists(const Instance& inst, const char* what) {
    std::vector<std::vector<Atom>> lists;
    lists.reserve(inst.jobs.size());
    for (const Job& job : inst.jobs) {
        if (!is_atomic(job.dist)) {
            throw NotDiscrete(std::string(what) +
                              ": every distribution must be deterministic or finite discrete");
        }
        lists.push_back(atoms(job.dist));
    }
    return lists;
}

double combo_count(const std::vector<std::vector<Atom>>& lists) {
    double count = 1.0;
    for (const auto& l : lists) count *= static_cast<double>(l.size());
    return count;
}

// enumerate the product of the per-job atom lists; fn(values, prob)
template <class Fn>
void for_each_combo(const std::vector<std::vector<Atom>>& lists, Fn&& fn) {
    const int n = static_cast<int>(lists.size());
    std::vector<int> idx(n, 0);
    std::vector<double> values(n);
    for (;;) {
        double prob = 1.0;
        for (int i = 0; i < n; ++i) {
            const Atom& a = lists[i][idx[i]];
            values[i] = a.value;
            prob *= a.prob;
        }
        fn(values, prob);
        int i = n - 1;
        while (i >= 0 && ++idx[i] == static_cast<int>(lists[i].size())) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

}  // namespace

Estimate estimate_cost(const Instance& inst, Policy policy, std::int64_t n_trials,
                       std::uint64_t seed) {
    if (n_trials < 1) throw ValidationError("estimate_cost: n_trials must be at least 1");
    const int n = inst.n();
    const InstanceView view(inst);
    const Permutation wsept = wsept_order(inst);

    Welford acc;
    std::vector<double> samples(n), realization(n);
    std::vector<int> order;
    for (std::int64_t t = 0; t < n_trials; ++t) {
        RngStream pick(seed, 2 * static_cast<std::uint64_t>(t));
        RngStream realize(seed, 2 * static_cast<std::uint64_t>(t) + 1);
        switch (policy) {
            case Policy::Sam:
                for (int i = 0; i < n; ++i) samples[i] = sample(inst.jobs[i].dist, pick);
                sam_schedule_into(view.weights, samples, order);
                break;
            case Policy::Rnd:
                order = rnd_schedule(n, pick).order;
                break;
            case Policy::Wsept:
                order = wsept.order;
                break;
        }
        for (int i = 0; i < n; ++i) realization[i] = sample(inst.jobs[i].dist, realize);
        acc.add(realized_cost(view.weights, realization, order));
    }
    return {acc.mean, acc.std_err(), n_trials, seed};
}

Estimate estimate_regret(const Instance& inst, Policy policy, std::int64_t n_trials,
                         std::uint64_t seed) {
    if (n_trials < 1) throw ValidationError("estimate_regret: n_trials must be at least 1");
    const int n = inst.n();
    const InstanceView view(inst);
    const Permutation wsept = wsept_order(inst);

    Welford acc;
    std::vector<double> samples(n), realization(n);
    std::vector<int> order, opt_order;
    for (std::int64_t t = 0; t < n_trials; ++t) {
        RngStream pick(seed, 2 * static_cast<std::uint64_t>(t));
        RngStream realize(seed, 2 * static_cast<std::uint64_t>(t) + 1);
        switch (policy) {
            case Policy::Sam:
                for (int i = 0; i < n; ++i) samples[i] = sample(inst.jobs[i].dist, pick);
                sam_schedule_into(view.weights, samples, order);
                break;
            case Policy::Rnd:
                order = rnd_schedule(n, pick).order;
                break;
            case Policy::Wsept:
                order = wsept.order;
                break;
        }
        for (int i = 0; i < n; ++i) realization[i] = sample(inst.jobs[i].dist, realize);
        wspt_schedule_into(view.weights, realization, opt_order);
        acc.add(realized_cost(view.weights, realization, order) -
                realized_cost(view.weights, realization, opt_order));
    }
    return {acc.mean, acc.std_err(), n_trials, seed};
}

double exact_discrete_cost(const Instance& inst, Policy policy) {
    const auto lists = atom_lists(inst, "exact_discrete_cost");
    const InstanceView view(inst);
    const int n = inst.n();

    switch (policy) {
        case Policy::Wsept:
            return expected_cost_of_permutation(inst, wsept_order(inst));
        case Policy::Rnd: {
            if (n > kMaxRndJobs) {
                throw TooLarge("exact_discrete_cost: rnd enumeration needs n <= 8");
            }
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            CompensatedSum sum;
            std::int64_t count = 0;
            do {
                sum.add(expected_cost_of_order(view.weights, view.means, order));
                ++count;
            } while (std::next_permutation(order.begin(), order.end()));
            return sum.value() / static_cast<double>(count);
        }
        case Policy::Sam: {
            if (combo_count(lists) > kComboBudget) {
                throw TooLarge("exact_discrete_cost: sample combination budget exceeded");
            }
            // realization expectation for a fixed schedule collapses to the
            // position-sum of means
            CompensatedSum sum;
            std::vector<int> order;
            for_each_combo(lists, [&](const std::vector<double>& samples, double prob) {
                sam_schedule_into(view.weights, samples, order);
                sum.add(prob * expected_cost_of_order(view.weights, view.means, order));
            });
            return sum.value();
        }
    }
    throw ValidationError("exact_discrete_cost: unknown policy");
}

double exact_discrete_opt(const Instance& inst) {
    const auto lists = atom_lists(inst, "exact_discrete_opt");
    if (combo_count(lists) > kComboBudget) {
        throw TooLarge("exact_discrete_opt: realization combination budget exceeded");
    }
    const InstanceView view(inst);
    CompensatedSum sum;
    std::vector<int> order;
    for_each_combo(lists, [&](const std::vector<double>& realization, double prob) {
        wspt_schedule_into(view.weights, realization, order);
        sum.add(prob * realized_cost(view.weights, realization, order));
    });
    return sum.value();
}

double enumerate_rog(const Instance& inst, Policy policy) {
    const double l = l_cost(inst);
    const double h = h_cost(inst);
    if (!(h - l > 0.0)) {
        throw DegenerateInstance("enumerate_rog: L equals H, relative optimality gap undefined");
    }
    return (exact_discrete_cost(inst, policy) - l) / (h - l);
}

}  // namespace samsched
