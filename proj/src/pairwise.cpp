#include "samsched/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "samsched/quadrature.hpp"

namespace samsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pair(const Instance& inst, int j, int k) {
    if (j < 0 || j >= inst.n() || k < 0 || k >= inst.n()) {
        throw ValidationError("job index out of range");
    }
    if (j == k) throw ValidationError("pair requires two distinct jobs");
}

std::vector<double> priorities(const Instance& inst) {
    std::vector<double> prio(inst.jobs.size());
    for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
        prio[j] = inst.jobs[j].weight / mean(inst.jobs[j].dist);
    }
    return prio;
}

double clamp_prob(double p) { return std::clamp(p, 0.0, 1.0); }

double p_pair_atomic(double wj, const std::vector<Atom>& aj, int j, double wk,
                     const std::vector<Atom>& ak, int k) {
    double p = 0.0;
    for (const Atom& x : aj) {
        for (const Atom& y : ak) {
            if (schedules_before(wj, x.value, j, wk, y.value, k)) p += x.prob * y.prob;
        }
    }
    return clamp_prob(p);
}

// quantile ladder used to seed the integration mesh; the mapped quantiles
// of the inner CDF keep narrow transition regions from being stepped over
constexpr double kMeshProbs[] = {1e-12, 1e-9, 1e-6, 1e-4, 1e-3, 0.01, 0.05, 0.1,  0.25,
                                 0.5,   0.75, 0.9,  0.95, 0.99, 1 - 1e-3, 1 - 1e-6, 1 - 1e-9};

}  // namespace

PairwiseMatrix::PairwiseMatrix(int n_) : n(n_) {
    if (n < 1) throw ValidationError("pairwise matrix: n must be at least 1");
    p.assign(static_cast<std::size_t>(n) * n, 0.0);
}

double p_sam_pair(const Instance& inst, int j, int k, double tol) {
    check_pair(inst, j, k);
    const Job& J = inst.jobs[j];
    const Job& K = inst.jobs[k];
    const bool j_atomic = is_atomic(J.dist);
    const bool k_atomic = is_atomic(K.dist);

    if (j_atomic && k_atomic) {
        return p_pair_atomic(J.weight, atoms(J.dist), j, K.weight, atoms(K.dist), k);
    }
    if (j_atomic) {
        // j goes first iff the sample for k exceeds (w_k/w_j) * x
        const double c = K.weight / J.weight;
        double p = 0.0;
        for (const Atom& x : atoms(J.dist)) p += x.prob * (1.0 - cdf(K.dist, c * x.value));
        return clamp_prob(p);
    }
    if (k_atomic) {
        const double c = J.weight / K.weight;
        double p = 0.0;
        for (const Atom& y : atoms(K.dist)) p += y.prob * cdf(J.dist, c * y.value);
        return clamp_prob(p);
    }

    QuadratureConfig cfg;
    cfg.rel_tol = tol;
    const double c = J.weight / K.weight;
    const double lo = quantile(K.dist, 0.0);
    const double hi = quantile(K.dist, 1.0 - cfg.tail_mass);
    std::vector<double> mesh = {lo, hi};
    for (const double p : kMeshProbs) {
        mesh.push_back(std::clamp(quantile(K.dist, p), lo, hi));
        mesh.push_back(std::clamp(quantile(J.dist, p) / c, lo, hi));
    }
    const double got = integrate_segmented(
        [&](double y) { return pdf(K.dist, y) * cdf(J.dist, c * y); }, std::move(mesh), cfg);
    return clamp_prob(got);
}

double p_exponential_closed(double pi_j, double pi_k) {
    if (!(pi_j > 0.0) || !(pi_k > 0.0)) {
        throw NonPositivePriority("p_exponential_closed: priorities must be positive");
    }
    return pi_j / (pi_j + pi_k);
}

PairwiseMatrix pairwise_matrix(const Instance& inst, Policy policy, double tol) {
    const int n = inst.n();
    PairwiseMatrix m(n);
    switch (policy) {
        case Policy::Rnd:
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    if (j != k) m.at(j, k) = 0.5;
                }
            }
            break;
        case Policy::Wsept: {
            const Permutation seq = wsept_order(inst);
            std::vector<int> pos(n);
            for (int t = 0; t < n; ++t) pos[seq.order[t]] = t;
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    if (j != k) m.at(j, k) = pos[j] < pos[k] ? 1.0 : 0.0;
                }
            }
            break;
        }
        case Policy::Sam:
            for (int j = 0; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    double p;
                    if (std::holds_alternative<Exponential>(inst.jobs[j].dist) &&
                        std::holds_alternative<Exponential>(inst.jobs[k].dist)) {
                        p = p_exponential_closed(priority(inst, j), priority(inst, k));
                    } else {
                        p = p_sam_pair(inst, j, k, tol);
                    }
                    m.at(j, k) = p;
                    m.at(k, j) = 1.0 - p;
                }
            }
            break;
    }
    return m;
}

double cost_from_pairwise(const Instance& inst, const PairwiseMatrix& m) {
    const int n = inst.n();
    if (m.n != n) throw ValidationError("cost_from_pairwise: matrix size mismatch");
    const Permutation seq = wsept_order(inst);
    double cost = l_cost(inst);
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            const int a = seq.order[s];
            const int b = seq.order[t];
            cost += m.at(b, a) * delta(inst, a, b);
        }
    }
    return cost;
}

double rog(const Instance& inst, const PairwiseMatrix& m) {
    const int n = inst.n();
    if (m.n != n) throw ValidationError("rog: matrix size mismatch");
    const Permutation seq = wsept_order(inst);
    double num = 0.0;
    double den = 0.0;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            const int a = seq.order[s];
            const int b = seq.order[t];
            const double d = delta(inst, a, b);
            num += m.at(b, a) * d;
            den += d;
        }
    }
    if (!(den > 0.0)) {
        throw DegenerateInstance("rog: L equals H, relative optimality gap undefined");
    }
    return num / den;
}

double kappa(const Instance& inst, const PairwiseMatrix& m) {
    const int n = inst.n();
    if (m.n != n) throw ValidationError("kappa: matrix size mismatch");
    const std::vector<double> prio = priorities(inst);
    double kap = 1.0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j != k && prio[j] > prio[k]) kap = std::min(kap, m.at(j, k));
        }
    }
    return kap;
}

double alpha_separation(const Instance& inst) {
    const std::vector<double> prio = priorities(inst);
    double best = kInf;
    for (std::size_t j = 0; j < prio.size(); ++j) {
        for (std::size_t k = j + 1; k < prio.size(); ++k) {
            if (prio[j] != prio[k]) {
                best = std::min(best, std::max(prio[j] / prio[k], prio[k] / prio[j]));
            }
        }
    }
    return best;
}

bool all_exponential(const Instance& inst) {
    return std::all_of(inst.jobs.begin(), inst.jobs.end(), [](const Job& job) {
        return std::holds_alternative<Exponential>(job.dist);
    });
}

AnalysisReport analyze(const Instance& inst, Policy policy, double tol) {
    AnalysisReport r;
    r.n = inst.n();
    r.policy = policy;
    r.l = l_cost(inst);
    r.h = h_cost(inst);
    const PairwiseMatrix m = pairwise_matrix(inst, policy, tol);
    r.cost = cost_from_pairwise(inst, m);
    r.rog = rog(inst, m);
    r.kappa = kappa(inst, m);
    r.alpha = alpha_separation(inst);
    r.near_degenerate = (r.h - r.l) < 1e-9 * r.l;
    r.bound_half_ok = r.rog <= 0.5 + 1e-9;
    if (all_exponential(inst)) r.bound_alpha = 1.0 / (1.0 + r.alpha);
    return r;
}

}  // namespace samsched
