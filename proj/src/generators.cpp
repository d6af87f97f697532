#include "samsched/generators.hpp"

#include <algorithm>
#include <cmath>

namespace samsched {

namespace {

constexpr double kParamLo = 0.1;
constexpr double kParamHi = 10.0;

BaseDensityPtr random_base(RngStream& g) {
    switch (uniform_int(g, 0, 2)) {
        case 0: return find_base_density("exp1");
        case 1: return find_base_density("uniform01x2");
        default: return find_base_density("tri02");
    }
}

Distribution random_symmetric_dist(RngStream& g) {
    switch (uniform_int(g, 0, 3)) {
        case 0:
        case 1: {
            const double m = log_uniform(g, kParamLo, kParamHi);
            const double h = m * (0.05 + 0.9 * g.next_unit());
            return UniformInterval(m - h, m + h);
        }
        case 2: return Translated(find_base_density("uniform01x2"), log_uniform(g, kParamLo, kParamHi));
        default: return Translated(find_base_density("tri02"), log_uniform(g, kParamLo, kParamHi));
    }
}

Distribution random_finite_discrete(RngStream& g, int max_atoms, bool allow_zero_atom) {
    const int k = uniform_int(g, std::min(2, max_atoms), max_atoms);
    std::vector<Atom> atoms;
    for (int tries = 0; tries < 100; ++tries) {
        atoms.clear();
        std::vector<double> values(k);
        for (int i = 0; i < k; ++i) values[i] = log_uniform(g, 0.05, 20.0);
        if (allow_zero_atom && k >= 2 && g.next_unit() < 0.25) values[0] = 0.0;
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end()) continue;
        double total = 0.0;
        std::vector<double> probs(k);
        for (int i = 0; i < k; ++i) {
            probs[i] = 0.05 + 0.95 * g.next_unit();
            total += probs[i];
        }
        for (int i = 0; i < k; ++i) atoms.push_back({values[i], probs[i] / total});
        return FiniteDiscrete(atoms);
    }
    throw ValidationError("random_finite_discrete: could not draw distinct atoms");
}

}  // namespace

double log_uniform(RngStream& g, double lo, double hi) {
    return lo * std::exp(g.next_unit() * std::log(hi / lo));
}

int uniform_int(RngStream& g, int lo, int hi) {
    if (lo > hi) throw ValidationError("uniform_int: empty range");
    return lo + static_cast<int>(g.next_below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Instance random_symmetric_instance(RngStream& g) {
    const int n = uniform_int(g, 2, 8);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        jobs.emplace_back(log_uniform(g, kParamLo, kParamHi), random_symmetric_dist(g));
    }
    return Instance(std::move(jobs));
}

Instance random_shape_uniform_instance(RngStream& g) {
    const int n = uniform_int(g, 2, 8);
    const BaseDensityPtr base = random_base(g);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        jobs.emplace_back(log_uniform(g, kParamLo, kParamHi),
                          ShapeUniform(base, log_uniform(g, kParamLo, kParamHi)));
    }
    return Instance(std::move(jobs));
}

Instance random_translated_instance(RngStream& g) {
    const int n = uniform_int(g, 2, 8);
    const BaseDensityPtr base = random_base(g);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        jobs.emplace_back(1.0, Translated(base, log_uniform(g, kParamLo, kParamHi)));
    }
    return Instance(std::move(jobs));
}

Instance random_exponential_instance(RngStream& g) {
    const int n = uniform_int(g, 2, 8);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        jobs.emplace_back(log_uniform(g, kParamLo, kParamHi),
                          Exponential(log_uniform(g, kParamLo, kParamHi)));
    }
    return Instance(std::move(jobs));
}

Instance random_alpha_separated_instance(double alpha, RngStream& g) {
    if (!(alpha >= 1.0)) throw ValidationError("alpha-separated instance: alpha must be >= 1");
    if (alpha == 1.0) return random_exponential_instance(g);
    const int n = uniform_int(g, 2, 8);
    const int groups = uniform_int(g, 2, std::min(3, n));
    const double base = std::ldexp(1.0, uniform_int(g, -3, 3));
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        const int grp = i < groups ? i : uniform_int(g, 0, groups - 1);
        const double pi = base * std::pow(alpha, grp);
        // powers of two keep w / E[P] exactly equal within a group
        const double lam = std::ldexp(1.0, uniform_int(g, -5, 5));
        jobs.emplace_back(pi / lam, Exponential(lam));
    }
    return Instance(std::move(jobs));
}

Instance random_mixed_instance(RngStream& g) {
    const int n = uniform_int(g, 2, 8);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        const double w = log_uniform(g, kParamLo, kParamHi);
        switch (uniform_int(g, 0, 5)) {
            case 0: jobs.emplace_back(w, Deterministic(log_uniform(g, kParamLo, kParamHi))); break;
            case 1: jobs.emplace_back(w, random_finite_discrete(g, 3, true)); break;
            case 2: jobs.emplace_back(w, Exponential(log_uniform(g, kParamLo, kParamHi))); break;
            case 3: jobs.emplace_back(w, random_symmetric_dist(g)); break;
            case 4:
                jobs.emplace_back(w, ShapeUniform(random_base(g), log_uniform(g, kParamLo, kParamHi)));
                break;
            default:
                jobs.emplace_back(w, Translated(random_base(g), log_uniform(g, kParamLo, kParamHi)));
                break;
        }
    }
    return Instance(std::move(jobs));
}

Instance random_discrete_instance(RngStream& g, int max_n, int max_atoms) {
    const int n = uniform_int(g, 2, max_n);
    std::vector<Job> jobs;
    for (int i = 0; i < n; ++i) {
        const double w = log_uniform(g, kParamLo, kParamHi);
        if (g.next_unit() < 0.25) {
            jobs.emplace_back(w, Deterministic(log_uniform(g, 0.05, 20.0)));
        } else {
            jobs.emplace_back(w, random_finite_discrete(g, max_atoms, true));
        }
    }
    return Instance(std::move(jobs));
}

Instance example1_instance(int n, double M, double eps) {
    if (n < 2) throw ValidationError("example1: needs n >= 2");
    if (!(M > 2.0)) throw ValidationError("example1: needs M > 2");
    if (!(eps > 0.0)) throw ValidationError("example1: needs eps > 0");
    std::vector<Job> jobs;
    for (int i = 0; i + 1 < n; ++i) jobs.emplace_back(1.0, Deterministic(eps));
    jobs.emplace_back(1.0, FiniteDiscrete({{0.0, 1.0 - 1.0 / M}, {M * M, 1.0 / M}}));
    return Instance(std::move(jobs));
}

Instance example2_instance(double M, double eps) {
    if (!(M > 2.0)) throw ValidationError("example2: needs M > 2");
    if (!(eps > 0.0)) throw ValidationError("example2: needs eps > 0");
    const double q = 1.0 / M;
    const double shift = 1.0 + eps;
    std::vector<Job> jobs;
    jobs.emplace_back(1.0, FiniteDiscrete({{1.0, 1.0 - q}, {M * M, q}}));
    jobs.emplace_back(2.0, FiniteDiscrete({{1.0 + shift, 1.0 - q}, {M * M + shift, q}}));
    return Instance(std::move(jobs));
}

Instance two_job_alpha_instance(double alpha) {
    if (!(alpha >= 1.0)) throw ValidationError("two_job_alpha_instance: alpha must be >= 1");
    // an exact ratio of 1 would make L == H
    const double r = alpha == 1.0 ? 1.0 + 2e-9 : alpha;
    std::vector<Job> jobs;
    jobs.emplace_back(1.0, Exponential(r));
    jobs.emplace_back(1.0, Exponential(1.0));
    return Instance(std::move(jobs));
}

}  // namespace samsched
