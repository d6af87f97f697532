#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "samsched/errors.hpp"
#include "samsched/rng.hpp"

namespace samsched {

// A nonnegative density with its mean, upper support bound and inverse
// CDF. Shared shape g for the scaled and shifted families below.
struct BaseDensity {
    std::string name;
    double mean = 1.0;
    double support_hi = std::numeric_limits<double>::infinity();
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;
};

using BaseDensityPtr = std::shared_ptr<const BaseDensity>;

// Built-in catalog: "exp1" (unit-mean exponential), "uniform01x2"
// (uniform on [0, 2]), "tri02" (triangular on [0, 2], peak at 1).
// Throws ParseError for unknown names.
BaseDensityPtr find_base_density(const std::string& name);
std::vector<std::string> base_density_names();

struct Deterministic {
    double value;
    explicit Deterministic(double value);
};

struct Atom {
    double value;
    double prob;
};

struct FiniteDiscrete {
    std::vector<Atom> atoms;  // sorted by value, distinct, probs sum to 1
    explicit FiniteDiscrete(std::vector<Atom> atoms);
};

struct Exponential {
    double rate;
    explicit Exponential(double rate);
};

struct UniformInterval {
    double lo, hi;  // 0 <= lo < hi; symmetric about the midpoint
    UniformInterval(double lo, double hi);
};

// density rate * g(rate * x) for a unit-mean base g; mean is 1/rate
struct ShapeUniform {
    BaseDensityPtr base;
    double rate;
    ShapeUniform(BaseDensityPtr base, double rate);
};

// density g(x - shift); mean is base mean + shift
struct Translated {
    BaseDensityPtr base;
    double shift;
    Translated(BaseDensityPtr base, double shift);
};

using Distribution = std::variant<Deterministic, FiniteDiscrete, Exponential,
                                  UniformInterval, ShapeUniform, Translated>;

bool is_atomic(const Distribution& d);  // Deterministic or FiniteDiscrete
bool has_density(const Distribution& d);
std::vector<Atom> atoms(const Distribution& d);  // atomic kinds only, else NotDiscrete

double pdf(const Distribution& d, double x);  // NoDensity for atomic kinds
double cdf(const Distribution& d, double x);  // every kind, right-continuous
double mean(const Distribution& d);           // analytic, never quadrature
double support_hi(const Distribution& d);
double quantile(const Distribution& d, double p);  // continuous kinds only
double sample(const Distribution& d, RngStream& rng);

// true iff the density mirrors around the mean, checked on a 2001-point
// grid over [0, 2*mean]; exact for UniformInterval
bool is_symmetric(const Distribution& d, double tol = 1e-9);

}  // namespace samsched
