#include "samsched/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "samsched/quadrature.hpp"

namespace samsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool cond, const char* msg) {
    if (!cond) throw ValidationError(msg);
}

BaseDensityPtr make_exp1() {
    auto b = std::make_shared<BaseDensity>();
    b->name = "exp1";
    b->mean = 1.0;
    b->support_hi = kInf;
    b->pdf = [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); };
    b->cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); };
    b->quantile = [](double p) { return -std::log1p(-p); };
    return b;
}

BaseDensityPtr make_uniform01x2() {
    auto b = std::make_shared<BaseDensity>();
    b->name = "uniform01x2";
    b->mean = 1.0;
    b->support_hi = 2.0;
    b->pdf = [](double x) { return (x >= 0.0 && x <= 2.0) ? 0.5 : 0.0; };
    b->cdf = [](double x) { return x <= 0.0 ? 0.0 : (x >= 2.0 ? 1.0 : 0.5 * x); };
    b->quantile = [](double p) { return 2.0 * p; };
    return b;
}

BaseDensityPtr make_tri02() {
    auto b = std::make_shared<BaseDensity>();
    b->name = "tri02";
    b->mean = 1.0;
    b->support_hi = 2.0;
    b->pdf = [](double x) {
        if (x < 0.0 || x > 2.0) return 0.0;
        return x <= 1.0 ? x : 2.0 - x;
    };
    b->cdf = [](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 2.0) return 1.0;
        if (x <= 1.0) return 0.5 * x * x;
        const double t = 2.0 - x;
        return 1.0 - 0.5 * t * t;
    };
    b->quantile = [](double p) {
        if (p <= 0.5) return std::sqrt(2.0 * p);
        return 2.0 - std::sqrt(2.0 * (1.0 - p));
    };
    return b;
}

const std::map<std::string, BaseDensityPtr>& catalog() {
    static const std::map<std::string, BaseDensityPtr> c = {
        {"exp1", make_exp1()},
        {"uniform01x2", make_uniform01x2()},
        {"tri02", make_tri02()},
    };
    return c;
}

}  // namespace

BaseDensityPtr find_base_density(const std::string& name) {
    const auto& c = catalog();
    const auto it = c.find(name);
    if (it == c.end()) throw ParseError("unknown base density '" + name + "'");
    return it->second;
}

std::vector<std::string> base_density_names() {
    std::vector<std::string> names;
    for (const auto& [name, base] : catalog()) names.push_back(name);
    return names;
}

Deterministic::Deterministic(double v) : value(v) {
    require(std::isfinite(value) && value > 0.0,
            "deterministic: value must be positive and finite");
}

FiniteDiscrete::FiniteDiscrete(std::vector<Atom> a) : atoms(std::move(a)) {
    require(!atoms.empty(), "finite: needs at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.value < y.value; });
    double prob_sum = 0.0;
    double mean_sum = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        require(std::isfinite(atoms[i].value) && atoms[i].value >= 0.0,
                "finite: atom values must be nonnegative and finite");
        require(std::isfinite(atoms[i].prob) && atoms[i].prob > 0.0,
                "finite: atom probabilities must be positive");
        if (i > 0) require(atoms[i].value != atoms[i - 1].value, "finite: atom values must be distinct");
        prob_sum += atoms[i].prob;
        mean_sum += atoms[i].value * atoms[i].prob;
    }
    require(std::fabs(prob_sum - 1.0) <= 1e-12, "finite: atom probabilities must sum to 1");
    require(mean_sum > 0.0, "finite: mean must be positive");
}

Exponential::Exponential(double r) : rate(r) {
    require(std::isfinite(rate) && rate > 0.0, "exponential: rate must be positive and finite");
}

UniformInterval::UniformInterval(double l, double h) : lo(l), hi(h) {
    require(std::isfinite(lo) && std::isfinite(hi), "uniform: bounds must be finite");
    require(lo >= 0.0 && lo < hi, "uniform: requires 0 <= lo < hi");
}

ShapeUniform::ShapeUniform(BaseDensityPtr b, double r) : base(std::move(b)), rate(r) {
    require(base != nullptr, "shape_uniform: base density required");
    require(std::isfinite(rate) && rate > 0.0, "shape_uniform: rate must be positive and finite");
    const double hi =
        std::isfinite(base->support_hi) ? base->support_hi : base->quantile(1.0 - 1e-12);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-10;
    const double m = integrate([this](double x) { return x * base->pdf(x); }, 0.0, hi, cfg);
    require(std::fabs(m - 1.0) <= 1e-9, "shape_uniform: base density must have mean 1");
}

Translated::Translated(BaseDensityPtr b, double s) : base(std::move(b)), shift(s) {
    require(base != nullptr, "translated: base density required");
    require(std::isfinite(shift) && shift >= 0.0, "translated: shift must be nonnegative");
    require(base->quantile(0.0) >= 0.0, "translated: base support must be nonnegative");
    require(std::isfinite(base->mean) && base->mean > 0.0,
            "translated: base mean must be positive and finite");
}

bool is_atomic(const Distribution& d) {
    return std::holds_alternative<Deterministic>(d) || std::holds_alternative<FiniteDiscrete>(d);
}

bool has_density(const Distribution& d) { return !is_atomic(d); }

std::vector<Atom> atoms(const Distribution& d) {
    if (const auto* det = std::get_if<Deterministic>(&d)) return {{det->value, 1.0}};
    if (const auto* fd = std::get_if<FiniteDiscrete>(&d)) return fd->atoms;
    throw NotDiscrete("atoms: distribution is not discrete");
}

double pdf(const Distribution& d, double x) {
    return std::visit(
        overloaded{
            [](const Deterministic&) -> double {
                throw NoDensity("pdf: deterministic distribution has no density");
            },
            [](const FiniteDiscrete&) -> double {
                throw NoDensity("pdf: finite discrete distribution has no density");
            },
            [x](const Exponential& e) { return x < 0.0 ? 0.0 : e.rate * std::exp(-e.rate * x); },
            [x](const UniformInterval& u) {
                return (x >= u.lo && x <= u.hi) ? 1.0 / (u.hi - u.lo) : 0.0;
            },
            [x](const ShapeUniform& s) { return x < 0.0 ? 0.0 : s.rate * s.base->pdf(s.rate * x); },
            [x](const Translated& t) { return t.base->pdf(x - t.shift); },
        },
        d);
}

double cdf(const Distribution& d, double x) {
    return std::visit(
        overloaded{
            [x](const Deterministic& det) { return x >= det.value ? 1.0 : 0.0; },
            [x](const FiniteDiscrete& fd) {
                double p = 0.0;
                for (const Atom& a : fd.atoms) {
                    if (a.value <= x) p += a.prob;
                }
                return p;
            },
            [x](const Exponential& e) { return x <= 0.0 ? 0.0 : -std::expm1(-e.rate * x); },
            [x](const UniformInterval& u) {
                if (x <= u.lo) return 0.0;
                if (x >= u.hi) return 1.0;
                return (x - u.lo) / (u.hi - u.lo);
            },
            [x](const ShapeUniform& s) { return s.base->cdf(s.rate * x); },
            [x](const Translated& t) { return t.base->cdf(x - t.shift); },
        },
        d);
}

double mean(const Distribution& d) {
    return std::visit(
        overloaded{
            [](const Deterministic& det) { return det.value; },
            [](const FiniteDiscrete& fd) {
                double m = 0.0;
                for (const Atom& a : fd.atoms) m += a.value * a.prob;
                return m;
            },
            [](const Exponential& e) { return 1.0 / e.rate; },
            [](const UniformInterval& u) { return 0.5 * (u.lo + u.hi); },
            [](const ShapeUniform& s) { return 1.0 / s.rate; },
            [](const Translated& t) { return t.base->mean + t.shift; },
        },
        d);
}

double support_hi(const Distribution& d) {
    return std::visit(
        overloaded{
            [](const Deterministic& det) { return det.value; },
            [](const FiniteDiscrete& fd) { return fd.atoms.back().value; },
            [](const Exponential&) { return kInf; },
            [](const UniformInterval& u) { return u.hi; },
            [](const ShapeUniform& s) { return s.base->support_hi / s.rate; },
            [](const Translated& t) { return t.base->support_hi + t.shift; },
        },
        d);
}

double quantile(const Distribution& d, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("quantile: p must be in [0, 1]");
    return std::visit(
        overloaded{
            [](const Deterministic&) -> double {
                throw NoDensity("quantile: only defined for continuous kinds");
            },
            [](const FiniteDiscrete&) -> double {
                throw NoDensity("quantile: only defined for continuous kinds");
            },
            [p](const Exponential& e) { return -std::log1p(-p) / e.rate; },
            [p](const UniformInterval& u) { return u.lo + p * (u.hi - u.lo); },
            [p](const ShapeUniform& s) { return s.base->quantile(p) / s.rate; },
            [p](const Translated& t) { return t.base->quantile(p) + t.shift; },
        },
        d);
}

double sample(const Distribution& d, RngStream& rng) {
    return std::visit(
        overloaded{
            [](const Deterministic& det) { return det.value; },
            [&rng](const FiniteDiscrete& fd) {
                const double u = rng.next_unit();
                double cum = 0.0;
                for (const Atom& a : fd.atoms) {
                    cum += a.prob;
                    if (u < cum) return a.value;
                }
                return fd.atoms.back().value;
            },
            [&rng](const Exponential& e) { return -std::log1p(-rng.next_unit()) / e.rate; },
            [&rng](const UniformInterval& u) { return u.lo + rng.next_unit() * (u.hi - u.lo); },
            [&rng](const ShapeUniform& s) { return s.base->quantile(rng.next_unit()) / s.rate; },
            [&rng](const Translated& t) { return t.base->quantile(rng.next_unit()) + t.shift; },
        },
        d);
}

bool is_symmetric(const Distribution& d, double tol) {
    if (is_atomic(d)) throw NoDensity("is_symmetric: distribution has no density");
    if (std::holds_alternative<UniformInterval>(d)) return true;

    const double e = mean(d);
    constexpr int kGridPoints = 2001;
    for (int i = 0; i < kGridPoints; ++i) {
        const double t = -e + (2.0 * e * i) / (kGridPoints - 1);
        if (std::fabs(pdf(d, e - t) - pdf(d, e + t)) > tol) return false;
    }
    return true;
}

}  // namespace samsched
