#include "samsched/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "samsched/compensated.hpp"
#include "samsched/errors.hpp"

namespace samsched {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Gauss nodes are kXgk[1], kXgk[3], kXgk[5] and the center.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double lo = 0, hi = 0;
    double value = 0;
    double error = 0;
};

Segment eval_segment(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double fval[7][2];
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fval[i][0] = f1;
        fval[i][1] = f2;
        resk += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int i = 0; i < 7; ++i) {
        resasc += kWgk[i] * (std::fabs(fval[i][0] - reskh) + std::fabs(fval[i][1] - reskh));
    }
    resasc *= std::fabs(half);

    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    return {lo, hi, resk * half, err};
}

bool worse(const Segment& a, const Segment& b) {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;  // deterministic tiebreak
}

double integrate_mesh(const std::function<double(double)>& f, const std::vector<double>& mesh,
                      const QuadratureConfig& cfg) {
    std::vector<Segment> heap;
    std::vector<Segment> frozen;  // segments too narrow to split further

    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
        Segment seg = eval_segment(f, mesh[i], mesh[i + 1]);
        if (!std::isfinite(seg.value)) {
            throw QuadratureFailure("integrate: integrand is not finite");
        }
        total += seg.value;
        total_err += seg.error;
        heap.push_back(seg);
    }
    std::make_heap(heap.begin(), heap.end(), worse);
    int n_segments = static_cast<int>(heap.size());

    while (total_err > cfg.rel_tol * std::fabs(total)) {
        if (heap.empty()) {
            throw QuadratureFailure("integrate: intervals cannot be refined further");
        }
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Segment seg = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (seg.lo + seg.hi);
        if (!(seg.lo < mid && mid < seg.hi)) {
            frozen.push_back(seg);
            continue;
        }
        if (++n_segments > cfg.max_subdivisions) {
            throw QuadratureFailure("integrate: subdivision budget exhausted");
        }
        const Segment left = eval_segment(f, seg.lo, mid);
        const Segment right = eval_segment(f, mid, seg.hi);
        if (!std::isfinite(left.value) || !std::isfinite(right.value)) {
            throw QuadratureFailure("integrate: integrand is not finite");
        }
        total += left.value + right.value - seg.value;
        total_err += left.error + right.error - seg.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }

    // re-sum in position order for a stable final rounding
    std::vector<Segment> all;
    all.reserve(heap.size() + frozen.size());
    all.insert(all.end(), heap.begin(), heap.end());
    all.insert(all.end(), frozen.begin(), frozen.end());
    std::sort(all.begin(), all.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    CompensatedSum sum;
    for (const Segment& s : all) sum.add(s.value);
    return sum.value();
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0)) throw ValidationError("integrate: rel_tol must be positive");
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw ValidationError("integrate: bounds must be finite");
    }
    if (lo == hi) return 0.0;
    if (lo > hi) throw ValidationError("integrate: lo must not exceed hi");
    return integrate_mesh(f, {lo, hi}, cfg);
}

double integrate_segmented(const std::function<double(double)>& f,
                           std::vector<double> breakpoints, const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0)) throw ValidationError("integrate: rel_tol must be positive");
    if (breakpoints.size() < 2) throw ValidationError("integrate: need at least two breakpoints");
    for (const double b : breakpoints) {
        if (!std::isfinite(b)) throw ValidationError("integrate: breakpoints must be finite");
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    if (breakpoints.size() < 2) return 0.0;
    return integrate_mesh(f, breakpoints, cfg);
}

}  // namespace samsched
