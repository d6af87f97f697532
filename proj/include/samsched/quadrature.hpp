#pragma once

#include <functional>
#include <vector>

namespace samsched {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    int max_subdivisions = 10000;
    // callers truncate infinite upper limits at quantile(1 - tail_mass)
    double tail_mass = 1e-12;
};

// Globally adaptive Gauss-Kronrod (G7, K15) integration on a finite
// interval. Splits the segment with the largest error estimate until the
// total estimated error falls below rel_tol * |integral|. Throws
// QuadratureFailure when the subdivision budget runs out or the integrand
// is not finite.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg = {});

// Same scheme, but the initial mesh is the sorted breakpoint list. Use
// this when the integrand has narrow features the first scan could step
// over; breakpoints outside [front, back] order are deduplicated.
double integrate_segmented(const std::function<double(double)>& f,
                           std::vector<double> breakpoints, const QuadratureConfig& cfg = {});

}  // namespace samsched
