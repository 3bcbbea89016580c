#pragma once

#include <functional>
#include <span>

namespace npg {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< sum of |S2 - S1| / 15 over accepted panels
    long evaluations = 0;
};

/// Adaptive Simpson with an absolute tolerance, Richardson-corrected panels.
/// `breakpoints` (sorted, inside (a, b)) split the range before refinement so
/// known kinks never sit inside a panel. Throws ConfigError on a non-positive
/// tolerance and DomainError on a non-finite integrand value.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::span<const double> breakpoints = {},
                                  int max_depth = 48);

}  // namespace npg
