#pragma once

#include <cstddef>
#include <functional>

namespace sgw {

struct QuadratureResult {
  double value;
  double error_estimate;
  std::size_t evaluations;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over [a, b].
///
/// The panel with the largest |K15 - G7| is bisected until the summed
/// estimate drops below `abs_tol`. Throws NoConvergence once more than
/// `max_evaluations` integrand calls would be needed.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_evaluations = 1'000'000);

}  // namespace sgw
