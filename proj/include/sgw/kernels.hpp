#pragma once

// Data-parallel inner loops of the field solver. Each kernel has a serial
// reference and an OpenMP version; both evaluate the same expression per
// element, so their results are bit-identical.

#include <span>

namespace sgw::kernels {

struct LeapfrogCoeffs {
  double alpha;
  double gamma;
  double dt;
  double dx;
};

// One leapfrog step with time-centred damping:
//   next_i = (2 phi_i - (1 - a) prev_i + dt^2 (D2 phi_i - sin phi_i - gamma)) / (1 + a),
// a = alpha dt / 2. `left_ghost` and `right_ghost` are phi at indices -1 and n.
void leapfrog_serial(std::span<const double> phi, std::span<const double> prev,
                     std::span<double> next, double left_ghost, double right_ghost,
                     const LeapfrogCoeffs& c);
void leapfrog_parallel(std::span<const double> phi, std::span<const double> prev,
                       std::span<double> next, double left_ghost, double right_ghost,
                       const LeapfrogCoeffs& c);

// Mean squared difference between phi and a window of `extended` for each
// integer offset j in [0, mse.size()):
//   mse[j] = mean_i (phi[i] - extended[i + mse.size() - 1 - j])^2
// extended.size() must be >= phi.size() + mse.size() - 1.
void shift_mse_serial(std::span<const double> phi, std::span<const double> extended,
                      std::span<double> mse);
void shift_mse_parallel(std::span<const double> phi, std::span<const double> extended,
                        std::span<double> mse);

// max |v_i|, or +inf if any entry is not finite.
double max_abs_serial(std::span<const double> v);
double max_abs_parallel(std::span<const double> v);

}  // namespace sgw::kernels
