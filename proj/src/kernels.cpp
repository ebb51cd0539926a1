#include "sgw/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace sgw::kernels {
namespace {

inline double leapfrog_point(double left, double centre, double right, double prev,
                             const LeapfrogCoeffs& c, double a, double inv_dx2) {
  const double lap = (left - 2.0 * centre + right) * inv_dx2;
  const double force = lap - std::sin(centre) - c.gamma;
  return (2.0 * centre - (1.0 - a) * prev + c.dt * c.dt * force) / (1.0 + a);
}

inline double squared_offset_error(std::span<const double> phi, std::span<const double> extended,
                                   std::size_t offset) {
  double sum = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double d = phi[i] - extended[i + offset];
    sum += d * d;
  }
  return sum / static_cast<double>(phi.size());
}

}  // namespace

void leapfrog_serial(std::span<const double> phi, std::span<const double> prev,
                     std::span<double> next, double left_ghost, double right_ghost,
                     const LeapfrogCoeffs& c) {
  const std::size_t n = phi.size();
  const double a = 0.5 * c.alpha * c.dt;
  const double inv_dx2 = 1.0 / (c.dx * c.dx);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? left_ghost : phi[i - 1];
    const double right = i + 1 == n ? right_ghost : phi[i + 1];
    next[i] = leapfrog_point(left, phi[i], right, prev[i], c, a, inv_dx2);
  }
}

void leapfrog_parallel(std::span<const double> phi, std::span<const double> prev,
                       std::span<double> next, double left_ghost, double right_ghost,
                       const LeapfrogCoeffs& c) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(phi.size());
  const double a = 0.5 * c.alpha * c.dt;
  const double inv_dx2 = 1.0 / (c.dx * c.dx);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double left = i == 0 ? left_ghost : phi[i - 1];
    const double right = i + 1 == n ? right_ghost : phi[i + 1];
    next[i] = leapfrog_point(left, phi[i], right, prev[i], c, a, inv_dx2);
  }
}

void shift_mse_serial(std::span<const double> phi, std::span<const double> extended,
                      std::span<double> mse) {
  const std::size_t count = mse.size();
  for (std::size_t j = 0; j < count; ++j) {
    mse[j] = squared_offset_error(phi, extended, count - 1 - j);
  }
}

void shift_mse_parallel(std::span<const double> phi, std::span<const double> extended,
                        std::span<double> mse) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(mse.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    mse[j] = squared_offset_error(phi, extended, static_cast<std::size_t>(count - 1 - j));
  }
}

double max_abs_serial(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
    m = std::max(m, std::abs(x));
  }
  return m;
}

double max_abs_parallel(std::span<const double> v) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double x = v[i];
    const double a = std::isfinite(x) ? std::abs(x) : std::numeric_limits<double>::infinity();
    m = std::max(m, a);
  }
  return m;
}

}  // namespace sgw::kernels
