// Serial reference vs OpenMP kernels on a kink-array field.
//
//   bench_kernels [n] [steps]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "sgw/closed_form.hpp"
#include "sgw/kernels.hpp"
#include "sgw/pde_sim.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1 << 16;
  const int steps = argc > 2 ? std::atoi(argv[2]) : 200;

  const sgw::ModelParams params(0.5, 1.5);
  const sgw::TravellingWave wave(params, sgw::WaveBranch::KinkArray);
  const double dx = 64 * sgw::xi_period(params) / static_cast<double>(n);
  const sgw::FieldState base = sgw::init_from_wave(wave, n, sgw::CircleDomain{64}, 0.9 * dx);

  std::cout << "threads " << omp_get_max_threads() << "\nn " << n << "\nsteps " << steps << '\n';

  double checksum[2] = {0.0, 0.0};
  for (int variant = 0; variant < 2; ++variant) {
    sgw::FieldState s = base;
    const bool parallel = variant == 1;
    const double ms = time_ms([&] {
      for (int k = 0; k < steps; ++k) sgw::step(s, params, s.dt, parallel);
    });
    for (double v : s.phi) checksum[variant] += v;
    std::cout << (parallel ? "leapfrog_parallel " : "leapfrog_serial   ") << ms << " ms\n";
  }

  std::vector<double> mse(2048);
  std::vector<double> extended(n + mse.size() - 1, 0.5);
  for (int variant = 0; variant < 2; ++variant) {
    const bool parallel = variant == 1;
    const double ms = time_ms([&] {
      if (parallel) {
        sgw::kernels::shift_mse_parallel(base.phi, extended, mse);
      } else {
        sgw::kernels::shift_mse_serial(base.phi, extended, mse);
      }
    });
    std::cout << (parallel ? "shift_mse_parallel " : "shift_mse_serial   ") << ms << " ms\n";
  }

  const bool identical = checksum[0] == checksum[1];
  std::cout << "identical " << (identical ? "yes" : "no") << '\n';
  return identical ? 0 : 1;
}
