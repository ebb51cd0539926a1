#include "sgw/pde_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/kernels.hpp"

namespace sgw {
namespace {

constexpr std::size_t kMinGridPoints = 64;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void sample_wave(FieldState& s, const TravellingWave& wave) {
  s.phi.resize(s.n);
  s.phi_prev.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.phi[i] = phi_eval(wave, s.x(i), s.t);
    s.phi_prev[i] = phi_eval(wave, s.x(i), s.t - s.dt);
  }
}

// phi at indices -1 and n.
std::pair<double, double> ghosts(const FieldState& s) {
  if (s.boundary == Boundary::TwistedPeriodic) {
    return {s.phi.back() - s.twist(), s.phi.front() + s.twist()};
  }
  // Dirichlet end points are overwritten after the update.
  return {s.phi.front(), s.phi.back()};
}

double sum_squares(std::span<const double> phi, const FieldState& s, const TravellingWave& ref,
                   double shift) {
  double sum = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) {
    const double d = phi[i] - phi_eval(ref, s.x(i) - shift, s.t);
    sum += d * d;
  }
  return sum / static_cast<double>(s.n);
}

}  // namespace

double FieldState::length() const {
  if (boundary == Boundary::TwistedPeriodic) return static_cast<double>(n) * dx;
  return static_cast<double>(n - 1) * dx;
}

FieldState init_from_wave(const TravellingWave& wave, std::size_t n, const Domain& domain,
                          double dt) {
  if (n < kMinGridPoints) {
    throw DomainError("init_from_wave: need at least " + std::to_string(kMinGridPoints) +
                      " grid points");
  }
  if (!(dt > 0.0)) throw DomainError("init_from_wave: dt must be > 0");

  FieldState s;
  s.n = n;
  s.dt = dt;
  if (const auto* circle = std::get_if<CircleDomain>(&domain)) {
    if (!(wave.params().gamma() > 1.0)) {
      throw DomainError("init_from_wave: circle domain requires gamma > 1 (Xi undefined)");
    }
    if (circle->m < 1) throw DomainError("init_from_wave: winding m must be >= 1");
    s.dx = circle->m * xi_period(wave.params()) / static_cast<double>(n);
    s.winding = circle->m;
    s.twist_sign = sign_of(wave.chirality());
    s.boundary = Boundary::TwistedPeriodic;
  } else {
    const auto& seg = std::get<SegmentDomain>(domain);
    if (!(seg.x_hi > seg.x_lo)) throw DomainError("init_from_wave: segment needs x_lo < x_hi");
    s.x_origin = seg.x_lo;
    s.dx = (seg.x_hi - seg.x_lo) / static_cast<double>(n - 1);
    s.boundary = Boundary::DirichletFromWave;
    s.pinned = wave;
  }
  sample_wave(s, wave);
  return s;
}

FieldState uniform_field(double value, double rate, std::size_t n, double length, double dt) {
  if (n < 2 || !(length > 0.0) || !(dt > 0.0)) {
    throw DomainError("uniform_field: need n >= 2, length > 0, dt > 0");
  }
  FieldState s;
  s.n = n;
  s.dx = length / static_cast<double>(n);
  s.dt = dt;
  s.phi.assign(n, value);
  s.phi_prev.assign(n, value - rate * dt);
  return s;
}

void step(FieldState& state, const ModelParams& params, double dt, bool parallel) {
  if (std::abs(dt - state.dt) > 1e-12 * state.dt) {
    throw DomainError("step: dt differs from the time step stored in the state");
  }
  if (dt > state.dx) throw DomainError("step: dt exceeds dx (CFL)");

  const kernels::LeapfrogCoeffs coeffs{params.alpha(), params.gamma(), dt, state.dx};
  const auto [left, right] = ghosts(state);
  std::vector<double> next(state.n);
  if (parallel) {
    kernels::leapfrog_parallel(state.phi, state.phi_prev, next, left, right, coeffs);
  } else {
    kernels::leapfrog_serial(state.phi, state.phi_prev, next, left, right, coeffs);
  }

  const double t_next = state.t + dt;
  if (state.boundary == Boundary::DirichletFromWave) {
    next.front() = phi_eval(*state.pinned, state.x(0), t_next);
    next.back() = phi_eval(*state.pinned, state.x(state.n - 1), t_next);
  }
  const double peak = parallel ? kernels::max_abs_parallel(next) : kernels::max_abs_serial(next);
  if (!(peak <= kBlowUpThreshold)) {
    throw BlowUp("field exceeded " + std::to_string(kBlowUpThreshold) + " at t = " +
                     std::to_string(t_next),
                 t_next);
  }
  state.phi_prev = std::move(state.phi);
  state.phi = std::move(next);
  state.t = t_next;
}

void apply_perturbation(FieldState& state, const Perturbation& p) {
  if (!(p.amplitude >= 0.0)) throw DomainError("perturbation amplitude must be >= 0");
  const double length = state.length();
  for (std::size_t i = 0; i < state.n; ++i) {
    const double u = (state.x(i) - state.x_origin) / length;
    double bump = p.amplitude * std::sin(kTwoPi * p.mode * u);
    if (state.boundary == Boundary::DirichletFromWave) {
      const double w = std::sin(kPi * u);
      bump *= w * w;
    }
    state.phi[i] += bump;
    state.phi_prev[i] += bump;
  }
}

ComovingFit comoving_deviation(const FieldState& state, const TravellingWave& reference,
                               bool parallel) {
  const std::size_t n = state.n;
  const std::size_t count = n;
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(count / 2);

  // Candidate j has shift (j - half) dx; extended[k] is the reference at
  // x_origin + (k - (count - 1) + half) dx.
  std::vector<double> extended(n + count - 1);
  for (std::size_t k = 0; k < extended.size(); ++k) {
    const std::ptrdiff_t idx =
        static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(count - 1) + half;
    extended[k] = phi_eval(reference, state.x_origin + static_cast<double>(idx) * state.dx, state.t);
  }
  std::vector<double> mse(count);
  if (parallel) {
    kernels::shift_mse_parallel(state.phi, extended, mse);
  } else {
    kernels::shift_mse_serial(state.phi, extended, mse);
  }

  const std::size_t best = static_cast<std::size_t>(
      std::distance(mse.begin(), std::min_element(mse.begin(), mse.end())));
  double best_shift = static_cast<double>(static_cast<std::ptrdiff_t>(best) - half) * state.dx;
  double best_mse = mse[best];

  if (best > 0 && best + 1 < count) {
    const double m_minus = mse[best - 1];
    const double m_plus = mse[best + 1];
    const double curvature = m_minus - 2.0 * best_mse + m_plus;
    if (curvature > 0.0) {
      const double delta = std::clamp(0.5 * (m_minus - m_plus) / curvature, -1.0, 1.0);
      const double shift = best_shift + delta * state.dx;
      const double refined = sum_squares(state.phi, state, reference, shift);
      if (refined < best_mse) {
        best_mse = refined;
        best_shift = shift;
      }
    }
  }
  return {std::sqrt(best_mse), best_shift};
}

DeviationReport evolve(FieldState& state, const ModelParams& params, const SimConfig& config,
                       const std::optional<TravellingWave>& reference) {
  if (std::abs(config.dt - state.dt) > 1e-12 * state.dt) {
    throw DomainError("evolve: config dt differs from the state's time step");
  }
  if (!(config.t_end > 0.0)) throw DomainError("evolve: t_end must be > 0");
  if (config.dt > config.cfl_guard * state.dx * (1.0 + 1e-12)) {
    throw DomainError("evolve: dt exceeds cfl_guard * dx");
  }
  if (config.record_every < 1) throw DomainError("evolve: record_every must be >= 1");

  if (config.perturbation) apply_perturbation(state, *config.perturbation);

  DeviationReport report;
  const auto record = [&] {
    report.times.push_back(state.t);
    if (reference) {
      const ComovingFit fit = comoving_deviation(state, *reference, config.parallel);
      report.deviation.push_back(fit.deviation);
      report.best_shift.push_back(fit.shift);
    } else {
      report.deviation.push_back(kNaN);
      report.best_shift.push_back(kNaN);
    }
    report.winding.push_back(state.boundary == Boundary::TwistedPeriodic ? winding_number(state)
                                                                        : kNaN);
  };

  record();
  const double span = config.t_end - state.t;
  const auto steps = static_cast<long long>(std::ceil(span / config.dt - 1e-9));
  for (long long k = 1; k <= steps; ++k) {
    try {
      step(state, params, config.dt, config.parallel);
    } catch (const BlowUp& e) {
      if (!config.probe) throw;
      report.diverged_at = e.time();
      break;
    }
    if (k % config.record_every == 0 || k == steps) record();
  }
  return report;
}

double total_energy(const FieldState& state, const ModelParams& params) {
  const std::size_t n = state.n;
  const auto& phi = state.phi;
  const bool circle = state.boundary == Boundary::TwistedPeriodic;
  const auto [left, right] = ghosts(state);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double phi_x;
    if (circle || (i > 0 && i + 1 < n)) {
      const double l = i == 0 ? left : phi[i - 1];
      const double r = i + 1 == n ? right : phi[i + 1];
      phi_x = (r - l) / (2.0 * state.dx);
    } else if (i == 0) {
      phi_x = (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * state.dx);
    } else {
      phi_x = (3.0 * phi[n - 1] - 4.0 * phi[n - 2] + phi[n - 3]) / (2.0 * state.dx);
    }
    const double phi_t = (phi[i] - state.phi_prev[i]) / state.dt;
    const double weight = (!circle && (i == 0 || i + 1 == n)) ? 0.5 : 1.0;
    sum += weight * energy_density(phi[i], phi_t, phi_x, params.gamma());
  }
  return sum * state.dx;
}

double winding_number(const FieldState& state) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < state.n; ++i) {
    total += wrap_to(state.phi[i + 1] - state.phi[i], 0.0);
  }
  total += wrap_to(state.phi.front() - state.phi.back(), 0.0);
  return total / kTwoPi;
}

}  // namespace sgw
