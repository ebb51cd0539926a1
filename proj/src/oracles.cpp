#include "sgw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/quadrature.hpp"

namespace sgw {
namespace {

constexpr int kMaxHalvings = 20;
constexpr double kMaxNodeSpacing = 0.1;
constexpr double kYCutoff = 1e12;

std::size_t node_count(Interval span) {
  if (!(std::isfinite(span.lo) && std::isfinite(span.hi)) || !(span.hi > span.lo)) {
    throw DomainError("ODE span must be finite with lo < hi");
  }
  const double n = std::ceil((span.hi - span.lo) / kMaxNodeSpacing);
  return std::max<std::size_t>(8, static_cast<std::size_t>(n));
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
}

std::vector<double> nodes(Interval span, std::size_t intervals) {
  std::vector<double> xs(intervals + 1);
  const double h = (span.hi - span.lo) / static_cast<double>(intervals);
  for (std::size_t k = 0; k <= intervals; ++k) xs[k] = span.lo + h * static_cast<double>(k);
  xs.back() = span.hi;
  return xs;
}

template <class Rhs>
double rk4(const Rhs& f, double v, double h) {
  const double k1 = f(v);
  const double k2 = f(v + 0.5 * h * k1);
  const double k3 = f(v + 0.5 * h * k2);
  const double k4 = f(v + h * k3);
  return v + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// g at every node, `sub` RK4 steps per node interval.
std::vector<double> integrate_g(const ModelParams& p, double g0, Interval span,
                                std::size_t intervals, std::size_t sub) {
  const double alpha = p.alpha();
  const double gamma = p.gamma();
  const auto rhs = [alpha, gamma](double g) { return (gamma - std::sin(g)) / alpha; };
  const double h = (span.hi - span.lo) / static_cast<double>(intervals * sub);
  std::vector<double> out(intervals + 1);
  double g = g0;
  out[0] = g;
  for (std::size_t k = 1; k <= intervals; ++k) {
    for (std::size_t j = 0; j < sub; ++j) g = rk4(rhs, g, h);
    out[k] = g;
  }
  return out;
}

// Riccati trajectory in two charts: y where |y| <= 1, z = -1/y elsewhere.
struct RiccatiRun {
  std::vector<double> angle;  // atan(y) at nodes
  std::vector<double> y;      // y at nodes (may be infinite)
  std::vector<double> poles;
};

struct Chart {
  bool inverted = false;  // true: v holds z = -1/y
  double v = 0.0;

  double y() const {
    if (!inverted) return v;
    if (v == 0.0) return -std::numeric_limits<double>::infinity();
    return -1.0 / v;
  }
  double angle() const {
    if (!inverted) return std::atan(v);
    if (v == 0.0) return -kPi / 2.0;
    return std::atan(v) - std::copysign(kPi / 2.0, v);
  }
  void normalise() {
    if (std::abs(v) > 1.0) {
      v = -1.0 / v;
      inverted = !inverted;
    }
  }
};

RiccatiRun integrate_y(const ModelParams& p, double y0, Interval span, std::size_t intervals,
                       std::size_t sub) {
  const double alpha = p.alpha();
  const double gamma = p.gamma();
  const auto rhs_y = [=](double y) { return (2.0 * y + gamma * (1.0 + y * y)) / (2.0 * alpha); };
  const auto rhs_z = [=](double z) { return (-2.0 * z + gamma * (1.0 + z * z)) / (2.0 * alpha); };
  const double h = (span.hi - span.lo) / static_cast<double>(intervals * sub);

  RiccatiRun run;
  run.angle.reserve(intervals + 1);
  run.y.reserve(intervals + 1);
  Chart c{false, y0};
  c.normalise();
  run.angle.push_back(c.angle());
  run.y.push_back(c.y());

  double x = span.lo;
  for (std::size_t k = 1; k <= intervals; ++k) {
    for (std::size_t j = 0; j < sub; ++j) {
      const double before = c.v;
      if (c.inverted) {
        c.v = rk4(rhs_z, c.v, h);
        // z crosses zero where y passes through infinity.
        if ((before < 0.0 && c.v >= 0.0) || (before > 0.0 && c.v <= 0.0)) {
          run.poles.push_back(x + h * before / (before - c.v));
        }
      } else {
        c.v = rk4(rhs_y, c.v, h);
      }
      if (!std::isfinite(c.v)) throw NoConvergence("ode_solve_y: non-finite state");
      x = span.lo + h * static_cast<double>((k - 1) * sub + j + 1);
      c.normalise();
    }
    run.angle.push_back(c.angle());
    run.y.push_back(c.y());
  }
  return run;
}

double angle_distance(double a, double b) {
  double d = a - b;
  d -= kPi * std::round(d / kPi);
  return std::abs(d);
}

}  // namespace

OdeSolution ode_solve_g(const ModelParams& params, double g0, Interval span, double tol) {
  check_tol(tol);
  const std::size_t intervals = node_count(span);
  std::size_t sub = 1;
  std::vector<double> prev = integrate_g(params, g0, span, intervals, sub);
  double diff = std::numeric_limits<double>::infinity();
  for (int halving = 0; halving < kMaxHalvings; ++halving) {
    sub *= 2;
    std::vector<double> cur = integrate_g(params, g0, span, intervals, sub);
    diff = 0.0;
    for (std::size_t k = 0; k < cur.size(); ++k) diff = std::max(diff, std::abs(cur[k] - prev[k]));
    if (diff < tol) {
      OdeSolution sol;
      sol.xs = nodes(span, intervals);
      sol.ys = std::move(cur);
      sol.step_used = (span.hi - span.lo) / static_cast<double>(intervals * sub);
      return sol;
    }
    prev = std::move(cur);
  }
  throw NoConvergence("ode_solve_g: refinements still differ by " + std::to_string(diff) +
                      " after " + std::to_string(kMaxHalvings) + " halvings");
}

OdeSolution ode_solve_y(const ModelParams& params, double y0, Interval span, double tol) {
  check_tol(tol);
  if (!std::isfinite(y0)) throw DomainError("ode_solve_y: y0 must be finite");
  const std::size_t intervals = node_count(span);
  std::size_t sub = 1;
  RiccatiRun prev = integrate_y(params, y0, span, intervals, sub);
  double diff = std::numeric_limits<double>::infinity();
  for (int halving = 0; halving < kMaxHalvings; ++halving) {
    sub *= 2;
    RiccatiRun cur = integrate_y(params, y0, span, intervals, sub);
    diff = cur.poles.size() == prev.poles.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cur.angle.size(); ++k) {
      diff = std::max(diff, angle_distance(cur.angle[k], prev.angle[k]));
    }
    if (diff < tol) {
      OdeSolution sol;
      const std::vector<double> xs = nodes(span, intervals);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (std::abs(cur.y[k]) <= kYCutoff) {
          sol.xs.push_back(xs[k]);
          sol.ys.push_back(cur.y[k]);
        }
      }
      sol.pole_events = std::move(cur.poles);
      sol.step_used = (span.hi - span.lo) / static_cast<double>(intervals * sub);
      return sol;
    }
    prev = std::move(cur);
  }
  throw NoConvergence("ode_solve_y: refinements still differ by " + std::to_string(diff) +
                      " after " + std::to_string(kMaxHalvings) + " halvings");
}

double quad_period(const ModelParams& params, double tol) {
  if (!(params.gamma() > 1.0)) throw DomainError("quad_period: requires gamma > 1");
  check_tol(tol);
  const double alpha = params.alpha();
  const double gamma = params.gamma();
  return integrate_adaptive([=](double s) { return alpha / (gamma - std::sin(s)); }, 0.0, kTwoPi,
                            tol)
      .value;
}

double implicit_xi_of_g(const ModelParams& params, double g_from, double g_to, double tol) {
  check_tol(tol);
  if (!std::isfinite(g_from) || !std::isfinite(g_to)) {
    throw DomainError("implicit_xi_of_g: end points must be finite");
  }
  const double alpha = params.alpha();
  const double gamma = params.gamma();
  const double lo = std::min(g_from, g_to);
  const double hi = std::max(g_from, g_to);
  if (gamma <= 1.0) {
    // Zeros of gamma - sin s: asin(gamma) and pi - asin(gamma), mod 2 pi.
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    const double base = std::asin(gamma);
    for (double root : {base, kPi - base}) {
      const double k = std::ceil((lo - slack - root) / kTwoPi);
      if (root + kTwoPi * k <= hi + slack) {
        throw DomainError("implicit_xi_of_g: gamma - sin s vanishes at s = " +
                          std::to_string(root + kTwoPi * k) + " on the path");
      }
    }
  }
  if (lo == hi) return 0.0;
  const double value =
      integrate_adaptive([=](double s) { return alpha / (gamma - std::sin(s)); }, lo, hi, tol)
          .value;
  return g_to >= g_from ? value : -value;
}

double IdentityReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, r] : residuals) m = std::max(m, r);
  return m;
}

IdentityReport identities_check(double gamma) {
  const double th = theta(gamma);
  const double sqrt2 = std::sqrt(2.0);
  const double c = std::sqrt((1.0 - gamma) * (1.0 + gamma));
  const double root_plus = std::sqrt(1.0 + c);
  const double root_minus = std::sqrt(1.0 - c);
  const double quarter = kPi / 4.0 - th;

  IdentityReport rep;
  rep.gamma = gamma;
  rep.residuals["zaza"] =
      std::max(std::abs(root_plus - sqrt2 * std::cos(2.0 * th)),
               std::abs(sqrt2 - root_plus - 2.0 * sqrt2 * std::sin(th) * std::sin(th)));
  rep.residuals["zaza2"] =
      std::max(std::abs(root_minus - sqrt2 * std::sin(2.0 * th)),
               std::abs(sqrt2 - root_minus - 2.0 * sqrt2 * std::sin(quarter) * std::sin(quarter)));

  // y_+ = -gamma / (1 + c) stays finite at gamma = 0; y_- does not.
  const double y_plus = -gamma / (1.0 + c);
  rep.residuals["F_plus"] = std::abs(f_map(y_plus) - std::tan(quarter));
  if (gamma == 0.0) {
    rep.residuals["F_minus"] = 0.0;
  } else {
    const double y_minus = -(1.0 + c) / gamma;
    rep.residuals["F_minus"] = std::abs(f_map(y_minus) - std::tan(th));
  }
  rep.residuals["pi8"] = std::abs((sqrt2 - 1.0) - std::tan(kPi / 8.0));

  const double t = std::tan(th);
  const double rational = 4.0 * t * (1.0 - t * t) / ((1.0 + t * t) * (1.0 + t * t));
  rep.residuals["rationalize_sin4"] =
      std::max(std::abs(std::sin(4.0 * th) - rational), std::abs(std::sin(4.0 * th) - gamma));
  return rep;
}

double pde_residual(const TravellingWave& wave, double x, double t, double h) {
  if (!(h > 0.0)) throw DomainError("pde_residual: h must be > 0");
  const double xi = sign_of(wave.chirality()) * x - t;
  if (distance_to_pole(wave, xi) <= 10.0 * h) {
    throw PoleProximity("pde_residual: xi = " + std::to_string(xi) + " within 10h of a pole");
  }
  const auto phi = [&](double xx, double tt) { return phi_eval(wave, xx, tt); };
  const double f0 = phi(x, t);

  // Offsets from f0 keep the stencils exactly zero on constant fields.
  const double xp1 = phi(x + h, t) - f0, xp2 = phi(x + 2 * h, t) - f0;
  const double xm1 = phi(x - h, t) - f0, xm2 = phi(x - 2 * h, t) - f0;
  const double tp1 = phi(x, t + h) - f0, tp2 = phi(x, t + 2 * h) - f0;
  const double tm1 = phi(x, t - h) - f0, tm2 = phi(x, t - 2 * h) - f0;

  const double h2 = 12.0 * h * h;
  const double phi_xx = (-xp2 + 16.0 * xp1 + 16.0 * xm1 - xm2) / h2;
  const double phi_tt = (-tp2 + 16.0 * tp1 + 16.0 * tm1 - tm2) / h2;
  const double phi_t = (-tp2 + 8.0 * tp1 - 8.0 * tm1 + tm2) / (12.0 * h);

  const ModelParams& p = wave.params();
  return phi_tt - phi_xx + std::sin(f0) + p.alpha() * phi_t + p.gamma();
}

}  // namespace sgw
