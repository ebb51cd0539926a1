#include "sgw/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "sgw/errors.hpp"

namespace sgw {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Inside this relative window around a pole, g is taken as its limit plus the
// first-order term; y overflows there.
constexpr double kPoleWindow = 1e-8;

struct BranchInfo {
  WaveBranch branch;
  std::string_view name;
};

constexpr std::array<BranchInfo, 8> kBranches{{
    {WaveBranch::ConstantS, "constant_s"},
    {WaveBranch::ConstantU, "constant_u"},
    {WaveBranch::Decreasing1, "decreasing1"},
    {WaveBranch::Increasing2, "increasing2"},
    {WaveBranch::CriticalKink, "critical_kink"},
    {WaveBranch::KinkArray, "kink_array"},
    {WaveBranch::PureSGDecreasing, "pure_sg_decreasing"},
    {WaveBranch::PureSGIncreasing, "pure_sg_increasing"},
}};

void require_branch(const TravellingWave& wave, bool ok, const char* op) {
  if (!ok) {
    throw DomainError(std::string(op) + ": not defined for branch " +
                      std::string(branch_name(wave.branch())));
  }
}

// A = sqrt(1 - gamma^2) / alpha.
double decay_rate(const ModelParams& p) {
  return std::sqrt((1.0 - p.gamma()) * (1.0 + p.gamma())) / p.alpha();
}

// Window half-width around the poles of a branch.
double pole_window(const TravellingWave& w) {
  const ModelParams& p = w.params();
  switch (w.branch()) {
    case WaveBranch::KinkArray: return kPoleWindow * std::max(1.0, xi_period(p));
    case WaveBranch::Increasing2: return kPoleWindow * std::max(1.0, 1.0 / decay_rate(p));
    case WaveBranch::CriticalKink: return kPoleWindow * std::max(1.0, p.alpha());
    default: return 0.0;
  }
}

// Kink-array phase: (xi - xi0)/Xi = n + r with r in [-1/2, 1/2).
struct KinkPhase {
  double n;
  double r;
};

KinkPhase kink_phase(const TravellingWave& w, double xi) {
  const double u = (xi - w.xi0()) / xi_period(w.params());
  const double n = std::floor(u + 0.5);
  return {n, u - n};
}

double y_subcritical(const TravellingWave& w, double s) {
  const FixedPoints fp = y_fixed_points(w.params());
  const double a = decay_rate(w.params()) * s;
  if (w.branch() == WaveBranch::Decreasing1) {
    if (s <= 0.0) {
      const double e = std::exp(a);
      return (fp.y_plus + fp.y_minus * e) / (1.0 + e);
    }
    const double em = std::exp(-a);
    return (fp.y_plus * em + fp.y_minus) / (em + 1.0);
  }
  if (s == 0.0) return -kInf;
  if (s < 0.0) {
    return (fp.y_plus - fp.y_minus * std::exp(a)) / (-std::expm1(a));
  }
  return (fp.y_plus * std::exp(-a) - fp.y_minus) / std::expm1(-a);
}

double y_kink_array(const TravellingWave& w, double r) {
  const double g = w.params().gamma();
  if (r == -0.5) return -kInf;
  // Amplitude sqrt(1 - 1/gamma^2), from w = (gamma y + 1) / sqrt(gamma^2 - 1) = tan(...).
  const double amp = std::sqrt((1.0 - 1.0 / g) * (1.0 + 1.0 / g));
  return -1.0 / g + amp * std::tan(kPi * r);
}

// 4 atan F(y) in [0, 2 pi].
double g_base(double y) { return 4.0 * std::atan(f_map(y)); }

// 2y / (1 + y^2), finite for infinite y.
double two_y_over_one_plus_y2(double y) {
  if (std::abs(y) > 1.0) return 2.0 / (y + 1.0 / y);
  return 2.0 * y / (1.0 + y * y);
}

}  // namespace

std::string_view branch_name(WaveBranch branch) {
  for (const auto& b : kBranches) {
    if (b.branch == branch) return b.name;
  }
  return "unknown";
}

std::optional<WaveBranch> parse_branch(std::string_view name) {
  for (const auto& b : kBranches) {
    if (b.name == name) return b.branch;
  }
  return std::nullopt;
}

bool is_constant(WaveBranch branch) {
  return branch == WaveBranch::ConstantS || branch == WaveBranch::ConstantU;
}

bool branch_compatible(WaveBranch branch, const ModelParams& params) {
  const double g = params.gamma();
  switch (branch) {
    case WaveBranch::ConstantS:
    case WaveBranch::ConstantU: return g <= 1.0;
    case WaveBranch::Decreasing1:
    case WaveBranch::Increasing2: return g > 0.0 && g < 1.0;
    case WaveBranch::CriticalKink: return g == 1.0;
    case WaveBranch::KinkArray: return g > 1.0;
    case WaveBranch::PureSGDecreasing:
    case WaveBranch::PureSGIncreasing: return g == 0.0;
  }
  return false;
}

TravellingWave::TravellingWave(ModelParams params, WaveBranch branch, double xi0,
                               Chirality chirality)
    : params_(params), branch_(branch), xi0_(xi0), chirality_(chirality) {
  if (!branch_compatible(branch, params)) {
    throw DomainError("branch " + std::string(branch_name(branch)) +
                      " does not exist for gamma = " + std::to_string(params.gamma()));
  }
  if (!std::isfinite(xi0)) throw DomainError("xi0 must be finite");
}

FixedPoints y_fixed_points(const ModelParams& params) {
  const double g = params.gamma();
  if (g == 0.0) throw DomainError("y_fixed_points: quadratic degenerates at gamma = 0");
  if (g > 1.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, false};
  }
  // Rationalised roots; their product is 1.
  const double c = std::sqrt((1.0 - g) * (1.0 + g));
  return {-g / (1.0 + c), -(1.0 + c) / g, true};
}

double y_eval(const TravellingWave& wave, double xi) {
  const double s = xi - wave.xi0();
  const ModelParams& p = wave.params();
  switch (wave.branch()) {
    case WaveBranch::Decreasing1:
    case WaveBranch::Increasing2: return y_subcritical(wave, s);
    case WaveBranch::CriticalKink:
      if (s == 0.0) return -kInf;
      return -(1.0 + 2.0 * p.alpha() / s);
    case WaveBranch::KinkArray: return y_kink_array(wave, kink_phase(wave, xi).r);
    // For gamma = 0 the Riccati equation is linear: y = -+exp((xi - xi0)/alpha).
    case WaveBranch::PureSGDecreasing: return -std::exp(s / p.alpha());
    case WaveBranch::PureSGIncreasing: return std::exp(s / p.alpha());
    case WaveBranch::ConstantS:
    case WaveBranch::ConstantU: break;
  }
  require_branch(wave, false, "y_eval");
  return 0.0;
}

double f_map(double y) {
  if (std::isnan(y)) return y;
  if (y < 0.0) return 1.0 / (std::hypot(1.0, y) - y);
  return y + std::hypot(1.0, y);
}

double g_eval(const TravellingWave& wave, double xi) {
  const ModelParams& p = wave.params();
  const double s = xi - wave.xi0();
  const double slope_at_pole = p.gamma() / p.alpha();
  switch (wave.branch()) {
    case WaveBranch::Decreasing1: return g_base(y_subcritical(wave, s));
    case WaveBranch::Increasing2:
    case WaveBranch::CriticalKink: {
      if (std::abs(s) < pole_window(wave)) return kTwoPi + slope_at_pole * s;
      const double base = g_base(y_eval(wave, xi));
      return s > 0.0 ? base + kTwoPi : base;
    }
    case WaveBranch::KinkArray: {
      const KinkPhase ph = kink_phase(wave, xi);
      const double Xi = xi_period(p);
      const double window = pole_window(wave);
      if ((0.5 + ph.r) * Xi < window) {
        return kTwoPi * ph.n + slope_at_pole * (0.5 + ph.r) * Xi;
      }
      if ((0.5 - ph.r) * Xi < window) {
        return kTwoPi * (ph.n + 1.0) - slope_at_pole * (0.5 - ph.r) * Xi;
      }
      return g_base(y_kink_array(wave, ph.r)) + kTwoPi * ph.n;
    }
    case WaveBranch::PureSGDecreasing:
      return 2.0 * std::atan(std::exp(-s / p.alpha()));
    case WaveBranch::PureSGIncreasing:
      return kTwoPi - 2.0 * std::atan(std::exp(-s / p.alpha()));
    case WaveBranch::ConstantS:
    case WaveBranch::ConstantU: break;
  }
  require_branch(wave, false, "g_eval");
  return 0.0;
}

double g_prime(const TravellingWave& wave, double xi) {
  const ModelParams& p = wave.params();
  switch (wave.branch()) {
    case WaveBranch::PureSGDecreasing:
    case WaveBranch::PureSGIncreasing: {
      const double sech = 1.0 / std::cosh((xi - wave.xi0()) / p.alpha());
      const double sign = wave.branch() == WaveBranch::PureSGDecreasing ? -1.0 : 1.0;
      return sign * sech / p.alpha();
    }
    case WaveBranch::ConstantS:
    case WaveBranch::ConstantU: require_branch(wave, false, "g_prime"); break;
    default: break;
  }
  // dg/dy * y' = 2/(1+y^2) * (2y + gamma(1+y^2)) / (2 alpha)
  return (p.gamma() + two_y_over_one_plus_y2(y_eval(wave, xi))) / p.alpha();
}

double phi_eval(const TravellingWave& wave, double x, double t) {
  if (is_constant(wave.branch())) {
    const ConstantSolutions cs = constant_solutions(wave.params());
    return wave.branch() == WaveBranch::ConstantS ? cs.phi_s : cs.phi_u;
  }
  return g_eval(wave, sign_of(wave.chirality()) * x - t) - kPi;
}

double xi_period(const ModelParams& params) {
  const double g = params.gamma();
  if (!(g > 1.0)) throw DomainError("xi_period: requires gamma > 1");
  return kTwoPi * params.alpha() / std::sqrt((g - 1.0) * (g + 1.0));
}

Limits g_limits(const TravellingWave& wave) {
  const double g = wave.params().gamma();
  if (g > 1.0) throw DomainError("g_limits: g is unbounded for gamma > 1");
  const double s = std::asin(g);
  switch (wave.branch()) {
    case WaveBranch::Decreasing1: return {kPi - s, s};
    case WaveBranch::Increasing2: return {kPi - s, kTwoPi + s};
    case WaveBranch::CriticalKink: return {kPi / 2.0, 2.5 * kPi};
    case WaveBranch::PureSGDecreasing: return {kPi, 0.0};
    case WaveBranch::PureSGIncreasing: return {kPi, kTwoPi};
    default: break;
  }
  require_branch(wave, false, "g_limits");
  return {};
}

double theta(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("theta: gamma outside [0, 1]");
  return 0.25 * std::asin(gamma);
}

std::vector<double> poles_in(const TravellingWave& wave, double lo, double hi) {
  std::vector<double> out;
  switch (wave.branch()) {
    case WaveBranch::Increasing2:
    case WaveBranch::CriticalKink:
      if (wave.xi0() >= lo && wave.xi0() <= hi) out.push_back(wave.xi0());
      break;
    case WaveBranch::KinkArray: {
      const double Xi = xi_period(wave.params());
      const double k0 = std::ceil((lo - wave.xi0()) / Xi - 0.5);
      for (double k = k0;; k += 1.0) {
        const double p = wave.xi0() + Xi * (k + 0.5);
        if (p > hi) break;
        if (p >= lo) out.push_back(p);
      }
      break;
    }
    default: break;
  }
  return out;
}

double distance_to_pole(const TravellingWave& wave, double xi) {
  switch (wave.branch()) {
    case WaveBranch::Increasing2:
    case WaveBranch::CriticalKink: return std::abs(xi - wave.xi0());
    case WaveBranch::KinkArray: {
      const KinkPhase ph = kink_phase(wave, xi);
      return (0.5 - std::abs(ph.r)) * xi_period(wave.params());
    }
    default: return kInf;
  }
}

}  // namespace sgw
