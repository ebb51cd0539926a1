#include "sgw/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sgw/errors.hpp"

namespace sgw {

ModelParams::ModelParams(double alpha, double gamma) : alpha_(alpha), gamma_(gamma) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw DomainError("alpha must be finite and > 0, got " + std::to_string(alpha));
  }
  if (!std::isfinite(gamma)) {
    throw DomainError("gamma must be finite");
  }
  if (gamma < 0.0) {
    gamma_ = -gamma;
    flipped_ = true;
  }
}

Regime classify(const ModelParams& params) {
  const double g = params.gamma();
  Regime r{RegimeKind::Subcritical, std::nullopt};
  if (g > 0.0) r.discriminant = 4.0 / (g * g) - 4.0;
  if (g == 1.0) {
    r.kind = RegimeKind::Critical;
  } else if (g > 1.0) {
    r.kind = RegimeKind::Supercritical;
  }
  return r;
}

const char* regime_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Subcritical: return "subcritical";
    case RegimeKind::Critical: return "critical";
    case RegimeKind::Supercritical: return "supercritical";
  }
  return "?";
}

ConstantSolutions constant_solutions(const ModelParams& params) {
  const double g = params.gamma();
  if (g > 1.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, false};
  }
  const double s = std::asin(g);
  return {-s, s + kPi, true};
}

double energy_density(double phi, double phi_t, double phi_x, double gamma) {
  return 0.5 * phi_t * phi_t + 0.5 * phi_x * phi_x + gamma * phi - std::cos(phi);
}

double wrap_to(double phi, double center) {
  double r = std::fmod(phi - center + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return center - kPi + r;
}

}  // namespace sgw
