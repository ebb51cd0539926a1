#pragma once

// Parameters, regime classification, constant solutions and energy density
// of the damped, driven sine-Gordon equation
//
//     phi_tt - phi_xx + sin(phi) + alpha * phi_t + gamma = 0.

#include <numbers>
#include <optional>

namespace sgw {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Damping alpha > 0 and forcing gamma >= 0.
///
/// A negative forcing is normalised to |gamma|; `flipped()` then reports that
/// every returned field must be read with phi -> -phi.
class ModelParams {
 public:
  ModelParams(double alpha, double gamma);

  double alpha() const noexcept { return alpha_; }
  double gamma() const noexcept { return gamma_; }
  bool flipped() const noexcept { return flipped_; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double alpha_;
  double gamma_;
  bool flipped_ = false;
};

enum class RegimeKind { Subcritical, Critical, Supercritical };

struct Regime {
  RegimeKind kind;
  // 4/gamma^2 - 4; empty for gamma == 0.
  std::optional<double> discriminant;
};

// gamma == 1 is detected by exact comparison.
Regime classify(const ModelParams& params);

const char* regime_name(RegimeKind kind);

struct ConstantSolutions {
  double phi_s;  // -asin(gamma), stable for gamma < 1
  double phi_u;  // asin(gamma) + pi, not reduced
  bool exists;   // gamma <= 1
};

ConstantSolutions constant_solutions(const ModelParams& params);

/// h = phi_t^2/2 + phi_x^2/2 + gamma*phi - cos(phi)
double energy_density(double phi, double phi_t, double phi_x, double gamma);

/// Representative of phi mod 2 pi in [center - pi, center + pi).
double wrap_to(double phi, double center);

}  // namespace sgw
