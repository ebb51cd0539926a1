#pragma once

// Closed-form unit-velocity travelling waves phi(x, t) = g(xi) - pi with
// xi = +-x - t.  The reduced profile obeys
//
//     alpha * g' = gamma - sin(g),
//
// and is built through g = 4 atan(F), F = y + sqrt(1 + y^2), where y solves the
// Riccati equation 2 alpha y' = 2y + gamma (1 + y^2).

#include <optional>
#include <string_view>
#include <vector>

#include "sgw/model.hpp"

namespace sgw {

enum class WaveBranch {
  ConstantS,         // phi = phi_s, gamma <= 1
  ConstantU,         // phi = phi_u, gamma <= 1
  Decreasing1,       // 0 < gamma < 1, g between the two fixed points
  Increasing2,       // 0 < gamma < 1, one pole of y at xi0
  CriticalKink,      // gamma == 1, one pole of y at xi0
  KinkArray,         // gamma > 1, poles at xi0 + Xi (k + 1/2)
  PureSGDecreasing,  // gamma == 0
  PureSGIncreasing,  // gamma == 0
};

// Names used on the command line and in config files.
std::string_view branch_name(WaveBranch branch);
std::optional<WaveBranch> parse_branch(std::string_view name);

bool branch_compatible(WaveBranch branch, const ModelParams& params);
bool is_constant(WaveBranch branch);

// Sign in xi = chirality * x - t.
enum class Chirality : int { Right = 1, Left = -1 };

inline int sign_of(Chirality c) noexcept { return static_cast<int>(c); }

/// One travelling-wave solution. Immutable; construction checks that the
/// branch exists for the given forcing.
class TravellingWave {
 public:
  TravellingWave(ModelParams params, WaveBranch branch, double xi0 = 0.0,
                 Chirality chirality = Chirality::Right);

  const ModelParams& params() const noexcept { return params_; }
  WaveBranch branch() const noexcept { return branch_; }
  double xi0() const noexcept { return xi0_; }
  Chirality chirality() const noexcept { return chirality_; }

  TravellingWave with_xi0(double xi0) const { return {params_, branch_, xi0, chirality_}; }

 private:
  ModelParams params_;
  WaveBranch branch_;
  double xi0_;
  Chirality chirality_;
};

struct FixedPoints {
  double y_plus;
  double y_minus;
  bool real_valued;
};

// Roots of gamma (1 + y^2) + 2y = 0. Throws DomainError for gamma == 0.
FixedPoints y_fixed_points(const ModelParams& params);

/// Riccati variable y(xi). For the kink array,
///   y = -1/gamma + sqrt(1 - gamma^-2) tan(sqrt(gamma^2 - 1) (xi - xi0) / (2 alpha)).
/// Returns +-infinity at a pole; exactly at a pole the
/// right-hand limit (-infinity) is returned.
double y_eval(const TravellingWave& wave, double xi);

/// F = y + sqrt(1 + y^2) without cancellation; F(-inf) = 0, F(+inf) = inf.
double f_map(double y);

/// Continuous (unwrapped) profile g(xi).
double g_eval(const TravellingWave& wave, double xi);

/// Analytic g'(xi).
double g_prime(const TravellingWave& wave, double xi);

/// phi(x, t) = g(chirality * x - t) - pi; constant branches return phi_s / phi_u.
double phi_eval(const TravellingWave& wave, double x, double t);

/// Xi = 2 pi alpha / sqrt(gamma^2 - 1); gamma > 1 only.
double xi_period(const ModelParams& params);

struct Limits {
  double minus_infinity;  // lim g as xi -> -inf
  double plus_infinity;   // lim g as xi -> +inf
};

/// Asymptotic values of g for gamma <= 1 branches. The convergence window
/// scales like 1/A = alpha / sqrt(1 - gamma^2), so it widens as gamma -> 1-.
Limits g_limits(const TravellingWave& wave);

/// theta = asin(gamma) / 4 in [0, pi/8].
double theta(double gamma);

/// Pole locations of y inside [lo, hi], in increasing order.
std::vector<double> poles_in(const TravellingWave& wave, double lo, double hi);

/// Distance from xi to the nearest pole of y, or +inf if the branch has none.
double distance_to_pole(const TravellingWave& wave, double xi);

}  // namespace sgw
