#pragma once

// Independent numerical cross-checks for the closed-form waves.

#include <map>
#include <string>
#include <vector>

#include "sgw/closed_form.hpp"
#include "sgw/model.hpp"

namespace sgw {

inline constexpr double kDefaultOdeTol = 1e-9;
inline constexpr double kDefaultQuadTol = 1e-10;

struct Interval {
  double lo;
  double hi;
};

struct OdeSolution {
  std::vector<double> xs;  // strictly increasing
  std::vector<double> ys;  // finite
  double step_used = 0.0;
  std::vector<double> pole_events;
};

/// Integrates alpha g' = gamma - sin g from g(span.lo) = g0 with classic RK4.
///
/// The step is halved until two successive refinements differ by less than
/// `tol` (sup norm over the output nodes). Output nodes are spaced at most 0.1
/// apart. Throws NoConvergence after 20 halvings.
OdeSolution ode_solve_g(const ModelParams& params, double g0, Interval span,
                        double tol = kDefaultOdeTol);

/// Integrates 2 alpha y' = 2y + gamma (1 + y^2) from y(span.lo) = y0.
///
/// Where |y| > 1 the solver continues in z = -1/y, which obeys
/// 2 alpha z' = -2z + gamma (1 + z^2) and crosses zero regularly where y has a
/// pole; each crossing is recorded in `pole_events`. Refinements are compared
/// through atan(y) mod pi so that samples near a pole stay bounded. Samples with
/// |y| > 1e12 are dropped from the output.
OdeSolution ode_solve_y(const ModelParams& params, double y0, Interval span,
                        double tol = kDefaultOdeTol);

/// Xi = alpha * int_0^{2 pi} ds / (gamma - sin s) by adaptive quadrature.
double quad_period(const ModelParams& params, double tol = kDefaultQuadTol);

/// xi(g_to) - xi(g_from) = alpha * int ds / (gamma - sin s). Throws DomainError
/// when gamma - sin s vanishes on the closed path.
double implicit_xi_of_g(const ModelParams& params, double g_from, double g_to,
                        double tol = kDefaultQuadTol);

struct IdentityReport {
  double gamma = 0.0;
  // Keys: zaza, zaza2, F_plus, F_minus, pi8, rationalize_sin4.
  std::map<std::string, double> residuals;

  double max_residual() const;
};

IdentityReport identities_check(double gamma);

/// phi_tt - phi_xx + sin phi + alpha phi_t + gamma by five-point central
/// differences of phi_eval at step h. Throws PoleProximity within 10h of a pole.
double pde_residual(const TravellingWave& wave, double x, double t, double h);

}  // namespace sgw
