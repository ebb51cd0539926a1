#pragma once

// Finite-difference evolution of the damped, driven sine-Gordon equation on a
// twisted circle or on a segment pinned to a reference wave.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sgw/closed_form.hpp"
#include "sgw/model.hpp"

namespace sgw {

inline constexpr double kBlowUpThreshold = 1e6;

enum class Boundary { TwistedPeriodic, DirichletFromWave };

// Circle of length m * Xi.
struct CircleDomain {
  int m = 1;
};

// [x_lo, x_hi] with both end points on the grid.
struct SegmentDomain {
  double x_lo;
  double x_hi;
};

using Domain = std::variant<CircleDomain, SegmentDomain>;

struct FieldState {
  std::size_t n = 0;
  double dx = 0.0;
  double x_origin = 0.0;  // x of sample 0
  std::vector<double> phi;
  std::vector<double> phi_prev;  // time level t - dt
  double t = 0.0;
  double dt = 0.0;
  int winding = 0;     // m >= 0
  int twist_sign = 1;  // chirality of the twist
  Boundary boundary = Boundary::TwistedPeriodic;
  std::optional<TravellingWave> pinned;  // boundary source for DirichletFromWave

  double x(std::size_t i) const { return x_origin + static_cast<double>(i) * dx; }
  // Circle circumference or segment width.
  double length() const;
  // phi(x + L) - phi(x) imposed by the twisted periodic condition.
  double twist() const { return twist_sign * kTwoPi * winding; }
};

struct Perturbation {
  double amplitude = 0.0;  // epsilon >= 0
  int mode = 1;            // k
};

struct SimConfig {
  double dt = 0.0;
  double t_end = 0.0;
  double cfl_guard = 0.9;
  int record_every = 1;
  std::optional<Perturbation> perturbation;
  // Record divergence instead of throwing BlowUp.
  bool probe = false;
  // Use the OpenMP kernels; false selects the serial reference.
  bool parallel = true;
};

struct DeviationReport {
  std::vector<double> times;
  std::vector<double> deviation;   // RMS radians, best translate
  std::vector<double> best_shift;  // fitted spatial shift
  std::vector<double> winding;     // degree of phi mod 2 pi (circle only, else NaN)
  std::optional<double> diverged_at;
};

/// Samples a travelling wave at t = 0 and t = -dt.
///
/// A circle domain requires gamma > 1 and has length m * Xi with n cells; a
/// segment has n points including both ends and Dirichlet data from `wave`.
FieldState init_from_wave(const TravellingWave& wave, std::size_t n, const Domain& domain,
                          double dt);

/// Spatially uniform field phi = value, phi_t = rate on an untwisted circle of
/// the given length.
FieldState uniform_field(double value, double rate, std::size_t n, double length, double dt);

/// Advances one leapfrog step. `dt` must equal `state.dt` and not exceed dx.
/// Throws BlowUp if any |phi| exceeds 1e6.
void step(FieldState& state, const ModelParams& params, double dt, bool parallel = true);

/// Runs to config.t_end, recording the co-moving deviation from `reference`
/// every `record_every` steps (and at the start). A perturbation is injected
/// once at t = 0 as a pure displacement of both stored time levels.
DeviationReport evolve(FieldState& state, const ModelParams& params, const SimConfig& config,
                       const std::optional<TravellingWave>& reference);

/// Adds eps * sin(2 pi k x / L) on a circle, or the same sinusoid under a
/// sin^2 window vanishing at both ends of a segment, to phi and phi_prev.
void apply_perturbation(FieldState& state, const Perturbation& p);

struct ComovingFit {
  double deviation;
  double shift;
};

/// min over s of RMS(phi_i - phi_ref(x_i - s, t)): n-candidate scan with
/// spacing dx over [-L/2, L/2) followed by a three-point parabolic refinement.
ComovingFit comoving_deviation(const FieldState& state, const TravellingWave& reference,
                               bool parallel = true);

/// Trapezoidal integral of the energy density with phi_t = (phi - phi_prev)/dt
/// and a centred phi_x.
double total_energy(const FieldState& state, const ModelParams& params);

/// Degree of x -> phi mod 2 pi around the circle (sum of wrapped increments / 2 pi).
double winding_number(const FieldState& state);

}  // namespace sgw
