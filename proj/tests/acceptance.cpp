// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sgw/cli.hpp"
#include "sgw/closed_form.hpp"
#include "sgw/errors.hpp"
#include "sgw/oracles.hpp"
#include "sgw/pde_sim.hpp"

using namespace sgw;

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

double ode_residual(const TravellingWave& w, double xi) {
  const double h = 1e-4;
  const double d = (-g_eval(w, xi + 2 * h) + 8.0 * g_eval(w, xi + h) - 8.0 * g_eval(w, xi - h) +
                    g_eval(w, xi - 2 * h)) /
                   (12.0 * h);
  const ModelParams& p = w.params();
  return std::abs(p.alpha() * d - p.gamma() + std::sin(g_eval(w, xi)));
}

std::vector<TravellingWave> branch_representatives() {
  return {
      TravellingWave(ModelParams(0.5, 0.5), WaveBranch::Decreasing1, 0.3),
      TravellingWave(ModelParams(0.5, 0.5), WaveBranch::Increasing2, -0.4),
      TravellingWave(ModelParams(1.0, 1.0), WaveBranch::CriticalKink, 0.2),
      TravellingWave(ModelParams(1.0, 1.5), WaveBranch::KinkArray, 0.1),
      TravellingWave(ModelParams(0.5, 0.0), WaveBranch::PureSGDecreasing),
      TravellingWave(ModelParams(0.5, 0.0), WaveBranch::PureSGIncreasing),
  };
}

// 1. Closed-form period against quadrature.
Outcome period_agreement() {
  double worst = 0.0;
  for (double g : {1.01, 1.25, kSqrt2, 2.0, 5.0, 50.0}) {
    for (double a : {0.3, 1.0, 2.0}) {
      const ModelParams p(a, g);
      worst = std::max(worst, std::abs(quad_period(p) - kTwoPi * a / std::sqrt(g * g - 1.0)));
    }
  }
  return {worst < 1e-9, "max |quad - closed| = " + fmt(worst) + " (< 1e-9)"};
}

// 2. alpha g' - gamma + sin g on 1000 points per branch.
Outcome ode_residuals() {
  double worst = 0.0;
  for (const TravellingWave& w : branch_representatives()) {
    for (int k = 0; k < 1000; ++k) {
      const double xi = w.xi0() - 20.0 + 40.0 * (k + 0.5) / 1000.0;
      if (distance_to_pole(w, xi) < 1e-2) continue;
      worst = std::max(worst, ode_residual(w, xi));
    }
  }
  return {worst < 1e-8, "max residual = " + fmt(worst) + " (< 1e-8)"};
}

// 3. PDE residual at 50 random points per branch.
Outcome pde_residuals() {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0.0;
  for (const TravellingWave& w : branch_representatives()) {
    int done = 0;
    while (done < 50) {
      const double x = u(rng);
      const double t = u(rng);
      if (distance_to_pole(w, x - t) <= 1e-2) continue;
      worst = std::max(worst, std::abs(pde_residual(w, x, t, 1e-3)));
      ++done;
    }
  }
  return {worst < 1e-6, "max residual = " + fmt(worst) + " (< 1e-6)"};
}

// 4. RK4 oracle against the closed form.
Outcome oracle_equivalence() {
  const TravellingWave waves[] = {
      TravellingWave(ModelParams(0.5, 0.5), WaveBranch::Decreasing1),
      TravellingWave(ModelParams(0.5, 0.5), WaveBranch::Increasing2),
      TravellingWave(ModelParams(1.0, 1.0), WaveBranch::CriticalKink),
      TravellingWave(ModelParams(1.0, 1.5), WaveBranch::KinkArray),
  };
  double worst = 0.0;
  for (const TravellingWave& w : waves) {
    const Interval span{w.xi0() + 0.1, w.xi0() + 10.0};
    const OdeSolution sol = ode_solve_g(w.params(), g_eval(w, span.lo), span);
    for (std::size_t k = 0; k < sol.xs.size(); ++k) {
      worst = std::max(worst, std::abs(sol.ys[k] - g_eval(w, sol.xs[k])));
    }
  }
  return {worst < 1e-8, "sup |ode - closed| = " + fmt(worst) + " (< 1e-8)"};
}

// 5. Asymptotic limits, attained and equal to the reference displays mod 2 pi.
Outcome limits() {
  double sub_worst = 0.0;
  double display_worst = 0.0;
  const auto mod_dist = [](double a, double b) {
    const double d = std::remainder(a - b, kTwoPi);
    return std::abs(d);
  };
  for (double g : {0.0, 0.3, 0.5, 0.9}) {
    for (double a : {0.5, 1.0}) {
      const ModelParams p(a, g);
      const double reach = 40.0 * a / std::sqrt(1.0 - g * g);
      const double s = std::asin(g);
      const WaveBranch dec = g == 0.0 ? WaveBranch::PureSGDecreasing : WaveBranch::Decreasing1;
      const WaveBranch inc = g == 0.0 ? WaveBranch::PureSGIncreasing : WaveBranch::Increasing2;
      for (WaveBranch b : {dec, inc}) {
        const TravellingWave w(p, b, 0.7);
        const Limits lim = g_limits(w);
        sub_worst = std::max(sub_worst, std::abs(g_eval(w, w.xi0() - reach) - lim.minus_infinity));
        sub_worst = std::max(sub_worst, std::abs(g_eval(w, w.xi0() + reach) - lim.plus_infinity));
        // g1: pi - asin, asin; g2: pi - asin, 2 pi + asin.
        const double plus = b == dec ? s : kTwoPi + s;
        display_worst = std::max(display_worst, mod_dist(lim.minus_infinity, kPi - s));
        display_worst = std::max(display_worst, mod_dist(lim.plus_infinity, plus));
      }
    }
  }
  double left = 0.0;
  double right = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    const TravellingWave w(ModelParams(a, 1.0), WaveBranch::CriticalKink, 0.7);
    const Limits lim = g_limits(w);
    left = std::max(left, std::abs(g_eval(w, w.xi0() - 2000.0 * a) - lim.minus_infinity));
    right = std::max(right, std::abs(g_eval(w, w.xi0() + 2000.0 * a) - lim.plus_infinity));
    display_worst = std::max(display_worst, mod_dist(lim.minus_infinity, kPi / 2));
    display_worst = std::max(display_worst, mod_dist(lim.plus_infinity, 5.0 * kPi / 2));
  }
  const bool pass = sub_worst < 1e-6 && left < 1e-3 && right < 1e-3 && display_worst < 1e-12;
  return {pass, "subcritical " + fmt(sub_worst) + " (< 1e-6), critical left " + fmt(left) +
                    " right " + fmt(right) + " (< 1e-3), display mismatch " +
                    fmt(display_worst)};
}

// 6. Identity residuals on the 101-point grid.
Outcome identities() {
  double worst = 0.0;
  for (int k = 0; k <= 100; ++k) worst = std::max(worst, identities_check(k / 100.0).max_residual());
  return {worst < 1e-12, "max residual = " + fmt(worst) + " (< 1e-12)"};
}

// 7. Linear periodicity of g and winding conservation on twisted circles.
Outcome periodicity_and_twist() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  double worst = 0.0;
  for (double g : {1.01, 1.5, 2.0, 10.0}) {
    const TravellingWave w(ModelParams(0.8, g), WaveBranch::KinkArray, 0.3);
    const double period = xi_period(w.params());
    for (int k = 0; k < 100; ++k) {
      const double xi = u(rng);
      worst = std::max(worst, std::abs(g_eval(w, xi + period) - g_eval(w, xi) - kTwoPi));
    }
  }
  double winding = 0.0;
  for (int m : {1, 2}) {
    for (Chirality c : {Chirality::Right, Chirality::Left}) {
      const ModelParams p(0.5, 1.5);
      const TravellingWave w(p, WaveBranch::KinkArray, 0.0, c);
      const std::size_t n = 256 * static_cast<std::size_t>(m);
      const double dx = m * xi_period(p) / static_cast<double>(n);
      FieldState s = init_from_wave(w, n, CircleDomain{m}, 0.9 * dx);
      SimConfig cfg{.dt = 0.9 * dx, .t_end = 50.0 * xi_period(p)};
      cfg.record_every = 10;
      cfg.perturbation = Perturbation{1e-3, 1};
      const DeviationReport r = evolve(s, p, cfg, std::nullopt);
      for (double wn : r.winding) winding = std::max(winding, std::abs(wn - sign_of(c) * m));
    }
  }
  return {worst < 1e-9 && winding < 1e-6,
          "max |g(xi+Xi)-g(xi)-2pi| = " + fmt(worst) + " (< 1e-9), max winding error " +
              fmt(winding) + " (< 1e-6)"};
}

double peak(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// 8. Kink arrays stay close, Increasing2 departs.
Outcome stability_dichotomy() {
  const double eps = 1e-3;
  const ModelParams kp(0.5, 1.5);
  const TravellingWave kinks(kp, WaveBranch::KinkArray);
  const double dx = xi_period(kp) / 256.0;
  FieldState circle = init_from_wave(kinks, 256, CircleDomain{1}, 0.9 * dx);
  SimConfig cc{.dt = 0.9 * dx, .t_end = 50.0 * xi_period(kp)};
  cc.record_every = 4;
  cc.perturbation = Perturbation{eps, 1};
  const double stable = peak(evolve(circle, kp, cc, kinks).deviation);

  // Same spacing on the segment; Xi is undefined below gamma = 1.
  const ModelParams sp(0.5, 0.5);
  const TravellingWave front(sp, WaveBranch::Increasing2);
  const double half = 40.0 * sp.alpha() / std::sqrt(1.0 - 0.25);
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * half / dx)) + 1;
  const double sdx = 2.0 * half / static_cast<double>(n - 1);
  FieldState seg = init_from_wave(front, n, SegmentDomain{-half, half}, 0.9 * sdx);
  SimConfig sc{.dt = 0.9 * sdx, .t_end = 100.0};
  sc.record_every = 10;
  sc.perturbation = Perturbation{eps, 1};
  sc.probe = true;
  const DeviationReport r = evolve(seg, sp, sc, front);
  double first = -1.0;
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    if (r.deviation[k] > 0.1) {
      first = r.times[k];
      break;
    }
  }
  const bool pass = stable < 1e-2 && first >= 0.0 && first < 100.0;
  return {pass, "kink array max " + fmt(stable) + " (< 1e-2); increasing2 peak " +
                    fmt(peak(r.deviation)) + ", first > 0.1 at t = " + fmt(first) + " (n = " +
                    std::to_string(n) + ")"};
}

// 9. Second-order convergence over three refinements.
Outcome convergence() {
  const ModelParams p(0.5, 1.5);
  const TravellingWave w(p, WaveBranch::KinkArray);
  std::vector<double> dev;
  for (std::size_t n : {256u, 512u, 1024u}) {
    const double dx = xi_period(p) / static_cast<double>(n);
    FieldState s = init_from_wave(w, n, CircleDomain{1}, 0.9 * dx);
    SimConfig c{.dt = 0.9 * dx, .t_end = xi_period(p)};
    c.record_every = 1 << 30;
    dev.push_back(evolve(s, p, c, w).deviation.back());
  }
  const double r1 = dev[0] / dev[1];
  const double r2 = dev[1] / dev[2];
  return {r1 >= 3.5 && r2 >= 3.5,
          "deviations " + fmt(dev[0]) + ", " + fmt(dev[1]) + ", " + fmt(dev[2]) + "; ratios " +
              fmt(r1) + ", " + fmt(r2) + " (>= 3.5)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 10. Two identical simulate runs give identical bytes.
Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sgw_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << "branch = kink_array\nalpha = 0.5\ngamma = 1.5\nepsilon = 1e-3\n"
                        "t_end_periods = 5\nrecord_every = 8\n";
  std::string csv[2];
  std::string snap[2];
  for (int k = 0; k < 2; ++k) {
    const std::string out = (dir / ("run" + std::to_string(k) + ".csv")).string();
    const char* argv[] = {"sgw", "simulate", "--config", cfg.c_str(), "--out", out.c_str()};
    std::ostringstream o, e;
    if (cli::run(6, argv, o, e) != cli::kSuccess) return {false, "simulate failed: " + e.str()};
    csv[k] = slurp(out);
    snap[k] = slurp(dir / ("run" + std::to_string(k) + "_snapshot.csv"));
  }
  const bool same = !csv[0].empty() && csv[0] == csv[1] && snap[0] == snap[1];
  return {same, "report " + std::to_string(csv[0].size()) + " bytes, snapshot " +
                    std::to_string(snap[0].size()) + " bytes, identical = " +
                    (same ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"period agreement", period_agreement},
      {"ODE residual", ode_residuals},
      {"PDE residual", pde_residuals},
      {"oracle equivalence", oracle_equivalence},
      {"limits", limits},
      {"identities", identities},
      {"periodicity and twist", periodicity_and_twist},
      {"stability dichotomy", stability_dichotomy},
      {"scheme convergence", convergence},
      {"determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("%s %2d %-22s %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
