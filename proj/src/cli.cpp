#include "sgw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sgw/closed_form.hpp"
#include "sgw/csv.hpp"
#include "sgw/errors.hpp"
#include "sgw/model.hpp"
#include "sgw/oracles.hpp"
#include "sgw/pde_sim.hpp"

namespace sgw::cli {
namespace {

// Raised for anything that maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("SGW_LOG");
  if (env == nullptr) return LogLevel::Info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err), level_(log_level()) {}
  void info(const std::string& msg) const {
    if (level_ != LogLevel::Quiet) err_ << "[sgw] " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ == LogLevel::Debug) err_ << "[sgw:debug] " << msg << '\n';
  }

 private:
  std::ostream& err_;
  LogLevel level_;
};

const std::vector<std::string> kKnownKeys{
    "alpha",  "gamma",  "branch", "xi0",   "chirality",    "grid",    "out",
    "tol",    "probe",  "domain", "m",     "x_lo",         "x_hi",    "n",
    "cfl",    "t_end",  "t_end_periods",  "record_every", "epsilon", "mode",
    "snapshot", "gamma_grid", "serial"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Typed view over the merged settings.
class Config {
 public:
  explicit Config(Settings s) : s_(std::move(s)) {
    for (const auto& [key, value] : s_) {
      if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  }

  bool has(const std::string& key) const { return s_.count(key) != 0; }

  std::string str(const std::string& key) const {
    const auto it = s_.find(key);
    if (it == s_.end()) throw ConfigError("missing required setting '" + key + "'");
    return it->second;
  }

  std::string str(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
  }

  double num(const std::string& key) const { return parse_double(key, str(key)); }
  double num(const std::string& key, double fallback) const {
    return has(key) ? num(key) : fallback;
  }

  long long integer(const std::string& key, long long fallback) const {
    if (!has(key)) return fallback;
    const std::string v = str(key);
    try {
      std::size_t pos = 0;
      const long long r = std::stoll(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return r;
    } catch (const std::exception&) {
      throw ConfigError("setting '" + key + "' is not an integer: '" + v + "'");
    }
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const std::string v = str(key);
    if (v == "true" || v == "1" || v == "yes" || v.empty()) return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("setting '" + key + "' is not a boolean: '" + v + "'");
  }

  static double parse_double(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      const double r = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return r;
    } catch (const std::exception&) {
      throw ConfigError("setting '" + key + "' is not a number: '" + v + "'");
    }
  }

 private:
  Settings s_;
};

struct Grid {
  double lo;
  double hi;
  long long n;

  double at(long long k) const {
    if (n == 1) return lo;
    if (k == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
};

Grid parse_grid(const std::string& key, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3) throw ConfigError(key + " must be lo:hi:n, got '" + text + "'");
  Grid g{Config::parse_double(key, parts[0]), Config::parse_double(key, parts[1]), 0};
  try {
    g.n = std::stoll(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError(key + ": point count is not an integer");
  }
  if (g.n < 1 || !(g.hi >= g.lo)) throw ConfigError(key + " needs n >= 1 and lo <= hi");
  return g;
}

ModelParams params_from(const Config& c) {
  try {
    return ModelParams(c.num("alpha", 1.0), c.num("gamma"));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

Chirality chirality_from(const Config& c) {
  const std::string v = c.str("chirality", "+1");
  if (v == "+1" || v == "1" || v == "+" || v == "right") return Chirality::Right;
  if (v == "-1" || v == "-" || v == "left") return Chirality::Left;
  throw ConfigError("chirality must be +1 or -1, got '" + v + "'");
}

WaveBranch branch_from(const Config& c) {
  const std::string name = c.str("branch");
  const auto b = parse_branch(name);
  if (!b) throw ConfigError("unknown branch '" + name + "'");
  return *b;
}

// Branch/gamma mismatches become config errors naming the constraint.
TravellingWave wave_from(const Config& c) {
  const ModelParams p = params_from(c);
  const WaveBranch b = branch_from(c);
  try {
    return TravellingWave(p, b, c.num("xi0", 0.0), chirality_from(c));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

// Writes to the configured path, or to `fallback` when none is set.
class Sink {
 public:
  Sink(const Config& c, std::ostream& fallback) {
    if (c.has("out")) {
      file_.open(c.str("out"));
      if (!file_) throw ConfigError("cannot open output '" + c.str("out") + "'");
    }
    stream_ = file_.is_open() ? static_cast<std::ostream*>(&file_) : &fallback;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const Config& c, std::ostream& out, const Logger& log) {
  const TravellingWave wave = wave_from(c);
  const Grid grid = parse_grid("grid", c.str("grid", "-10:10:201"));
  Sink sink(c, out);
  std::ostream& os = sink.get();
  const ModelParams& p = wave.params();

  double const_y = 0.0;
  if (is_constant(wave.branch())) {
    // phi_s sits at the y_+ fixed point, phi_u at y_-.
    if (p.gamma() == 0.0) {
      const_y = wave.branch() == WaveBranch::ConstantS ? 0.0
                                                       : -std::numeric_limits<double>::infinity();
    } else {
      const FixedPoints fp = y_fixed_points(p);
      const_y = wave.branch() == WaveBranch::ConstantS ? fp.y_plus : fp.y_minus;
    }
  }

  os << "xi,y,F,g,phi\n";
  for (long long k = 0; k < grid.n; ++k) {
    const double xi = grid.at(k);
    double y, g;
    if (is_constant(wave.branch())) {
      y = const_y;
      g = phi_eval(wave, 0.0, 0.0) + kPi;
    } else {
      y = y_eval(wave, xi);
      g = g_eval(wave, xi);
    }
    os << format_number(xi) << ',' << format_number(y) << ',' << format_number(f_map(y)) << ','
       << format_number(g) << ',' << format_number(g - kPi) << '\n';
  }
  log.info("eval: wrote " + std::to_string(grid.n) + " rows for " +
           std::string(branch_name(wave.branch())));
  return kSuccess;
}

// ---------------------------------------------------------------------------
// period

int cmd_period(const Config& c, std::ostream& out, const Logger& log) {
  const ModelParams p = params_from(c);
  if (!(p.gamma() > 1.0)) {
    throw ConfigError("period requires gamma > 1 (got gamma = " + format_number(p.gamma()) + ")");
  }
  const double tol = c.num("tol", kDefaultQuadTol);
  const double closed = xi_period(p);
  const double quad = quad_period(p, tol);
  Sink sink(c, out);
  sink.get() << "closed_form = " << format_number(closed) << '\n'
             << "quadrature = " << format_number(quad) << '\n'
             << "difference = " << format_number(quad - closed) << '\n';
  log.info("period: |difference| = " + format_number(std::abs(quad - closed)));
  return kSuccess;
}

// ---------------------------------------------------------------------------
// limits

int cmd_limits(const Config& c, std::ostream& out, const Logger& log) {
  const ModelParams p = params_from(c);
  if (p.gamma() > 1.0) throw ConfigError("limits require gamma <= 1 (g is unbounded for gamma > 1)");
  Sink sink(c, out);
  std::ostream& os = sink.get();
  const ConstantSolutions cs = constant_solutions(p);
  os << "regime = " << regime_name(classify(p).kind) << '\n'
     << "phi_s = " << format_number(cs.phi_s) << '\n'
     << "phi_u = " << format_number(cs.phi_u) << '\n';
  if (c.has("branch")) {
    const TravellingWave wave = wave_from(c);
    if (is_constant(wave.branch())) throw ConfigError("limits need a non-constant branch");
    const Limits lim = g_limits(wave);
    // x -> -inf maps to xi -> -inf for chirality +1 and to xi -> +inf for -1.
    const bool right = wave.chirality() == Chirality::Right;
    const double phi_left = (right ? lim.minus_infinity : lim.plus_infinity) - kPi;
    const double phi_right = (right ? lim.plus_infinity : lim.minus_infinity) - kPi;
    os << "branch = " << branch_name(wave.branch()) << '\n'
       << "g_xi_minus_inf = " << format_number(lim.minus_infinity) << '\n'
       << "g_xi_plus_inf = " << format_number(lim.plus_infinity) << '\n'
       << "phi_x_minus_inf = " << format_number(phi_left) << '\n'
       << "phi_x_plus_inf = " << format_number(phi_right) << '\n';
  }
  log.info("limits: done");
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  double value;
  double tolerance;
};

double ode_residual_max(const TravellingWave& w, double gamma_used) {
  constexpr double kStep = 1e-4;
  double worst = 0.0;
  const double alpha = w.params().alpha();
  for (int k = 0; k < 1000; ++k) {
    const double xi = w.xi0() - 20.0 + 40.0 * (k + 0.5) / 1000.0;
    if (distance_to_pole(w, xi) < 1e-3 + 2.0 * kStep) continue;
    const double d = (-g_eval(w, xi + 2 * kStep) + 8.0 * g_eval(w, xi + kStep) -
                      8.0 * g_eval(w, xi - kStep) + g_eval(w, xi - 2 * kStep)) /
                     (12.0 * kStep);
    worst = std::max(worst, std::abs(alpha * d - gamma_used + std::sin(g_eval(w, xi))));
  }
  return worst;
}

std::vector<TravellingWave> verification_waves() {
  return {
      TravellingWave(ModelParams(0.5, 0.5), WaveBranch::Decreasing1),
      TravellingWave(ModelParams(0.5, 0.5), WaveBranch::Increasing2),
      TravellingWave(ModelParams(1.0, 1.0), WaveBranch::CriticalKink),
      TravellingWave(ModelParams(1.0, 1.5), WaveBranch::KinkArray),
      TravellingWave(ModelParams(0.5, 0.0), WaveBranch::PureSGDecreasing),
      TravellingWave(ModelParams(0.5, 0.0), WaveBranch::PureSGIncreasing),
  };
}

int cmd_verify(const Config& c, bool corrupt_gamma_sign, std::ostream& out, const Logger& log) {
  const Grid gamma_grid = parse_grid("gamma_grid", c.str("gamma_grid", "0:1:101"));
  if (gamma_grid.lo < 0.0 || gamma_grid.hi > 1.0) throw ConfigError("gamma_grid must lie in [0, 1]");
  const double ode_tol = c.num("tol", kDefaultOdeTol);
  Sink sink(c, out);
  std::ostream& os = sink.get();
  std::vector<CheckResult> checks;

  double identity_max = 0.0;
  for (long long k = 0; k < gamma_grid.n; ++k) {
    const IdentityReport rep = identities_check(gamma_grid.at(k));
    os << "identity gamma=" << format_number(rep.gamma);
    for (const auto& [name, r] : rep.residuals) os << ' ' << name << '=' << format_number(r);
    os << '\n';
    identity_max = std::max(identity_max, rep.max_residual());
  }
  os << "identities.count = " << gamma_grid.n << '\n';
  checks.push_back({"identities", identity_max, 1e-12});

  double ode_residual = 0.0;
  double equivalence = 0.0;
  double pde = 0.0;
  for (const TravellingWave& w : verification_waves()) {
    const double gamma_used = corrupt_gamma_sign ? -w.params().gamma() : w.params().gamma();
    ode_residual = std::max(ode_residual, ode_residual_max(w, gamma_used));

    const Interval span{w.xi0() + 0.1, w.xi0() + 10.0};
    const ModelParams oracle_params(w.params().alpha(), gamma_used);
    const OdeSolution sol = ode_solve_g(oracle_params, g_eval(w, span.lo), span, ode_tol);
    // A flipped oracle integrates phi -> -phi, i.e. g -> 2 pi - g.
    for (std::size_t k = 0; k < sol.xs.size(); ++k) {
      const double g_ode = oracle_params.flipped() ? kTwoPi - sol.ys[k] : sol.ys[k];
      equivalence = std::max(equivalence, std::abs(g_ode - g_eval(w, sol.xs[k])));
    }

    for (int k = 0; k < 50; ++k) {
      const double x = w.xi0() - 7.3 + 0.29 * k;
      const double t = 0.0;
      if (distance_to_pole(w, x) <= 1e-2) continue;
      const double r = pde_residual(w, x, t, 1e-3);
      pde = std::max(pde, std::abs(r + gamma_used - w.params().gamma()));
    }
    log.debug("verify: checked " + std::string(branch_name(w.branch())));
  }
  checks.push_back({"ode_residual", ode_residual, 1e-8});
  checks.push_back({"ode_equivalence", equivalence, 10.0 * ode_tol});
  checks.push_back({"pde_residual", pde, 1e-6});

  bool pass = true;
  const CheckResult* worst = &checks.front();
  double worst_ratio = -1.0;
  for (const CheckResult& r : checks) {
    os << r.name << ".max = " << format_number(r.value) << '\n'
       << r.name << ".tolerance = " << format_number(r.tolerance) << '\n';
    const double ratio = r.value / r.tolerance;
    if (!(r.value < r.tolerance)) pass = false;
    if (!(ratio <= worst_ratio)) {
      worst_ratio = ratio;
      worst = &r;
    }
  }
  os << "status = " << (pass ? "pass" : "fail") << '\n'
     << "worst = " << worst->name << '\n';
  log.info(std::string("verify: ") + (pass ? "pass" : "FAIL, worst offender " + worst->name));
  return pass ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// simulate

std::string snapshot_path_for(const std::string& report_path) {
  const auto dot = report_path.rfind('.');
  const auto slash = report_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return report_path + "_snapshot.csv";
  }
  return report_path.substr(0, dot) + "_snapshot" + report_path.substr(dot);
}

int cmd_simulate(const Config& c, std::ostream& out, const Logger& log) {
  if (!c.has("out")) throw ConfigError("simulate requires an output path (--out)");
  const TravellingWave wave = wave_from(c);
  const ModelParams& p = wave.params();
  const std::string domain_name = c.str("domain", p.gamma() > 1.0 ? "circle" : "segment");
  const long long n = c.integer("n", 256);
  if (n < 64) throw ConfigError("n must be >= 64");
  const double cfl = c.num("cfl", 0.9);
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");

  Domain domain;
  double dx;
  if (domain_name == "circle") {
    if (!(p.gamma() > 1.0)) throw ConfigError("circle domain requires gamma > 1");
    const long long m = c.integer("m", 1);
    if (m < 1) throw ConfigError("m must be >= 1");
    domain = CircleDomain{static_cast<int>(m)};
    dx = static_cast<double>(m) * xi_period(p) / static_cast<double>(n);
  } else if (domain_name == "segment") {
    double half;
    if (p.gamma() < 1.0) {
      half = 40.0 * p.alpha() / std::sqrt((1.0 - p.gamma()) * (1.0 + p.gamma()));
    } else if (!(c.has("x_lo") && c.has("x_hi"))) {
      throw ConfigError("segment for gamma >= 1 needs explicit x_lo and x_hi");
    } else {
      half = 0.0;
    }
    const SegmentDomain seg{c.num("x_lo", wave.xi0() - half), c.num("x_hi", wave.xi0() + half)};
    if (!(seg.x_hi > seg.x_lo)) throw ConfigError("x_lo must be < x_hi");
    domain = seg;
    dx = (seg.x_hi - seg.x_lo) / static_cast<double>(n - 1);
  } else {
    throw ConfigError("domain must be circle or segment, got '" + domain_name + "'");
  }

  SimConfig sim;
  sim.cfl_guard = cfl;
  sim.dt = cfl * dx;
  if (c.has("t_end")) {
    sim.t_end = c.num("t_end");
  } else if (c.has("t_end_periods") && p.gamma() > 1.0) {
    sim.t_end = c.num("t_end_periods") * xi_period(p);
  } else {
    throw ConfigError("simulate requires t_end (or t_end_periods when gamma > 1)");
  }
  if (!(sim.t_end > 0.0)) throw ConfigError("t_end must be > 0");
  sim.record_every = static_cast<int>(c.integer("record_every", 16));
  if (sim.record_every < 1) throw ConfigError("record_every must be >= 1");
  const double eps = c.num("epsilon", 0.0);
  if (!(eps >= 0.0)) throw ConfigError("epsilon must be >= 0");
  if (eps > 0.0) sim.perturbation = Perturbation{eps, static_cast<int>(c.integer("mode", 1))};
  sim.probe = c.flag("probe");
  sim.parallel = !c.flag("serial");

  const std::string report_path = c.str("out");
  const std::string snapshot_path = c.str("snapshot", snapshot_path_for(report_path));
  std::ofstream report_file(report_path);
  if (!report_file) throw ConfigError("cannot open output '" + report_path + "'");
  std::ofstream snapshot_file(snapshot_path);
  if (!snapshot_file) throw ConfigError("cannot open snapshot '" + snapshot_path + "'");

  FieldState state = init_from_wave(wave, static_cast<std::size_t>(n), domain, sim.dt);
  log.info("simulate: " + std::string(branch_name(wave.branch())) + " on " + domain_name +
           ", n = " + std::to_string(n) + ", dt = " + format_number(sim.dt) +
           ", t_end = " + format_number(sim.t_end));

  DeviationReport report;
  try {
    report = evolve(state, p, sim, wave);
  } catch (const BlowUp& e) {
    out << "diverged_at = " << format_number(e.time()) << '\n';
    log.info(std::string("simulate: ") + e.what());
    return kDiverged;
  }

  write_deviation_csv(report_file, report);
  write_snapshot_csv(snapshot_file, state);

  const double max_dev =
      report.deviation.empty() ? 0.0
                               : *std::max_element(report.deviation.begin(), report.deviation.end());
  out << "steps_recorded = " << report.times.size() << '\n'
      << "t_final = " << format_number(state.t) << '\n'
      << "final_deviation = " << format_number(report.deviation.back()) << '\n'
      << "max_deviation = " << format_number(max_dev) << '\n'
      << "final_winding = " << format_number(report.winding.back()) << '\n'
      << "diverged_at = "
      << (report.diverged_at ? format_number(*report.diverged_at) : std::string("none")) << '\n'
      << "report = " << report_path << '\n'
      << "snapshot = " << snapshot_path << '\n';
  return kSuccess;
}

}  // namespace

Settings parse_config(std::istream& in) {
  Settings s;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
    }
    s[key] = trim(line.substr(eq + 1));
  }
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form travelling waves of the damped, driven sine-Gordon equation", "sgw"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::map<std::string, std::string> flags;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  const auto add = [&](const std::string& name, const std::string& key, const std::string& help) {
    options.emplace_back(key, app.add_option(name, flags[key], help));
  };
  add("--alpha", "alpha", "damping alpha > 0");
  add("--gamma", "gamma", "forcing gamma");
  add("--branch", "branch", "wave branch, e.g. kink_array");
  add("--xi0", "xi0", "phase offset xi0");
  add("--chirality", "chirality", "+1 (xi = x - t) or -1 (xi = -x - t)");
  add("--grid", "grid", "xi grid lo:hi:n");
  add("--out", "out", "output path");
  add("--tol", "tol", "oracle tolerance");
  add("--gamma-grid", "gamma_grid", "verify: gamma grid lo:hi:n");
  add("--domain", "domain", "simulate: circle or segment");
  add("--m", "m", "simulate: winding number on the circle");
  add("--x-lo", "x_lo", "simulate: segment left end");
  add("--x-hi", "x_hi", "simulate: segment right end");
  add("--n", "n", "simulate: grid points");
  add("--cfl", "cfl", "simulate: dt / dx");
  add("--t-end", "t_end", "simulate: final time");
  add("--t-end-periods", "t_end_periods", "simulate: final time in units of Xi");
  add("--record-every", "record_every", "simulate: steps between records");
  add("--epsilon", "epsilon", "simulate: perturbation amplitude");
  add("--mode", "mode", "simulate: perturbation mode number");
  add("--snapshot", "snapshot", "simulate: snapshot CSV path");
  app.add_option("--config", config_path, "key = value config file");
  bool probe = false;
  bool serial = false;
  bool corrupt = false;
  app.add_flag("--probe", probe, "simulate: record divergence instead of failing");
  app.add_flag("--serial", serial, "simulate: use the serial reference kernels");
  app.add_flag("--corrupt-gamma-sign", corrupt, "verify: test hook that flips gamma in the checks");

  CLI::App* eval = app.add_subcommand("eval", "tabulate y, F, g, phi over a xi grid");
  CLI::App* period = app.add_subcommand("period", "closed-form and quadrature period Xi");
  CLI::App* limits = app.add_subcommand("limits", "asymptotic limits for gamma <= 1");
  CLI::App* verify = app.add_subcommand("verify", "run the oracle suite");
  CLI::App* simulate = app.add_subcommand("simulate", "finite-difference evolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "sgw: " << e.what() << '\n';
    return kInvalidConfig;
  }

  const Logger log(err);
  try {
    Settings settings;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config '" + config_path + "'");
      try {
        settings = parse_config(in);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) settings[key] = flags[key];
    }
    if (probe) settings["probe"] = "true";
    if (serial) settings["serial"] = "true";
    const Config config(settings);

    if (*eval) return cmd_eval(config, out, log);
    if (*period) return cmd_period(config, out, log);
    if (*limits) return cmd_limits(config, out, log);
    if (*verify) return cmd_verify(config, corrupt, out, log);
    if (*simulate) return cmd_simulate(config, out, log);
  } catch (const ConfigError& e) {
    err << "sgw: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const DomainError& e) {
    err << "sgw: domain error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const BlowUp& e) {
    err << "sgw: " << e.what() << '\n';
    return kDiverged;
  } catch (const std::exception& e) {
    err << "sgw: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalidConfig;
}

}  // namespace sgw::cli
