#include "sgw/csv.hpp"

#include <cmath>
#include <sstream>

namespace sgw {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void write_snapshot_csv(std::ostream& out, const FieldState& state) {
  out << "x,phi,phi_t\n";
  for (std::size_t i = 0; i < state.n; ++i) {
    const double phi_t = (state.phi[i] - state.phi_prev[i]) / state.dt;
    out << format_number(state.x(i)) << ',' << format_number(state.phi[i]) << ','
        << format_number(phi_t) << '\n';
  }
}

void write_deviation_csv(std::ostream& out, const DeviationReport& report) {
  out << "t,deviation,shift\n";
  for (std::size_t k = 0; k < report.times.size(); ++k) {
    out << format_number(report.times[k]) << ',' << format_number(report.deviation[k]) << ','
        << format_number(report.best_shift[k]) << '\n';
  }
}

}  // namespace sgw
