#pragma once

#include <ostream>
#include <string>

#include "sgw/pde_sim.hpp"

namespace sgw {

// 17 significant digits; infinities as inf / -inf.
std::string format_number(double v);

// Header x,phi,phi_t.
void write_snapshot_csv(std::ostream& out, const FieldState& state);

// Header t,deviation,shift.
void write_deviation_csv(std::ostream& out, const DeviationReport& report);

}  // namespace sgw
