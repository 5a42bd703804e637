#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "luinv/states.hpp"

namespace luinv {

// Text state files:
//   line 1: "pure" or "mixed"
//   line 2: "dims" n_1 ... n_k
//   then one "re im" pair per line; prod(n) lines for pure states, prod(n)^2
//   for mixed states (row index outer). Lines starting with '#' are skipped.

using AnyState = std::variant<PureState, DensityMatrix>;

/// Throws std::runtime_error with a line number on malformed input.
AnyState read_state(std::istream& in);
AnyState read_state_file(const std::string& path);

/// Writes with 17 significant digits so reading back is lossless.
void write_state(std::ostream& out, const PureState& psi);
void write_state(std::ostream& out, const DensityMatrix& rho);

}  // namespace luinv
