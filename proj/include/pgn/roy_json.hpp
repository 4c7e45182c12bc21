#pragma once

#include <string>

#include "pgn/pwl_system.hpp"

namespace pgn {

// File schema for systems. Rationals travel as "p/q" strings so nothing is
// lost to floating point:
//   {"n_plus_1": int, "q0": "p/q", "initial_values": ["p/q", ...],
//    "intervals": [{"q_start": "p/q", "q_end": "p/q", "r_lo": int, "r_hi": int}, ...]}
std::string to_json(const PiecewiseLinearSystem& sys, int indent = 2);

// Parses and structurally checks a system; malformed documents and
// gap/overlap problems throw domain_error with a location diagnostic.
PiecewiseLinearSystem system_from_json(const std::string& text);

PiecewiseLinearSystem load_system(const std::string& path);
void save_system(const PiecewiseLinearSystem& sys, const std::string& path);

// Writes via a temporary file in the same directory followed by a rename,
// so readers never observe a partial document.
void atomic_write(const std::string& path, const std::string& contents);

}  // namespace pgn
