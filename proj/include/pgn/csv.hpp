#pragma once

#include <string>
#include <vector>

#include "pgn/lattice_oracle.hpp"
#include "pgn/pwl_system.hpp"

namespace pgn {

// Minimal CSV with a header row; all cells are kept as strings and parsed
// to double on demand by consumers.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

CsvTable parse_csv(const std::string& text);

// One row per breakpoint: q, P_1..P_{n+1}, delta, Delta, S_1/q..S_n/q.
// delta is the rate of the interval starting at q (repeated for the final
// row); Delta at q0 is reported as that first rate (its right limit); the
// ratios at q0 = 0 are reported as their right limits as well.
std::string trajectory_csv(const PiecewiseLinearSystem& sys, int precision);

// One row per grid point: q, L_1..L_{n+1}, S_1/q..S_n/q, radius.
std::string oracle_csv(const oracle::MinimaTrajectory& traj, int precision);

}  // namespace pgn
