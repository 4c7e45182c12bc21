#pragma once

#include <string>

#include "pgn/csv.hpp"

namespace pgn {

struct PlotStyle {
  int width = 800;
  int height = 500;
  bool delta_overlay = false;  // step line for the delta column, when present
  bool log_q = false;          // logarithmic q axis (template windows grow geometrically)
};

// Renders one polyline per component column (P_* or L_*) of a trajectory
// CSV. Output is deterministic: fixed canvas, fixed palette, fixed number
// formatting, no timestamps, so identical input gives identical bytes.
// Throws domain_error on tables without a q column, component columns, or
// data rows.
std::string render_trajectory_svg(const CsvTable& table, const PlotStyle& style = {});

}  // namespace pgn
