#include "pgn/csv.hpp"

#include <cstdio>
#include <sstream>

#include "pgn/contraction.hpp"

namespace pgn {

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw domain_error("empty CSV input");
  return table;
}

std::string trajectory_csv(const PiecewiseLinearSystem& sys, int precision) {
  const int np1 = sys.components();
  std::ostringstream out;
  out << "q";
  for (int c = 1; c <= np1; ++c) out << ",P_" << c;
  out << ",delta,Delta";
  for (int k = 1; k < np1; ++k) out << ",S_" << k << "/q";
  out << "\n";

  RateProfile profile(sys);
  const std::vector<Rat> bps = sys.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const Rat& q = bps[i];
    const std::size_t iv = i < sys.intervals().size() ? i : sys.intervals().size() - 1;
    out << to_decimal_string(q, precision);
    const auto& vals = sys.values_at_breakpoint(i);
    for (const auto& v : vals) out << "," << to_decimal_string(v, precision);
    out << "," << local_rate(sys, iv);
    const Rat delta_avg = i == 0 ? Rat(local_rate(sys, 0)) : profile.average(q);
    out << "," << to_decimal_string(delta_avg, precision);
    Rat s(0);
    for (int k = 1; k < np1; ++k) {
      s += vals[k - 1];
      if (q > 0)
        out << "," << to_decimal_string(s / q, precision);
      else  // right limit at q0 = 0: ratio of slopes on the first interval
        out << ","
            << to_decimal_string(Rat(std::max(0, std::min(k, sys.intervals()[0].block.hi) -
                                                      sys.intervals()[0].block.lo + 1)) *
                                     sys.intervals()[0].block.slope(),
                                 precision);
    }
    out << "\n";
  }
  return out.str();
}

std::string oracle_csv(const oracle::MinimaTrajectory& traj, int precision) {
  const int np1 = traj.u.n() + 1;
  std::ostringstream out;
  out << "q";
  for (int d = 1; d <= np1; ++d) out << ",L_" << d;
  for (int k = 1; k < np1; ++k) out << ",S_" << k << "/q";
  out << ",radius\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return std::string(buf);
  };
  for (const auto& p : traj.points) {
    out << fmt(p.q);
    for (int d = 0; d < np1; ++d)
      out << "," << (d < static_cast<int>(p.L.size()) ? fmt(p.L[d]) : std::string("nan"));
    double s = 0;
    for (int k = 1; k < np1; ++k) {
      if (k - 1 < static_cast<int>(p.L.size())) s += p.L[k - 1];
      out << "," << (p.q > 0 ? fmt(s / p.q) : fmt(0.0));
    }
    out << "," << p.radius_used << "\n";
  }
  return out.str();
}

}  // namespace pgn
