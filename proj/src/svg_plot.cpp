#include "pgn/svg_plot.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace pgn {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

double cell_to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw domain_error("non-numeric CSV cell '" + s + "'");
  return v;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_trajectory_svg(const CsvTable& table, const PlotStyle& style) {
  const int qcol = table.column("q");
  if (qcol < 0) throw domain_error("CSV has no q column");
  std::vector<int> comps;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    const std::string& h = table.header[i];
    if ((h.rfind("P_", 0) == 0 || h.rfind("L_", 0) == 0) && h.find('/') == std::string::npos)
      comps.push_back(static_cast<int>(i));
  }
  if (comps.empty()) throw domain_error("CSV has no component columns");
  if (table.rows.empty()) throw domain_error("CSV has no data rows");
  const int dcol = style.delta_overlay ? table.column("delta") : -1;

  std::vector<double> q(table.rows.size());
  std::vector<std::vector<double>> y(comps.size(), std::vector<double>(table.rows.size()));
  double qmin = 0, qmax = 0, ymin = 0, ymax = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.header.size())
      throw domain_error("CSV row " + std::to_string(r + 2) + " has the wrong cell count");
    double qv = cell_to_double(table.rows[r][qcol]);
    if (style.log_q) {
      if (qv <= 0) throw domain_error("log axis requires positive q");
      qv = std::log(qv);
    }
    q[r] = qv;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const double v = cell_to_double(table.rows[r][comps[c]]);
      y[c][r] = v;
      if (r == 0 && c == 0) {
        ymin = ymax = v;
      } else {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
    }
    if (r == 0)
      qmin = qmax = qv;
    else {
      qmin = std::min(qmin, qv);
      qmax = std::max(qmax, qv);
    }
  }
  if (qmax == qmin) qmax = qmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  const double ml = 50, mr = 15, mt = 15, mb = 35;
  const double pw = style.width - ml - mr, ph = style.height - mt - mb;
  auto X = [&](double v) { return ml + (v - qmin) / (qmax - qmin) * pw; };
  auto Y = [&](double v) { return mt + (ymax - v) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
      << style.height << "\" viewBox=\"0 0 " << style.width << " " << style.height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\"" << fmt(pw)
      << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  for (std::size_t c = 0; c < comps.size(); ++c) {
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[c % 8]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t r = 0; r < q.size(); ++r) {
      if (r) svg << " ";
      svg << fmt(X(q[r])) << "," << fmt(Y(y[c][r]));
    }
    svg << "\"/>\n";
  }

  if (dcol >= 0) {
    // step overlay on its own scale pinned to the plot height
    double dmax = 1;
    std::vector<double> dv(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      dv[r] = cell_to_double(table.rows[r][dcol]);
      dmax = std::max(dmax, dv[r]);
    }
    auto YD = [&](double v) { return mt + (dmax - v) / dmax * ph; };
    svg << "<polyline fill=\"none\" stroke=\"#000000\" stroke-dasharray=\"4,3\" "
           "stroke-width=\"1.0\" points=\"";
    for (std::size_t r = 0; r < q.size(); ++r) {
      if (r) svg << " ";
      svg << fmt(X(q[r])) << "," << fmt(YD(dv[r]));
      if (r + 1 < q.size()) svg << " " << fmt(X(q[r + 1])) << "," << fmt(YD(dv[r]));
    }
    svg << "\"/>\n";
  }

  // axis labels: corners only, keeps the output stable
  svg << "<text x=\"" << fmt(ml) << "\" y=\"" << fmt(style.height - 10.0)
      << "\" font-family=\"monospace\" font-size=\"12\">" << fmt(style.log_q ? std::exp(qmin) : qmin)
      << "</text>\n";
  svg << "<text x=\"" << fmt(ml + pw - 40) << "\" y=\"" << fmt(style.height - 10.0)
      << "\" font-family=\"monospace\" font-size=\"12\">" << fmt(style.log_q ? std::exp(qmax) : qmax)
      << "</text>\n";
  svg << "<text x=\"5\" y=\"" << fmt(mt + 12) << "\" font-family=\"monospace\" font-size=\"12\">"
      << fmt(ymax) << "</text>\n";
  svg << "<text x=\"5\" y=\"" << fmt(mt + ph) << "\" font-family=\"monospace\" font-size=\"12\">"
      << fmt(ymin) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pgn
