#include "pgn/roy_json.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pgn {

using nlohmann::json;

std::string to_json(const PiecewiseLinearSystem& sys, int indent) {
  json doc;
  doc["n_plus_1"] = sys.components();
  doc["q0"] = to_fraction_string(sys.q0());
  json init = json::array();
  for (const auto& v : sys.initial_values()) init.push_back(to_fraction_string(v));
  doc["initial_values"] = std::move(init);
  json ivs = json::array();
  for (const auto& iv : sys.intervals()) {
    ivs.push_back({{"q_start", to_fraction_string(iv.q_start)},
                   {"q_end", to_fraction_string(iv.q_end)},
                   {"r_lo", iv.block.lo},
                   {"r_hi", iv.block.hi}});
  }
  doc["intervals"] = std::move(ivs);
  return doc.dump(indent) + "\n";
}

PiecewiseLinearSystem system_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw domain_error(std::string("malformed system file: ") + e.what());
  }
  try {
    const int n_plus_1 = doc.at("n_plus_1").get<int>();
    const Rat q0 = parse_rational(doc.at("q0").get<std::string>());
    std::vector<Rat> initial;
    for (const auto& v : doc.at("initial_values")) initial.push_back(parse_rational(v.get<std::string>()));
    std::vector<LinearityInterval> intervals;
    for (const auto& iv : doc.at("intervals")) {
      LinearityInterval out;
      out.q_start = parse_rational(iv.at("q_start").get<std::string>());
      out.q_end = parse_rational(iv.at("q_end").get<std::string>());
      out.block.lo = iv.at("r_lo").get<int>();
      out.block.hi = iv.at("r_hi").get<int>();
      intervals.push_back(std::move(out));
    }
    return PiecewiseLinearSystem(n_plus_1, q0, std::move(initial), std::move(intervals));
  } catch (const json::exception& e) {
    throw domain_error(std::string("malformed system file: ") + e.what());
  }
}

PiecewiseLinearSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return system_from_json(buf.str());
}

void atomic_write(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw domain_error("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out) throw domain_error("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw domain_error("cannot rename into '" + path + "': " + ec.message());
  }
}

void save_system(const PiecewiseLinearSystem& sys, const std::string& path) {
  atomic_write(path, to_json(sys));
}

}  // namespace pgn
