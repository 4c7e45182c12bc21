#include "pgn/potential.hpp"

#include "pgn/contraction.hpp"

namespace pgn {

Rat potential_drift(const PotentialSpec& spec) {
  return spec.kind == PotentialSpec::Kind::single ? Rat(spec.d) : Rat(0);
}

std::vector<Rat> potential_weights(const PotentialSpec& spec, int n) {
  std::vector<Rat> w(n + 1, Rat(0));
  if (spec.kind == PotentialSpec::Kind::single) {
    if (spec.d < 0 || spec.d >= n) throw domain_error("potential index d must lie in [0, n-1]");
    for (int j = 1; j <= n - spec.d; ++j) w[j - 1] = Rat(n + 1);
  } else {
    for (int j = 1; j <= n; ++j) w[j - 1] = Rat(2 * (n + 1 - j));
  }
  return w;
}

Rat phi(const PotentialSpec& spec, const PiecewiseLinearSystem& sys, const Rat& q) {
  const std::vector<Rat> w = potential_weights(spec, sys.n());
  const std::vector<Rat> v = sys.evaluate(q);
  Rat out = potential_drift(spec) * q;
  for (int j = 0; j < sys.components(); ++j) out += w[j] * v[j];
  return out;
}

Rat phi_slope(const PotentialSpec& spec, const PiecewiseLinearSystem& sys,
              std::size_t interval_index) {
  const std::vector<Rat> w = potential_weights(spec, sys.n());
  const SlopeBlock& b = sys.intervals()[interval_index].block;
  Rat out = potential_drift(spec);
  const Rat slope = b.slope();
  for (int j = b.lo; j <= b.hi; ++j) out += w[j - 1] * slope;
  return out;
}

PotentialReport check_slope_inequality(const PotentialSpec& spec,
                                       const PiecewiseLinearSystem& sys) {
  PotentialReport report;
  report.rows.reserve(sys.intervals().size());
  for (std::size_t i = 0; i < sys.intervals().size(); ++i) {
    const auto& iv = sys.intervals()[i];
    PotentialRow row;
    row.q_start = iv.q_start;
    row.q_end = iv.q_end;
    row.slope = phi_slope(spec, sys, i);
    row.delta = local_rate(sys, i);
    row.margin = row.slope - row.delta;
    if (row.margin < 0) {
      report.ok = false;
      report.violations.push_back(i);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Rat integrated_upper_bound(const PotentialSpec& spec, const PiecewiseLinearSystem& sys,
                           const Rat& tail_fraction) {
  if (tail_fraction <= 0 || tail_fraction > 1)
    throw domain_error("tail fraction must be in (0, 1]");
  std::vector<Rat> bps = sys.breakpoints();
  std::vector<Rat> candidates(bps.begin() + (sys.q0() == 0 ? 1 : 0), bps.end());
  if (candidates.empty()) throw resource_error("horizon too short for the potential bound");
  std::size_t keep = candidates.size();
  {
    // same index-based tail convention as the contraction estimators
    const Rat keep_r = Rat(static_cast<long>(candidates.size())) * tail_fraction;
    mpz_class keep_z;
    mpz_cdiv_q(keep_z.get_mpz_t(), keep_r.get_num_mpz_t(), keep_r.get_den_mpz_t());
    keep = std::max<std::size_t>(1, static_cast<std::size_t>(keep_z.get_ui()));
  }
  const std::size_t first = candidates.size() - std::min(candidates.size(), keep);
  bool have = false;
  Rat best;
  for (std::size_t i = first; i < candidates.size(); ++i) {
    const Rat v = phi(spec, sys, candidates[i]) / candidates[i];
    if (!have || v < best) best = v;
    have = true;
  }
  return best;
}

}  // namespace pgn
