#include "pgn/contraction.hpp"

#include <algorithm>

namespace pgn {

int local_rate(const PiecewiseLinearSystem& sys, std::size_t interval_index) {
  return sys.components() - sys.intervals()[interval_index].block.lo;
}

int local_rate_at(const PiecewiseLinearSystem& sys, const Rat& q) {
  const std::size_t i = sys.interval_index(q);
  const auto& iv = sys.intervals()[i];
  if (q == iv.q_start || q == iv.q_end)
    throw domain_error("local rate undefined at breakpoint q=" + to_fraction_string(q) +
                       "; query an interval instead");
  return local_rate(sys, i);
}

RateProfile::RateProfile(const PiecewiseLinearSystem& sys) : q0_(sys.q0()) {
  for (std::size_t i = 0; i < sys.intervals().size(); ++i) {
    const auto& iv = sys.intervals()[i];
    const int delta = local_rate(sys, i);
    if (!segments_.empty() && segments_.back().delta == delta)
      segments_.back().q_end = iv.q_end;
    else
      segments_.push_back({iv.q_start, iv.q_end, delta});
  }
  prefix_.reserve(segments_.size());
  Rat acc(0);
  for (const auto& s : segments_) {
    prefix_.push_back(acc);
    acc += Rat(s.delta) * (s.q_end - s.q_start);
  }
}

Rat RateProfile::average(const Rat& Q) const {
  if (!(Q > q0_)) throw domain_error("average rate requires Q > q0");
  if (Q > q_max()) throw domain_error("average rate requires Q <= q_max");
  std::size_t lo = 0, hi = segments_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (segments_[mid].q_end < Q)
      lo = mid + 1;
    else
      hi = mid;
  }
  const Rat integral = prefix_[lo] + Rat(segments_[lo].delta) * (Q - segments_[lo].q_start);
  return integral / (Q - q0_);
}

Rat average_rate(const PiecewiseLinearSystem& sys, const Rat& Q) {
  return RateProfile(sys).average(Q);
}

namespace {

// Breakpoints of the merged rate profile, excluding q0. These are the only
// candidate extremum points of the running average inside the window.
std::vector<Rat> rate_breakpoints(const RateProfile& profile) {
  std::vector<Rat> b;
  b.reserve(profile.segments().size());
  for (const auto& s : profile.segments()) b.push_back(s.q_end);
  return b;
}

std::size_t tail_first_index(std::size_t count, const Rat& tail_fraction) {
  if (tail_fraction <= 0 || tail_fraction > 1) throw domain_error("tail fraction must be in (0, 1]");
  // keep ceil(count * fraction) trailing points
  const Rat keep_r = Rat(static_cast<long>(count)) * tail_fraction;
  mpz_class keep_z;
  mpz_cdiv_q(keep_z.get_mpz_t(), keep_r.get_num_mpz_t(), keep_r.get_den_mpz_t());
  const std::size_t keep = static_cast<std::size_t>(keep_z.get_ui());
  return count - std::min(count, std::max<std::size_t>(keep, 1));
}

}  // namespace

RateExtrema rate_extrema(const PiecewiseLinearSystem& sys, const Rat& tail_fraction) {
  RateProfile profile(sys);
  std::vector<Rat> candidates = rate_breakpoints(profile);
  if (candidates.empty())
    throw resource_error("horizon too short: no rate breakpoints in the window");
  const std::size_t first = tail_first_index(candidates.size(), tail_fraction);

  RateExtrema out;
  out.tail_start = candidates[first];
  bool have = false;
  for (std::size_t i = first; i < candidates.size(); ++i) {
    const Rat v = profile.average(candidates[i]);
    if (!have || v < out.lower) {
      out.lower = v;
      out.lower_anchors.clear();
    }
    if (v == out.lower) out.lower_anchors.push_back(candidates[i]);
    if (!have || v > out.upper) {
      out.upper = v;
      out.upper_anchors.clear();
    }
    if (v == out.upper) out.upper_anchors.push_back(candidates[i]);
    have = true;
  }
  return out;
}

std::vector<ExponentEstimate> exponent_functionals(const PiecewiseLinearSystem& sys,
                                                   const Rat& tail_fraction) {
  std::vector<Rat> bps = sys.breakpoints();
  // S_k(q)/q needs q > 0; drop a leading zero breakpoint.
  std::vector<Rat> candidates(bps.begin() + (sys.q0() == 0 ? 1 : 0), bps.end());
  if (candidates.empty())
    throw resource_error("horizon too short: no usable breakpoints in the window");
  const std::size_t first = tail_first_index(candidates.size(), tail_fraction);

  std::vector<ExponentEstimate> out;
  out.reserve(sys.n());
  for (int k = 1; k <= sys.n(); ++k) {
    ExponentEstimate est;
    est.k = k;
    bool have = false;
    for (std::size_t i = first; i < candidates.size(); ++i) {
      const Rat v = sys.partial_sum(k, candidates[i]) / candidates[i];
      if (!have || v < est.liminf_value) {
        est.liminf_value = v;
        est.liminf_anchors.clear();
      }
      if (v == est.liminf_value) est.liminf_anchors.push_back(candidates[i]);
      if (!have || v > est.limsup_value) {
        est.limsup_value = v;
        est.limsup_anchors.clear();
      }
      if (v == est.limsup_value) est.limsup_anchors.push_back(candidates[i]);
      have = true;
    }
    est.inferred_omega = omega_from_reciprocal(est.liminf_value);
    est.inferred_omega_hat = omega_from_reciprocal(est.limsup_value);
    out.push_back(std::move(est));
  }
  return out;
}

}  // namespace pgn
