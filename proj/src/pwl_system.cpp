#include "pgn/pwl_system.hpp"

#include <algorithm>

namespace pgn {

namespace {

std::string q_loc(const Rat& q) { return "q=" + to_fraction_string(q); }

std::string interval_loc(const LinearityInterval& iv) {
  return "interval [" + to_fraction_string(iv.q_start) + ", " + to_fraction_string(iv.q_end) + "]";
}

}  // namespace

PiecewiseLinearSystem::PiecewiseLinearSystem(int n_plus_1, Rat q0, std::vector<Rat> initial_values,
                                             std::vector<LinearityInterval> intervals)
    : n_plus_1_(n_plus_1), q0_(std::move(q0)), initial_(std::move(initial_values)),
      intervals_(std::move(intervals)) {
  if (n_plus_1_ < 2) throw domain_error("system needs at least 2 components");
  if (q0_ < 0) throw domain_error("q0 must be nonnegative");
  if (static_cast<int>(initial_.size()) != n_plus_1_)
    throw domain_error("initial_values size does not match component count");
  if (intervals_.empty()) throw domain_error("system needs at least one interval");
  if (intervals_.front().q_start != q0_)
    throw domain_error("first interval must start at q0 (" + q_loc(q0_) + ", got " +
                       q_loc(intervals_.front().q_start) + ")");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (!(iv.q_start < iv.q_end))
      throw domain_error("empty or reversed " + interval_loc(iv));
    if (iv.block.lo < 1 || iv.block.hi > n_plus_1_ || iv.block.lo > iv.block.hi)
      throw domain_error("slope block out of range on " + interval_loc(iv));
    if (i + 1 < intervals_.size() && iv.q_end != intervals_[i + 1].q_start)
      throw domain_error("gap or overlap between " + q_loc(iv.q_end) + " and " +
                         q_loc(intervals_[i + 1].q_start));
  }

  at_break_.reserve(intervals_.size() + 1);
  at_break_.push_back(initial_);
  std::vector<Rat> cur = initial_;
  for (const auto& iv : intervals_) {
    const Rat rise = iv.block.slope() * (iv.q_end - iv.q_start);
    for (int c = iv.block.lo; c <= iv.block.hi; ++c) cur[c - 1] += rise;
    at_break_.push_back(cur);
  }
}

std::vector<Rat> PiecewiseLinearSystem::breakpoints() const {
  std::vector<Rat> b;
  b.reserve(intervals_.size() + 1);
  b.push_back(q0_);
  for (const auto& iv : intervals_) b.push_back(iv.q_end);
  return b;
}

std::size_t PiecewiseLinearSystem::interval_index(const Rat& q) const {
  if (q < q0_ || q > q_max())
    throw domain_error("q=" + to_fraction_string(q) + " outside domain [" +
                       to_fraction_string(q0_) + ", " + to_fraction_string(q_max()) + "]");
  // First interval with q_end >= q, except q == q_start maps left when possible.
  std::size_t lo = 0, hi = intervals_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (intervals_[mid].q_end < q)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

std::vector<Rat> PiecewiseLinearSystem::evaluate(const Rat& q) const {
  const std::size_t i = interval_index(q);
  std::vector<Rat> v = at_break_[i];
  const auto& iv = intervals_[i];
  if (q != iv.q_start) {
    const Rat rise = iv.block.slope() * (q - iv.q_start);
    for (int c = iv.block.lo; c <= iv.block.hi; ++c) v[c - 1] += rise;
  }
  return v;
}

Rat PiecewiseLinearSystem::partial_sum(int k, const Rat& q) const {
  if (k < 1 || k > n_plus_1_) throw domain_error("partial sum index out of range");
  const std::size_t i = interval_index(q);
  Rat s(0);
  const auto& base = at_break_[i];
  for (int c = 1; c <= k; ++c) s += base[c - 1];
  const auto& iv = intervals_[i];
  if (q != iv.q_start) {
    const int rising = std::max(0, std::min(k, iv.block.hi) - iv.block.lo + 1);
    if (rising > 0) s += iv.block.slope() * rising * (q - iv.q_start);
  }
  return s;
}

ValidationReport PiecewiseLinearSystem::validate() const {
  ValidationReport report;

  // (S1) at every breakpoint: 0 <= P_1 <= ... <= P_{n+1} and sum = q.
  // Sortedness, nonnegativity and the sum are linear constraints, so holding
  // at both endpoints of an interval implies holding throughout it.
  std::vector<Rat> bps = breakpoints();
  for (std::size_t i = 0; i < at_break_.size(); ++i) {
    const auto& v = at_break_[i];
    if (v.front() < 0)
      report.add('1', q_loc(bps[i]), "P_1 = " + to_fraction_string(v.front()) + " < 0");
    for (int c = 1; c < n_plus_1_; ++c)
      if (v[c - 1] > v[c])
        report.add('1', q_loc(bps[i]),
                   "P_" + std::to_string(c) + " > P_" + std::to_string(c + 1) + " (" +
                       to_fraction_string(v[c - 1]) + " > " + to_fraction_string(v[c]) + ")");
    Rat sum(0);
    for (const auto& x : v) sum += x;
    if (sum != bps[i])
      report.add('1', q_loc(bps[i]),
                 "component sum " + to_fraction_string(sum) + " != q");
  }

  // (S2) per interval: the block components must coincide where they start
  // rising (equal start values plus a shared slope keep them equal).
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    const auto& v = at_break_[i];
    for (int c = iv.block.lo; c < iv.block.hi; ++c)
      if (v[c - 1] != v[c]) {
        report.add('2', interval_loc(iv),
                   "rising components P_" + std::to_string(iv.block.lo) + "..P_" +
                       std::to_string(iv.block.hi) + " do not coincide at the interval start");
        break;
      }
  }

  // (S3) at interior breakpoints: with left block (r_lo, r_hi) and right
  // block (s_lo, s_hi), r_lo < s_hi forces P_{r_lo} = ... = P_{s_hi} there.
  for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) {
    const int r_lo = intervals_[i].block.lo;
    const int s_hi = intervals_[i + 1].block.hi;
    if (r_lo >= s_hi) continue;
    const auto& v = at_break_[i + 1];
    for (int c = r_lo; c < s_hi; ++c)
      if (v[c - 1] != v[c]) {
        report.add('3', q_loc(intervals_[i].q_end),
                   "junction requires P_" + std::to_string(r_lo) + "..P_" + std::to_string(s_hi) +
                       " equal, but P_" + std::to_string(c) + " != P_" + std::to_string(c + 1));
        break;
      }
  }

  return report;
}

}  // namespace pgn
