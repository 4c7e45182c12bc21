#pragma once

#include <cstddef>
#include <vector>

#include "pgn/pwl_system.hpp"
#include "pgn/rational.hpp"

namespace pgn {

// Local contraction rate on an interval: n+1-kappa, where kappa is the
// lowest component index with positive slope there. Ranges over [0, n].
int local_rate(const PiecewiseLinearSystem& sys, std::size_t interval_index);

// Same, for a q strictly inside a linearity interval. The rate is undefined
// at breakpoints (measure zero; the running average ignores them), so those
// are rejected with a domain_error.
int local_rate_at(const PiecewiseLinearSystem& sys, const Rat& q);

// Piecewise-constant rate profile with exact prefix integrals, so the
// running average is an exact rational at any Q.
class RateProfile {
 public:
  struct Segment {
    Rat q_start;
    Rat q_end;
    int delta;
  };

  explicit RateProfile(const PiecewiseLinearSystem& sys);

  const std::vector<Segment>& segments() const { return segments_; }
  const Rat& q0() const { return q0_; }
  const Rat& q_max() const { return segments_.back().q_end; }

  // Average rate (1/(Q-q0)) * integral of delta over [q0, Q]. Requires
  // q0 < Q <= q_max.
  Rat average(const Rat& Q) const;

 private:
  Rat q0_;
  std::vector<Segment> segments_;
  std::vector<Rat> prefix_;  // integral of delta up to each segment start
};

Rat average_rate(const PiecewiseLinearSystem& sys, const Rat& Q);

struct RateExtrema {
  Rat lower;  // min of the running average over the tail window
  Rat upper;  // max of the running average over the tail window
  std::vector<Rat> lower_anchors;
  std::vector<Rat> upper_anchors;
  Rat tail_start;
};

// Estimates liminf/limsup of the running average by evaluating it at every
// rate breakpoint in the tail of the window. Between rate breakpoints the
// average moves monotonically toward the current rate, so breakpoint
// sampling is exact for the window. The tail is the last `tail_fraction`
// of breakpoints by index, which for the geometric template windows means
// the last fraction of cycles. Throws resource_error when fewer than two
// breakpoints land in the tail.
RateExtrema rate_extrema(const PiecewiseLinearSystem& sys, const Rat& tail_fraction = rat(1, 2));

struct ExponentEstimate {
  int k;               // functional index: partial sum of the k lowest components
  Rat liminf_value;    // min of S_k(q)/q over the tail window
  Rat limsup_value;    // max of S_k(q)/q over the tail window
  ExtRat inferred_omega;      // 1/liminf - 1, infinity when liminf = 0
  ExtRat inferred_omega_hat;  // 1/limsup - 1
  std::vector<Rat> liminf_anchors;
  std::vector<Rat> limsup_anchors;
};

// For k = 1..n, extrema of S_k(q)/q over the tail breakpoints. S_k is
// linear per interval, so q*S_k'(q) - S_k(q) is constant there and S_k/q is
// monotone per interval; breakpoint sampling is again exact. The inferred
// exponents correspond to index n-k.
std::vector<ExponentEstimate> exponent_functionals(const PiecewiseLinearSystem& sys,
                                                   const Rat& tail_fraction = rat(1, 2));

}  // namespace pgn
