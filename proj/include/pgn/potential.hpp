#pragma once

#include <cstddef>
#include <vector>

#include "pgn/pwl_system.hpp"
#include "pgn/rational.hpp"

namespace pgn {

// The two potential families whose slopes dominate the local contraction
// rate on every linearity interval of a valid system:
//   single(d):    Phi(q) = d*q + (n+1) * (P_1(q) + ... + P_{n-d}(q))
//   intersection: Phi(q) = 2 * sum_{j=1}^{n} (n+1-j) * P_j(q)
struct PotentialSpec {
  enum class Kind { single, intersection };
  Kind kind = Kind::intersection;
  int d = 0;  // only meaningful for single

  static PotentialSpec single(int d) { return {Kind::single, d}; }
  static PotentialSpec intersection() { return {Kind::intersection, 0}; }
};

// Constant drift plus per-component weights; Phi(q) = drift*q + sum_j w_j P_j(q).
Rat potential_drift(const PotentialSpec& spec);
std::vector<Rat> potential_weights(const PotentialSpec& spec, int n);

// Exact Phi(q).
Rat phi(const PotentialSpec& spec, const PiecewiseLinearSystem& sys, const Rat& q);

// Exact Phi' on one linearity interval, computed symbolically from the
// slope block (never by finite differences).
Rat phi_slope(const PotentialSpec& spec, const PiecewiseLinearSystem& sys,
              std::size_t interval_index);

struct PotentialRow {
  Rat q_start;
  Rat q_end;
  Rat slope;   // Phi' on the interval
  int delta;   // local contraction rate there
  Rat margin;  // slope - delta; negative means a violation
};

struct PotentialReport {
  bool ok = true;
  std::vector<PotentialRow> rows;
  std::vector<std::size_t> violations;  // indices into rows
};

// Checks Phi' >= delta on every linearity interval, exactly. For a system
// passing validate() there must be no violations; a violation indicates a
// bug in the generator or the validator, not in the inequality.
PotentialReport check_slope_inequality(const PotentialSpec& spec,
                                       const PiecewiseLinearSystem& sys);

// Tail minimum of Phi(q)/q, an upper bound for the lower average
// contraction rate. For single(d) this equals d + (n+1) * min S_{n-d}(q)/q.
// Phi/q is monotone on each interval, so breakpoint sampling is exact.
Rat integrated_upper_bound(const PotentialSpec& spec, const PiecewiseLinearSystem& sys,
                           const Rat& tail_fraction = rat(1, 2));

}  // namespace pgn
