#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pgn/rational.hpp"

namespace pgn {

// One rising block of components. Components lo..hi (1-based) share the
// slope 1/(hi-lo+1) on an interval; every other component is flat there.
struct SlopeBlock {
  int lo = 1;
  int hi = 1;

  Rat slope() const { return rat(1, hi - lo + 1); }
  bool contains(int component) const { return lo <= component && component <= hi; }
  friend bool operator==(const SlopeBlock&, const SlopeBlock&) = default;
};

// Maximal interval on which the map is linear, with its rising block.
struct LinearityInterval {
  Rat q_start;
  Rat q_end;
  SlopeBlock block;
};

struct Violation {
  char axiom;           // '1', '2' or '3'
  std::string location; // "q=..." or "interval [a, b]"
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(char axiom, std::string location, std::string detail) {
    passed = false;
    violations.push_back({axiom, std::move(location), std::move(detail)});
  }
};

// Candidate Roy-system: a continuous piecewise-linear map with n+1
// components on a finite window [q0, q_max], represented exactly by its
// initial values and an ordered, contiguous list of linearity intervals.
// Continuity is structural (values are slope integrals), so only the
// ordering, sum and junction axioms can fail; validate() checks those.
//
// Immutable after construction; all queries are const and thread-safe.
class PiecewiseLinearSystem {
 public:
  // Throws domain_error on structural problems (gaps, overlaps, bad block
  // indices, wrong initial size). Axiom violations are not errors; they are
  // data returned by validate().
  PiecewiseLinearSystem(int n_plus_1, Rat q0, std::vector<Rat> initial_values,
                        std::vector<LinearityInterval> intervals);

  int components() const { return n_plus_1_; }
  int n() const { return n_plus_1_ - 1; }
  const Rat& q0() const { return q0_; }
  const Rat& q_max() const { return intervals_.back().q_end; }
  const std::vector<Rat>& initial_values() const { return initial_; }
  const std::vector<LinearityInterval>& intervals() const { return intervals_; }

  // Breakpoints: q0 followed by every interval end. Size = intervals + 1.
  std::vector<Rat> breakpoints() const;
  const std::vector<Rat>& values_at_breakpoint(std::size_t i) const { return at_break_[i]; }

  // Index of the interval containing q, with q == q_max mapping to the last
  // interval. Throws domain_error outside [q0, q_max].
  std::size_t interval_index(const Rat& q) const;

  // Exact component values (P_1(q), ..., P_{n+1}(q)).
  std::vector<Rat> evaluate(const Rat& q) const;

  // P_1(q) + ... + P_k(q), exact. k in [1, n+1].
  Rat partial_sum(int k, const Rat& q) const;

  // Checks the ordering/sum axiom at every breakpoint (the constraints are
  // linear, so endpoint checks cover interval interiors), the equal-rising-
  // block axiom per interval, and the junction-merging axiom at every
  // interior breakpoint. Junction indices are recomputed from the stored
  // blocks of the adjacent intervals, never trusted from input.
  ValidationReport validate() const;

 private:
  int n_plus_1_;
  Rat q0_;
  std::vector<Rat> initial_;
  std::vector<LinearityInterval> intervals_;
  std::vector<std::vector<Rat>> at_break_;  // values at q0 and each interval end
};

}  // namespace pgn
