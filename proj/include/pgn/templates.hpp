#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pgn/dimensions.hpp"
#include "pgn/pwl_system.hpp"
#include "pgn/rational.hpp"

namespace pgn {

// Parameters of the single-exponent construction: a two-phase pattern per
// cycle (top d+1 components rise, then the bottom n-d), separated by long
// all-equal stretches whose length is controlled by epsilon.
struct SingleExponentParams {
  int n = 2;
  int d = 0;
  ExtRat omega_d;            // >= (d+1)/(n-d), or infinity
  Rat epsilon = rat(1, 100); // in (0, 1)
  Rat q_start = 1;           // left end of the window, > 0
  // Per-cycle surrogate exponents used when omega_d is infinite; must grow
  // without bound. The default max((k+2)^2, minimal value) keeps every cycle
  // admissible and converges fast enough for the default 20-cycle window.
  std::function<Rat(int)> infinite_schedule;
};

// Parameters of the intersection construction (descending staircase of
// rising blocks, then an ascending merge, then the all-equal stretch).
struct IntersectionParams {
  ExponentSpectrum spectrum;  // must validate
  Rat epsilon = rat(1, 100);
  Rat q_start = 1;
  // Strictly decreasing surrogates for a_1 used when omega_{n-1} is
  // infinite; default 1/(k+2).
  std::function<Rat(int)> pathological_a1;
};

// Derived schedule of one intersection cycle: coefficients a_1..a_{n+1},
// anchors q_0..q_{2n} with q_n = 1, and their normalizations alpha_i =
// a_i/q_0, rho_i = q_i/q_0 (so rho_0 = 1 and rho_{2n} = a_{n+1}/a_1).
struct TemplateSchedule {
  std::vector<Rat> a;
  std::vector<Rat> q_anchor;
  std::vector<Rat> alpha;
  std::vector<Rat> rho;
};

// All components equal to q/(n+1): the maximal-contraction fixed point.
PiecewiseLinearSystem constant_template(int n, const Rat& q0, const Rat& q_max);

// a_1 = 1/(1+w_{n-1}), a_d = 1/(1+w_{n-d}) - 1/(1+w_{n-d+1}) for 2 <= d <= n,
// a_{n+1} = w_0/(1+w_0). Exact; the coefficients always sum to 1. Requires a
// valid spectrum with w_{n-1} finite.
std::vector<Rat> a_coefficients(const ExponentSpectrum& spectrum);

// The intersection pattern needs nondecreasing coefficients (each staircase
// step has length proportional to a_{d+2} - a_{d+1}). Validity of the
// spectrum alone does not guarantee this for n >= 3; see the admissibility
// check below.
bool template_admissible(const std::vector<Rat>& a);

// Anchors from coefficients:
//   q_d     = a_1 + ... + a_d + (n+1-d) a_{d+1}   (0 <= d <= n)
//   q_{n+d} = a_{n+1} + ... + a_{d+2} + (1+d) a_{d+1}   (0 <= d <= n)
// Both give q_n = 1. Throws if the coefficients are not admissible.
TemplateSchedule anchor_schedule(const std::vector<Rat>& a);

// Builds `cycles` full cycles of the single-exponent construction starting
// at q_start. The degenerate omega = (d+1)/(n-d) collapses to the constant
// template. Output always passes validate().
PiecewiseLinearSystem single_exponent_template(const SingleExponentParams& params, int cycles);

// Builds `cycles` full cycles of the intersection construction. Requires a
// valid spectrum whose coefficient vector is nondecreasing (throws a
// domain_error naming the offending pair otherwise; such spectra exist for
// n >= 3 and are outside this construction's domain). The infinite
// omega_{n-1} case runs with per-cycle renormalized coefficients.
PiecewiseLinearSystem intersection_template(const IntersectionParams& params, int cycles);

// Forward-simulated random valid system: at each step, pick a rising block
// admissible for the ordering and junction axioms and a duration capped so
// sortedness is preserved. Valid by construction; still validated by tests.
PiecewiseLinearSystem random_roy_system(std::uint64_t seed, int n, const Rat& q0,
                                        const Rat& q_max, const Rat& mean_interval_length);

// Random spectrum satisfying the transference chain, sampled by walking the
// chain and drawing each exponent from its feasible interval (boundaries
// included). May fall outside the intersection-template domain.
ExponentSpectrum random_valid_spectrum(std::uint64_t seed, int n);

// Random spectrum drawn from the intersection-template domain: a sorted
// positive coefficient vector is sampled directly and inverted. Always valid
// and always admissible.
ExponentSpectrum random_template_spectrum(std::uint64_t seed, int n);

}  // namespace pgn
