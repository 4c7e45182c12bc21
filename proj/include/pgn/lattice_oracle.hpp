#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgn/rational.hpp"

namespace pgn::oracle {

// Unit direction vector in R^{n+1}. The convex-body minima are invariant
// under coordinate permutation and global sign, so the enumeration kernel
// internally rotates the largest coordinate to the front (this also covers
// inputs with a zero leading coordinate) and flips the sign; witnesses are
// reported in the original coordinates.
struct DirectionVector {
  std::vector<double> u;

  static DirectionVector from_u(std::vector<double> raw);
  static DirectionVector from_theta(const std::vector<double>& theta);  // lifts (1, theta)
  int n() const { return static_cast<int>(u.size()) - 1; }
};

struct OracleOptions {
  long long initial_radius = 8;
  long long radius_cap = 4096;
  double float_tol = 1e-9;
};

// Successive minima of {x : |x|_2 <= 1, |x.u| <= e^-q} scaled to dilation
// factors: lambda(x) = max(|x|_2, e^q |x.u|), minimized greedily over
// linearly independent integer vectors.
struct MinimaPoint {
  double q = 0;
  std::vector<double> lambdas;                 // lambda_1 <= ... <= lambda_{n+1}
  std::vector<double> L;                       // log lambda_d
  std::vector<std::vector<long long>> witnesses;  // linearly independent
  long long radius_used = 0;
  bool radius_capped = false;
};

// Exhaustive within a certified box: every nonzero integer point with
// lambda <= R satisfies |x|_inf <= R and |x.u| <= R e^-q, so enumerating
// that slab and doubling R until n+1 independent witnesses appear inside
// it is complete (anything outside has euclidean norm, hence lambda,
// beyond lambda_{n+1}). Ties are broken by lexicographic witness order.
// Hitting the radius cap returns the partial result flagged.
MinimaPoint successive_minima(const DirectionVector& u, double q, const OracleOptions& opts = {});

struct MinimaTrajectory {
  DirectionVector u;
  std::vector<MinimaPoint> points;
  bool any_capped = false;
};

// Grid 0, step, ..., q_max with warm-started radii. Each L_d must be
// nondecreasing and 1-Lipschitz along the grid (the body only shrinks, at
// unit rate in one direction); violations beyond float_tol indicate a
// kernel bug and throw.
MinimaTrajectory trajectory(const DirectionVector& u, double q_max, double step,
                            const OracleOptions& opts = {});

struct EmpiricalExponent {
  int k = 0;
  double liminf_value = 0;
  double limsup_value = 0;
  double omega = 0;      // 1/liminf - 1; +infinity when the estimate is <= 0
  double omega_hat = 0;  // 1/limsup - 1
  std::string note;      // finite-horizon annotation
};

// Tail extrema of (L_1 + ... + L_k)(q)/q over the sampled grid, for
// k = 1..n; the inferred exponents correspond to index n-k and carry an
// O(1/q) finite-horizon error. Requires at least 50 grid points.
std::vector<EmpiricalExponent> empirical_exponents(const MinimaTrajectory& traj,
                                                   double tail_fraction);

}  // namespace pgn::oracle
