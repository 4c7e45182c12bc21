#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgn/contraction.hpp"
#include "pgn/templates.hpp"

using namespace pgn;

namespace {

PiecewiseLinearSystem fig_single(int cycles, const Rat& epsilon) {
  SingleExponentParams p;
  p.n = 2;
  p.d = 1;
  p.omega_d = ExtRat(Rat(4));
  p.epsilon = epsilon;
  return single_exponent_template(p, cycles);
}

PiecewiseLinearSystem fig_intersection(const Rat& epsilon, int cycles) {
  IntersectionParams p;
  p.spectrum = make_spectrum({ExtRat(Rat(1)), ExtRat(Rat(3))});
  p.epsilon = epsilon;
  return intersection_template(p, cycles);
}

}  // namespace

TEST_CASE("constant template has maximal rate everywhere") {
  const auto sys = constant_template(3, Rat(1), Rat(100));
  CHECK(local_rate(sys, 0) == 3);
  CHECK(local_rate_at(sys, Rat(7)) == 3);
  CHECK_THROWS_AS(local_rate_at(sys, Rat(1)), domain_error);  // breakpoint
  CHECK(average_rate(sys, Rat(50)) == Rat(3));
  const auto ex = rate_extrema(sys);
  CHECK(ex.lower == Rat(3));
  CHECK(ex.upper == Rat(3));
}

TEST_CASE("single-exponent pattern rates per phase") {
  const auto sys = fig_single(2, rat(1, 10));
  // phases of cycle 0: [1, 5/3] rate d = 1, [5/3, 2] rate n = 2, [2, 20] rate 2
  CHECK(local_rate_at(sys, rat(4, 3)) == 1);
  CHECK(local_rate_at(sys, rat(11, 6)) == 2);
  CHECK(local_rate_at(sys, Rat(10)) == 2);
}

TEST_CASE("intersection pattern rates per phase") {
  const auto sys = fig_intersection(rat(1, 100), 2);
  // cycle 0 on [1, 2]: descending stage d=1 has rate n-1-d = 0, then maximal
  CHECK(local_rate_at(sys, rat(7, 6)) == 0);
  CHECK(local_rate_at(sys, rat(5, 3)) == 2);
  CHECK(local_rate_at(sys, Rat(50)) == 2);
}

TEST_CASE("running average is exact") {
  const auto sys = fig_single(3, rat(1, 10));
  CHECK(average_rate(sys, rat(5, 3)) == Rat(1));
  CHECK(average_rate(sys, Rat(2)) == rat(4, 3));
  CHECK(average_rate(sys, Rat(20)) == rat(112, 57));
  CHECK(average_rate(sys, rat(100, 3)) == rat(152, 97));
  CHECK(average_rate(sys, Rat(40)) == rat(64, 39));
  CHECK(average_rate(sys, Rat(400)) == rat(112, 57));
  CHECK_THROWS_AS(average_rate(sys, Rat(1)), domain_error);
  CHECK_THROWS_AS(average_rate(sys, Rat(0)), domain_error);
}

TEST_CASE("average moves toward the local rate between breakpoints") {
  const auto sys = fig_intersection(rat(1, 100), 6);
  RateProfile profile(sys);
  const auto& segs = profile.segments();
  for (std::size_t i = 1; i + 1 < segs.size(); ++i) {
    const Rat at_start = profile.average(segs[i].q_start);
    const Rat at_end = profile.average(segs[i].q_end);
    if (at_start < segs[i].delta) CHECK(at_end >= at_start);
    if (at_start > segs[i].delta) CHECK(at_end <= at_start);
  }
}

TEST_CASE("rate extrema approach the dip and ceiling values") {
  const auto sys = fig_single(20, rat(1, 1000));
  const auto ex = rate_extrema(sys);
  // dip target d + (n+1)/(1+omega) = 1 + 3/5, ceiling target n = 2
  CHECK(abs(ex.lower - rat(8, 5)) < rat(1, 20));
  CHECK(abs(ex.upper - Rat(2)) < rat(1, 20));
  CHECK_FALSE(ex.lower_anchors.empty());
  CHECK_FALSE(ex.upper_anchors.empty());
}

TEST_CASE("tail estimates stabilize between the 50% and 25% windows") {
  const auto sys = fig_intersection(rat(1, 100), 20);
  const auto half = rate_extrema(sys, rat(1, 2));
  const auto quarter = rate_extrema(sys, rat(1, 4));
  // residual disagreement comes from the earliest cycles the wider window sees
  const Rat tol = 1 / half.tail_start;
  CHECK(abs(half.lower - quarter.lower) <= tol);
  CHECK(abs(half.upper - quarter.upper) <= tol);
}

TEST_CASE("local rates stay within [0, n] on random systems") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const auto sys = random_roy_system(seed * 11 + 5, n, Rat(0), Rat(20), Rat(1));
    for (std::size_t i = 0; i < sys.intervals().size(); ++i) {
      CHECK(local_rate(sys, i) >= 0);
      CHECK(local_rate(sys, i) <= n);
    }
  }
}

TEST_CASE("constant template functionals sit at the fixed point") {
  const auto sys = constant_template(3, Rat(1), Rat(1000));
  const auto ests = exponent_functionals(sys);
  REQUIRE(ests.size() == 3);
  for (const auto& est : ests) {
    CHECK(est.liminf_value == rat(est.k, 4));
    CHECK(est.limsup_value == rat(est.k, 4));
    CHECK(est.inferred_omega == ExtRat(rat(4 - est.k, est.k)));
    CHECK(est.inferred_omega_hat == ExtRat(rat(4 - est.k, est.k)));
  }
}

TEST_CASE("intersection functionals recover the spectrum exactly") {
  const auto sys = fig_intersection(rat(1, 100), 12);
  const auto ests = exponent_functionals(sys);
  REQUIRE(ests.size() == 2);
  // k = 1 sees omega_{n-1} = 3, k = 2 sees omega_0 = 1
  CHECK(ests[0].liminf_value == rat(1, 4));
  CHECK(ests[0].limsup_value == rat(1, 3));
  CHECK(ests[0].inferred_omega == ExtRat(Rat(3)));
  CHECK(ests[0].inferred_omega_hat == ExtRat(Rat(2)));  // uniform exponent = n
  CHECK(ests[1].liminf_value == rat(1, 2));
  CHECK(ests[1].limsup_value == rat(2, 3));
  CHECK(ests[1].inferred_omega == ExtRat(Rat(1)));
  CHECK(ests[1].inferred_omega_hat == ExtRat(rat(1, 2)));
  // liminf anchors sit at the rho_n * Q_{2k} junctions, where the values
  // are exact; spot-check one against direct evaluation
  REQUIRE_FALSE(ests[0].liminf_anchors.empty());
  const Rat anchor = ests[0].liminf_anchors.front();
  CHECK(sys.partial_sum(1, anchor) / anchor == rat(1, 4));
}

TEST_CASE("single-exponent functionals recover omega at the dips") {
  const auto sys = fig_single(12, rat(1, 100));
  const auto ests = exponent_functionals(sys);
  // k = n-d = 1: liminf exactly 1/(1+4)
  CHECK(ests[0].liminf_value == rat(1, 5));
  CHECK(ests[0].inferred_omega == ExtRat(Rat(4)));
  CHECK(ests[0].limsup_value == rat(1, 3));
  CHECK(ests[1].limsup_value == rat(2, 3));
}
