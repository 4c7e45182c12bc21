#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgn/contraction.hpp"
#include "pgn/roy_json.hpp"
#include "pgn/templates.hpp"

using namespace pgn;

TEST_CASE("coefficients for the worked spectra") {
  const auto a1 = a_coefficients(validate_spectrum(make_spectrum({ExtRat(rat(1, 2)), ExtRat(Rat(2))})));
  CHECK(a1 == std::vector<Rat>{rat(1, 3), rat(1, 3), rat(1, 3)});
  const auto a2 = a_coefficients(validate_spectrum(make_spectrum({ExtRat(Rat(1)), ExtRat(Rat(3))})));
  CHECK(a2 == std::vector<Rat>{rat(1, 4), rat(1, 4), rat(1, 2)});
  for (int n = 2; n <= 5; ++n) {
    const auto a = a_coefficients(minimal_spectrum(n));
    for (const auto& v : a) CHECK(v == rat(1, n + 1));
  }
}

TEST_CASE("coefficients reject infinite top exponent and invalid spectra") {
  CHECK_THROWS_AS(a_coefficients(validate_spectrum(make_spectrum({ExtRat(Rat(1)), ExtRat::infinity()}))),
                  domain_error);
  CHECK_THROWS_AS(a_coefficients(validate_spectrum(make_spectrum({ExtRat(Rat(2)), ExtRat(Rat(2))}))),
                  domain_error);
}

TEST_CASE("coefficients sum to one; edge coefficients are always ordered") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (int n = 2; n <= 5; ++n) {
      const auto s = random_valid_spectrum(seed * 17 + n, n);
      if (s.omegas[n - 1].is_infinite()) continue;
      const auto a = a_coefficients(s);
      Rat sum(0);
      for (const auto& v : a) sum += v;
      CHECK(sum == 1);
      CHECK(a[0] <= a[1]);                  // a_2 >= a_1 holds for every valid spectrum
      CHECK(a[n - 1] <= a[n]);              // as does a_{n+1} >= a_n
    }
  }
}

TEST_CASE("a valid spectrum can still fall outside the construction domain") {
  // (1, 2, 7) satisfies the transference chain but its coefficient vector
  // (1/8, 5/24, 4/24, 12/24) dips at the third entry, so the staircase
  // pattern would need a negative-length interval.
  const auto s = validate_spectrum(make_spectrum({ExtRat(Rat(1)), ExtRat(Rat(2)), ExtRat(Rat(7))}));
  REQUIRE(s.is_valid());
  const auto a = a_coefficients(s);
  CHECK(a == std::vector<Rat>{rat(1, 8), rat(5, 24), rat(1, 6), rat(1, 2)});
  CHECK_FALSE(template_admissible(a));
  IntersectionParams p;
  p.spectrum = s;
  CHECK_THROWS_WITH_AS(intersection_template(p, 3), doctest::Contains("nondecreasing"),
                       domain_error);
}

TEST_CASE("anchor schedule on the worked coefficient vectors") {
  const auto degenerate = anchor_schedule({rat(1, 3), rat(1, 3), rat(1, 3)});
  for (const auto& q : degenerate.q_anchor) CHECK(q == 1);
  for (const auto& r : degenerate.rho) CHECK(r == 1);

  const auto s = anchor_schedule({rat(1, 4), rat(1, 4), rat(1, 2)});
  CHECK(s.q_anchor == std::vector<Rat>{rat(3, 4), rat(3, 4), Rat(1), Rat(1), rat(3, 2)});
  CHECK(s.rho == std::vector<Rat>{Rat(1), Rat(1), rat(4, 3), rat(4, 3), Rat(2)});
  CHECK(s.alpha == std::vector<Rat>{rat(1, 3), rat(1, 3), rat(2, 3)});
  CHECK(s.rho[4] == s.a[2] / s.a[0]);
}

TEST_CASE("anchor q_n equals one for every admissible vector") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (int n = 1; n <= 5; ++n) {
      const auto spec = random_template_spectrum(seed * 13 + n, n);
      const auto sched = anchor_schedule(a_coefficients(spec));
      CHECK(sched.q_anchor[n] == 1);
      CHECK(sched.rho[0] == 1);
    }
  }
}

TEST_CASE("minimal exponent degenerates to the constant template") {
  SingleExponentParams p;
  p.n = 3;
  p.d = 1;
  p.omega_d = ExtRat(Rat(1));  // (d+1)/(n-d) = 1
  p.epsilon = rat(1, 10);
  const auto sys = single_exponent_template(p, 4);
  REQUIRE(sys.intervals().size() == 1);
  CHECK(sys.intervals()[0].block == SlopeBlock{1, 4});
  CHECK(sys.validate().passed);

  IntersectionParams ip;
  ip.spectrum = make_spectrum({ExtRat(rat(1, 2)), ExtRat(Rat(2))});
  ip.epsilon = rat(1, 10);
  const auto isys = intersection_template(ip, 4);
  REQUIRE(isys.intervals().size() == 1);
  CHECK(isys.intervals()[0].block == SlopeBlock{1, 3});
}

TEST_CASE("single-exponent cycle geometry") {
  SingleExponentParams p;
  p.n = 2;
  p.d = 1;
  p.omega_d = ExtRat(Rat(4));
  p.epsilon = rat(1, 10);
  const auto sys = single_exponent_template(p, 3);
  const auto bps = sys.breakpoints();
  auto has = [&](const Rat& q) {
    for (const auto& b : bps)
      if (b == q) return true;
    return false;
  };
  CHECK(has(Rat(2)));    // Q_1
  CHECK(has(Rat(20)));   // Q_2
  CHECK(has(Rat(40)));   // Q_3
  CHECK(has(Rat(400)));  // Q_4
  CHECK(sys.validate().passed);
}

TEST_CASE("intersection values at the staircase anchors") {
  IntersectionParams p;
  p.spectrum = make_spectrum({ExtRat(Rat(1)), ExtRat(Rat(3))});
  p.epsilon = rat(1, 100);
  const auto sys = intersection_template(p, 3);
  CHECK(sys.validate().passed);
  // Q_2 = 200: pattern on [200, 400], anchor rho_n * Q_2 = 800/3
  const Rat Q = Rat(200);
  const auto v = sys.evaluate(rat(4, 3) * Q);
  CHECK(v[0] == Q / 3);
  CHECK(v[1] == Q / 3);
  CHECK(v[2] == 2 * Q / 3);
  // end of the cycle all components meet at Q_{2k+1}/(n+1)
  const auto w = sys.evaluate(2 * Q);
  for (const auto& x : w) CHECK(x == 2 * Q / 3);
}

TEST_CASE("infinite top exponent runs with per-cycle surrogates") {
  IntersectionParams p;
  p.spectrum = make_spectrum({ExtRat(Rat(1)), ExtRat::infinity()});
  p.epsilon = rat(1, 10);
  const auto sys = intersection_template(p, 6);
  CHECK(sys.validate().passed);
  // Cycle k uses a_1 surrogate 1/(k+2), normalized to 1/(k+3); the anchor
  // of cycle k sits at (k+3)/3 * Q_{2k} and S_1/q there equals 1/(k+3).
  Rat Q(1);
  for (int k = 0; k < 6; ++k) {
    if (k > 0) {  // cycle 0 is degenerate (all coefficients equal)
      const Rat anchor = rat(k + 3, 3) * Q;
      CHECK(sys.partial_sum(1, anchor) / anchor == rat(1, k + 3));
    }
    Q = rat(k + 2, 2) * Q * 10;  // Q_{2k+2} = (k+2)/2 * Q_{2k} / epsilon
  }
}

TEST_CASE("infinite single exponent cycles stay valid and dip lower") {
  SingleExponentParams p;
  p.n = 3;
  p.d = 2;  // minimal value 3 exceeds small surrogates, which must clamp
  p.omega_d = ExtRat::infinity();
  p.epsilon = rat(1, 100);
  const auto sys = single_exponent_template(p, 10);
  CHECK(sys.validate().passed);
  const auto ests = exponent_functionals(sys);
  // the k = n-d functional heads to zero as the surrogates grow
  CHECK(ests[0].liminf_value < rat(1, 50));
}

TEST_CASE("random systems validate and reproduce deterministically") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const auto sys = random_roy_system(seed, n, rat(seed % 3, 2), Rat(40), Rat(2));
    CHECK(sys.validate().passed);
    CHECK(sys.q_max() == Rat(40));
  }
  const auto a = random_roy_system(99, 3, Rat(0), Rat(30), Rat(1));
  const auto b = random_roy_system(99, 3, Rat(0), Rat(30), Rat(1));
  CHECK(to_json(a) == to_json(b));
  const auto c = random_roy_system(100, 3, Rat(0), Rat(30), Rat(1));
  CHECK(to_json(a) != to_json(c));
}

TEST_CASE("random spectra validate; template-domain spectra are admissible") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (int n = 2; n <= 5; ++n) {
      CHECK(random_valid_spectrum(seed * 31 + n, n).is_valid());
      const auto t = random_template_spectrum(seed * 31 + n, n);
      CHECK(t.is_valid());
      CHECK(template_admissible(a_coefficients(t)));
    }
  }
}

TEST_CASE("full staircase state at every anchor of a strict-coefficient run") {
  // a = (1/10, 2/10, 3/10, 4/10) inverts to the n = 3 spectrum
  // (2/3, 7/3, 9); every anchor state follows the alpha pattern exactly.
  const auto spectrum =
      validate_spectrum(make_spectrum({ExtRat(rat(2, 3)), ExtRat(rat(7, 3)), ExtRat(Rat(9))}));
  REQUIRE(spectrum.is_valid());
  const auto a = a_coefficients(spectrum);
  REQUIRE(a == std::vector<Rat>{rat(1, 10), rat(1, 5), rat(3, 10), rat(2, 5)});
  const auto sched = anchor_schedule(a);
  IntersectionParams p;
  p.spectrum = spectrum;
  p.epsilon = rat(1, 50);
  const auto sys = intersection_template(p, 3);
  REQUIRE(sys.validate().passed);

  const int n = 3;
  Rat Q(1);
  for (int cycle = 0; cycle < 3; ++cycle) {
    for (int d = 0; d <= n; ++d) {
      // end of descending stage d: P_i = alpha_i Q below, alpha_{d+1} Q above
      const auto v = sys.evaluate(sched.rho[d] * Q);
      for (int i = 1; i <= d; ++i) CHECK(v[i - 1] == sched.alpha[i - 1] * Q);
      for (int i = d + 1; i <= n + 1; ++i) CHECK(v[i - 1] == sched.alpha[d] * Q);
    }
    for (int d = 0; d <= n; ++d) {
      // ascending stage d: the lowest d+1 components have merged at alpha_{d+1} Q
      const auto v = sys.evaluate(sched.rho[n + d] * Q);
      for (int i = 1; i <= d + 1; ++i) CHECK(v[i - 1] == sched.alpha[d] * Q);
      for (int i = d + 1; i <= n + 1; ++i) CHECK(v[i - 1] == sched.alpha[i - 1] * Q);
    }
    Q = sched.rho[2 * n] * Q * 50;  // next Q_{2k}
  }
}

TEST_CASE("parameter validation rejects out-of-range input") {
  SingleExponentParams p;
  p.n = 2;
  p.d = 1;
  p.omega_d = ExtRat(Rat(4));
  p.epsilon = Rat(1);
  CHECK_THROWS_AS(single_exponent_template(p, 5), domain_error);  // epsilon not in (0,1)
  p.epsilon = rat(1, 10);
  CHECK_THROWS_AS(single_exponent_template(p, 0), domain_error);  // no cycles
  p.d = 2;
  CHECK_THROWS_AS(single_exponent_template(p, 5), domain_error);  // d out of range
  p.d = 1;
  p.omega_d = ExtRat(Rat(1));
  CHECK_THROWS_AS(single_exponent_template(p, 5), domain_error);  // below (d+1)/(n-d)
  p.omega_d = ExtRat(Rat(4));
  p.q_start = Rat(0);
  CHECK_THROWS_AS(single_exponent_template(p, 5), domain_error);

  IntersectionParams ip;
  ip.spectrum = make_spectrum({ExtRat(Rat(2)), ExtRat(Rat(2))});
  CHECK_THROWS_AS(intersection_template(ip, 5), domain_error);  // invalid spectrum

  CHECK_THROWS_AS(random_roy_system(1, 0, Rat(0), Rat(10), Rat(1)), domain_error);
  CHECK_THROWS_AS(random_roy_system(1, 2, Rat(5), Rat(5), Rat(1)), domain_error);
  CHECK_THROWS_AS(random_roy_system(1, 2, Rat(0), Rat(10), Rat(0)), domain_error);
}

TEST_CASE("generated templates validate across a small grid") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 0; d < n; ++d)
      for (const ExtRat& w : {ExtRat(minimal_exponent(n, d)),
                              ExtRat(Rat(minimal_exponent(n, d) + 1)), ExtRat::infinity()}) {
        SingleExponentParams p;
        p.n = n;
        p.d = d;
        p.omega_d = w;
        p.epsilon = rat(1, 50);
        CHECK(single_exponent_template(p, 8).validate().passed);
      }
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (int n = 2; n <= 4; ++n) {
      IntersectionParams p;
      p.spectrum = random_template_spectrum(seed * 7 + n, n);
      p.epsilon = rat(1, 50);
      CHECK(intersection_template(p, 8).validate().passed);
    }
}
