#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgn/dimensions.hpp"
#include "pgn/templates.hpp"

using namespace pgn;

namespace {

ExponentSpectrum spec2(const ExtRat& w0, const ExtRat& w1) {
  return validate_spectrum(make_spectrum({w0, w1}));
}

}  // namespace

TEST_CASE("transference chain validation on worked pairs") {
  CHECK(spec2(ExtRat(rat(1, 2)), ExtRat(Rat(2))).is_valid());
  CHECK_FALSE(spec2(ExtRat(Rat(2)), ExtRat(Rat(2))).is_valid());
  // omega_1 = 2 pins omega_0 to exactly 1/2
  CHECK_FALSE(spec2(ExtRat(rat(49, 100)), ExtRat(Rat(2))).is_valid());
  CHECK_FALSE(spec2(ExtRat(rat(51, 100)), ExtRat(Rat(2))).is_valid());
  CHECK(validate_spectrum(make_spectrum({ExtRat(rat(1, 3)), ExtRat(Rat(1)), ExtRat(Rat(3))}))
            .is_valid());
  CHECK_FALSE(validate_spectrum(make_spectrum({ExtRat(rat(1, 4))})).is_valid());  // below 1/n
}

TEST_CASE("infinite exponents propagate through the chain") {
  CHECK(spec2(ExtRat(Rat(1)), ExtRat::infinity()).is_valid());
  CHECK(spec2(ExtRat::infinity(), ExtRat::infinity()).is_valid());
  // an infinite lower exponent forces the upper one to be infinite too
  CHECK_FALSE(spec2(ExtRat::infinity(), ExtRat(Rat(5))).is_valid());
  // going-up left side is d at infinity: omega_0 must reach d = 1
  CHECK(spec2(ExtRat(Rat(1)), ExtRat::infinity()).is_valid());
  CHECK_FALSE(spec2(ExtRat(rat(99, 100)), ExtRat::infinity()).is_valid());
}

TEST_CASE("one minimal exponent forces the whole minimal spectrum") {
  for (int n = 2; n <= 5; ++n) {
    const auto base = minimal_spectrum(n);
    CHECK(base.is_valid());
    for (int d = 0; d < n; ++d) {
      auto bumped = base;
      bumped.omegas[d] = ExtRat(Rat(bumped.omegas[d].value() + 1));
      CHECK_FALSE(validate_spectrum(bumped).is_valid());
    }
  }
}

TEST_CASE("single-set dimension formula") {
  const auto jb = hausdorff_single(1, 0, ExtRat(Rat(1)));
  CHECK(jb.hausdorff == Rat(1));
  CHECK(jb.full_hausdorff);
  const auto mid = hausdorff_single(2, 1, ExtRat(Rat(4)));
  CHECK(mid.hausdorff == rat(8, 5));
  CHECK(mid.packing == Rat(2));
  CHECK_FALSE(mid.full_hausdorff);
  const auto inf = hausdorff_single(3, 1, ExtRat::infinity());
  CHECK(inf.hausdorff == Rat(1));
  CHECK(inf.packing == Rat(3));
  CHECK_THROWS_AS(hausdorff_single(2, 1, ExtRat(Rat(1))), domain_error);  // below (d+1)/(n-d)
}

TEST_CASE("intersection dimension formula") {
  for (int n = 2; n <= 5; ++n) {
    const auto full = hausdorff_intersection(minimal_spectrum(n));
    CHECK(full.hausdorff == Rat(n));
    CHECK(full.full_hausdorff);
  }
  const auto r = hausdorff_intersection(spec2(ExtRat(Rat(1)), ExtRat(Rat(3))));
  CHECK(r.hausdorff == rat(3, 2));
  CHECK(r.packing == Rat(2));
  const auto boundary = hausdorff_intersection(spec2(ExtRat(rat(1, 2)), ExtRat(Rat(2))));
  CHECK(boundary.hausdorff == Rat(2));
  CHECK_THROWS_AS(hausdorff_intersection(make_spectrum({ExtRat(Rat(1)), ExtRat(Rat(3))})),
                  domain_error);  // unchecked spectra are rejected
}

TEST_CASE("two-exponent closed form on worked pairs") {
  CHECK(hausdorff_pair(2, ExtRat(rat(1, 2)), ExtRat(Rat(2))) == Rat(2));
  CHECK(hausdorff_pair(3, ExtRat(rat(1, 3)), ExtRat(Rat(3))) == Rat(3));
  CHECK_THROWS_AS(hausdorff_pair(3, ExtRat(Rat(10)), ExtRat(Rat(3))), domain_error);
}

TEST_CASE("pair value stays below both single-set dimensions") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto s = random_valid_spectrum(seed, n);
    if (s.omegas[0].is_infinite() || s.omegas[n - 1].is_infinite()) continue;
    const Rat v = hausdorff_pair(n, s.omegas[0], s.omegas[n - 1]);
    const Rat upper0 = Rat(n + 1) * reciprocal_one_plus(s.omegas[0]);
    const Rat upper_last = Rat(n - 1) + Rat(n + 1) * reciprocal_one_plus(s.omegas[n - 1]);
    CHECK(v <= upper0);
    CHECK(v <= upper_last);
  }
}

TEST_CASE("completion collapses to the single-set formula on singletons") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 0; d < n; ++d)
      for (const ExtRat& w :
           {ExtRat(minimal_exponent(n, d)), ExtRat(Rat(minimal_exponent(n, d) + rat(1, 3))),
            ExtRat(Rat(minimal_exponent(n, d) + 2)), ExtRat(Rat(9)), ExtRat::infinity()}) {
        PartialSpectrum p;
        p.n = n;
        p.assigned[d] = w;
        const auto filled = optimal_completion(p);
        const auto direct = hausdorff_single(n, d, w);
        CHECK(filled.hausdorff == direct.hausdorff);
        REQUIRE(filled.completion.has_value());
        CHECK(filled.completion->is_valid());
      }
}

TEST_CASE("completion on full assignments reproduces the intersection formula") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto s = random_valid_spectrum(seed * 3 + 1, n);
    PartialSpectrum p;
    p.n = n;
    for (int d = 0; d < n; ++d) p.assigned[d] = s.omegas[d];
    CHECK(optimal_completion(p).hausdorff == hausdorff_intersection(s).hausdorff);
  }
}

TEST_CASE("completion matches the pair closed form for n = 2 and tight pairs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = random_valid_spectrum(seed * 5 + 2, 2);
    if (s.omegas[1].is_infinite()) continue;
    PartialSpectrum p;
    p.n = 2;
    p.assigned[0] = s.omegas[0];
    p.assigned[1] = s.omegas[1];
    CHECK(optimal_completion(p).hausdorff == hausdorff_pair(2, s.omegas[0], s.omegas[1]));
  }
  // n = 3 pair sitting on the going-down boundary: x_{n-1} = x_0 / n
  PartialSpectrum tight;
  tight.n = 3;
  tight.assigned[0] = ExtRat(Rat(1));   // x_0 = 1/2
  tight.assigned[2] = ExtRat(Rat(5));   // x_2 = 1/6 = x_0/3
  CHECK(optimal_completion(tight).hausdorff ==
        hausdorff_pair(3, ExtRat(Rat(1)), ExtRat(Rat(5))));
}

TEST_CASE("off the transference boundary the completion exceeds the pair closed form") {
  // Assigned (omega_0, omega_2) = (1, 7) for n = 3: the largest valid
  // interior reciprocal gives the spectrum (1, 2, 7), whose intersection
  // dimension 23/12 exceeds the closed form's 15/8.
  PartialSpectrum loose;
  loose.n = 3;
  loose.assigned[0] = ExtRat(Rat(1));
  loose.assigned[2] = ExtRat(Rat(7));
  const auto r = optimal_completion(loose);
  CHECK(r.hausdorff == rat(23, 12));
  REQUIRE(r.completion.has_value());
  CHECK(r.completion->is_valid());
  CHECK(r.completion->omegas[1] == ExtRat(Rat(2)));
  CHECK(hausdorff_pair(3, ExtRat(Rat(1)), ExtRat(Rat(7))) == rat(15, 8));
}

TEST_CASE("infeasible assignments name the crossing pair") {
  PartialSpectrum p;
  p.n = 3;
  p.assigned[0] = ExtRat(Rat(10));
  p.assigned[2] = ExtRat(Rat(3));
  CHECK_THROWS_WITH_AS(optimal_completion(p), doctest::Contains("omega_0, omega_2"),
                       domain_error);
}

TEST_CASE("intersection dimension decreases in every exponent") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200 && checked < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto s = random_valid_spectrum(seed, n);
    for (int d = 0; d < n; ++d) {
      if (s.omegas[d].is_infinite()) continue;
      auto bumped = s;
      bumped.omegas[d] = ExtRat(Rat(bumped.omegas[d].value() + rat(1, 7)));
      bumped = validate_spectrum(bumped);
      if (!bumped.is_valid()) continue;
      CHECK(hausdorff_intersection(bumped).hausdorff <
            hausdorff_intersection(s).hausdorff);
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("dimension results stay inside [0, n] with hausdorff below packing") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto r = hausdorff_intersection(random_valid_spectrum(seed * 11, n));
    CHECK(r.hausdorff >= 0);
    CHECK(r.hausdorff <= r.packing);
    CHECK(r.packing == Rat(n));
  }
}
