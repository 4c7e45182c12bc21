#include "pgn/dimensions.hpp"

#include <algorithm>

namespace pgn {

namespace {

std::string omega_name(int d) { return "omega_" + std::to_string(d); }

}  // namespace

ExponentSpectrum make_spectrum(std::vector<ExtRat> omegas) {
  ExponentSpectrum s;
  s.n = static_cast<int>(omegas.size());
  s.omegas = std::move(omegas);
  return s;
}

Rat minimal_exponent(int n, int d) {
  if (n < 1 || d < 0 || d >= n) throw domain_error("exponent index out of range");
  return rat(d + 1, n - d);
}

ExponentSpectrum minimal_spectrum(int n) {
  std::vector<ExtRat> w;
  w.reserve(n);
  for (int d = 0; d < n; ++d) w.emplace_back(minimal_exponent(n, d));
  return validate_spectrum(make_spectrum(std::move(w)));
}

ExponentSpectrum validate_spectrum(ExponentSpectrum s) {
  s.validity = SpectrumValidity::valid;
  s.violation.clear();
  auto fail = [&s](std::string why) {
    if (s.validity == SpectrumValidity::valid) {
      s.validity = SpectrumValidity::invalid;
      s.violation = std::move(why);
    }
  };

  if (s.n < 1 || static_cast<int>(s.omegas.size()) != s.n) {
    fail("spectrum needs n >= 1 exponents");
    return s;
  }
  for (int d = 0; d < s.n; ++d)
    if (!s.omegas[d].is_infinite() && s.omegas[d].value() < 0) {
      fail(omega_name(d) + " < 0");
      return s;
    }

  if (!s.omegas[0].is_infinite() && s.omegas[0].value() < rat(1, s.n))
    fail(omega_name(0) + " < 1/n");

  for (int d = 1; d < s.n; ++d) {
    const ExtRat& wd = s.omegas[d];
    const ExtRat& wprev = s.omegas[d - 1];
    // going up: d*w_d/(w_d+d+1) <= w_{d-1}, left side = d at infinity
    const ExtRat up_lhs = wd.is_infinite() ? ExtRat(Rat(d))
                                           : ExtRat(Rat(d) * wd.value() / (wd.value() + d + 1));
    if (wprev < up_lhs)
      fail("going-up fails at d=" + std::to_string(d) + ": " + omega_name(d - 1) + " < " +
           to_string(up_lhs));
    // going down: w_{d-1} <= ((n-d)*w_d - 1)/(n-d+1), right side = inf at infinity
    if (!wd.is_infinite()) {
      const Rat down_rhs = (Rat(s.n - d) * wd.value() - 1) / Rat(s.n - d + 1);
      if (ExtRat(down_rhs) < wprev)
        fail("going-down fails at d=" + std::to_string(d) + ": " + omega_name(d - 1) + " > " +
             to_fraction_string(down_rhs));
    }
  }
  return s;
}

DimensionResult hausdorff_single(int n, int d, const ExtRat& omega_d) {
  const Rat minimal = minimal_exponent(n, d);
  if (omega_d < ExtRat(minimal))
    throw domain_error(omega_name(d) + " below its minimal value " + to_fraction_string(minimal));
  DimensionResult r;
  r.hausdorff = Rat(d) + Rat(n + 1) * reciprocal_one_plus(omega_d);
  r.packing = Rat(n);
  r.full_hausdorff = omega_d == ExtRat(minimal);
  return r;
}

DimensionResult hausdorff_intersection(const ExponentSpectrum& spectrum) {
  if (!spectrum.is_valid())
    throw domain_error("intersection dimension requires a valid spectrum" +
                       (spectrum.violation.empty() ? std::string()
                                                   : " (" + spectrum.violation + ")"));
  DimensionResult r;
  Rat sum(0);
  bool full = true;
  for (int d = 0; d < spectrum.n; ++d) {
    sum += reciprocal_one_plus(spectrum.omegas[d]);
    full = full && spectrum.omegas[d] == ExtRat(minimal_exponent(spectrum.n, d));
  }
  r.hausdorff = 2 * sum;
  r.packing = Rat(spectrum.n);
  r.full_hausdorff = full;
  return r;
}

Rat hausdorff_pair(int n, const ExtRat& omega_0, const ExtRat& omega_last) {
  if (n < 2) throw domain_error("two-exponent intersection needs n >= 2");
  PartialSpectrum p;
  p.n = n;
  p.assigned[0] = omega_0;
  p.assigned[n - 1] = omega_last;
  optimal_completion(p);  // feasibility gate; throws when the pair cannot extend
  const Rat x0 = reciprocal_one_plus(omega_0);
  const Rat xl = reciprocal_one_plus(omega_last);
  return Rat(n) * (x0 + xl);
}

DimensionResult optimal_completion(const PartialSpectrum& partial) {
  const int n = partial.n;
  if (n < 1) throw domain_error("partial spectrum needs n >= 1");
  if (partial.assigned.empty()) throw domain_error("partial spectrum needs at least one exponent");

  // Work with the reciprocals x_d = 1/(1+omega_d); the transference bounds
  // are affine there and infinity maps to 0.
  std::vector<Rat> x(n, Rat(0));
  std::vector<bool> fixed(n, false);
  for (const auto& [d, w] : partial.assigned) {
    if (d < 0 || d >= n) throw domain_error("assigned index out of range");
    if (w < ExtRat(minimal_exponent(n, d)))
      throw domain_error(omega_name(d) + " infeasible: below minimal value " +
                         to_fraction_string(minimal_exponent(n, d)));
    x[d] = reciprocal_one_plus(w);
    fixed[d] = true;
  }

  // Pairwise feasibility between assigned indices d < d':
  //   x_{d'} <= (n-d')/(n-d) * x_d  and  x_d <= (d'-d)/(d'+1) + (d+1)/(d'+1) * x_{d'}.
  for (auto it = partial.assigned.begin(); it != partial.assigned.end(); ++it)
    for (auto jt = std::next(it); jt != partial.assigned.end(); ++jt) {
      const int d = it->first, dp = jt->first;
      const Rat down = rat(n - dp, n - d) * x[d];
      const Rat up = rat(dp - d, dp + 1) + rat(d + 1, dp + 1) * x[dp];
      if (x[dp] > down || x[d] > up)
        throw domain_error("infeasible pair (" + omega_name(d) + ", " + omega_name(dp) +
                           "): transference bounds cross");
    }

  // Free indices take the largest reciprocal below every applicable bound.
  for (int m = 0; m < n; ++m) {
    if (fixed[m]) continue;
    Rat best = rat(n - m, n + 1);  // minimal-exponent ceiling for this index
    for (const auto& [d, w] : partial.assigned) {
      (void)w;
      const Rat bound = d < m ? Rat(rat(n - m, n - d) * x[d])
                              : Rat(rat(d - m, d + 1) + rat(m + 1, d + 1) * x[d]);
      best = std::min(best, bound);
    }
    x[m] = best;
  }

  std::vector<ExtRat> omegas;
  omegas.reserve(n);
  for (int d = 0; d < n; ++d) omegas.push_back(omega_from_reciprocal(x[d]));
  ExponentSpectrum completion = validate_spectrum(make_spectrum(std::move(omegas)));
  if (!completion.is_valid())
    throw domain_error("completion infeasible: " + completion.violation);

  DimensionResult r = hausdorff_intersection(completion);
  r.completion = std::move(completion);
  return r;
}

}  // namespace pgn
