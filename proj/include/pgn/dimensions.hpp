#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgn/rational.hpp"

namespace pgn {

enum class SpectrumValidity { unchecked, valid, invalid };

// Full exponent tuple (omega_0, ..., omega_{n-1}). Valid when omega_0 >= 1/n
// and every consecutive pair satisfies the going-up and going-down
// transference inequalities (the left side degenerates to d at infinity).
struct ExponentSpectrum {
  int n = 0;
  std::vector<ExtRat> omegas;
  SpectrumValidity validity = SpectrumValidity::unchecked;
  std::string violation;  // first violated constraint when invalid

  bool is_valid() const { return validity == SpectrumValidity::valid; }
};

ExponentSpectrum make_spectrum(std::vector<ExtRat> omegas);

// Smallest admissible omega_d: (d+1)/(n-d).
Rat minimal_exponent(int n, int d);
ExponentSpectrum minimal_spectrum(int n);

// Checks omega_0 >= 1/n and, for d = 1..n-1,
//   d*w_d/(w_d+d+1) <= w_{d-1} <= ((n-d)*w_d - 1)/(n-d+1),
// recording the first violation. Invalidity is data, not an error.
ExponentSpectrum validate_spectrum(ExponentSpectrum spectrum);

struct PartialSpectrum {
  int n = 0;
  std::map<int, ExtRat> assigned;  // index d -> omega_d, nonempty
};

struct DimensionResult {
  Rat hausdorff;
  Rat packing;
  bool full_hausdorff = false;
  std::optional<ExponentSpectrum> completion;
};

// Hausdorff dimension d + (n+1)/(1+omega_d) of the single-exponent set
// (equal to d at infinity); packing dimension is n. Requires
// omega_d >= (d+1)/(n-d).
DimensionResult hausdorff_single(int n, int d, const ExtRat& omega_d);

// Hausdorff dimension 2 * sum_d 1/(1+omega_d) of the full intersection;
// packing dimension n. Requires a valid spectrum.
DimensionResult hausdorff_intersection(const ExponentSpectrum& spectrum);

// Closed form n(2+w_0+w_{n-1}) / ((1+w_0)(1+w_{n-1})) for the two-exponent
// intersection. Requires the pair to extend to a valid spectrum. Note that
// away from the transference boundary (n >= 3) this closed form can fall
// below the completion-based evaluator; they agree for n = 2 and for pairs
// with one transference inequality tight.
Rat hausdorff_pair(int n, const ExtRat& omega_0, const ExtRat& omega_last);

// Fills every unassigned index with the largest reciprocal 1/(1+omega)
// allowed by the pairwise transference bounds from the assigned indices
// (maximizing the dimension), then evaluates the intersection formula on
// the realized spectrum. The completion is reported and revalidated.
// Throws domain_error naming the offending pair when bounds cross.
DimensionResult optimal_completion(const PartialSpectrum& partial);

}  // namespace pgn
