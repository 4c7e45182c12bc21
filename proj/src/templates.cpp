#include "pgn/templates.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace pgn {

namespace {

// Accumulates intervals left to right, merging consecutive intervals that
// share a block so the stored intervals are maximal linearity intervals.
class SystemBuilder {
 public:
  SystemBuilder(int n_plus_1, Rat q0, std::vector<Rat> initial)
      : n_plus_1_(n_plus_1), q0_(std::move(q0)), q_(q0_), values_(std::move(initial)),
        initial_(values_) {}

  const Rat& q() const { return q_; }
  const std::vector<Rat>& values() const { return values_; }

  void advance(SlopeBlock block, const Rat& dq) {
    if (dq == 0) return;
    if (dq < 0) throw domain_error("template schedule produced a negative-length interval");
    if (!intervals_.empty() && intervals_.back().block == block)
      intervals_.back().q_end += dq;
    else
      intervals_.push_back({q_, q_ + dq, block});
    const Rat rise = block.slope() * dq;
    for (int c = block.lo; c <= block.hi; ++c) values_[c - 1] += rise;
    q_ += dq;
  }

  PiecewiseLinearSystem build() {
    return PiecewiseLinearSystem(n_plus_1_, q0_, initial_, std::move(intervals_));
  }

 private:
  int n_plus_1_;
  Rat q0_;
  Rat q_;
  std::vector<Rat> values_;
  std::vector<Rat> initial_;
  std::vector<LinearityInterval> intervals_;
};

std::vector<Rat> all_equal_start(int n_plus_1, const Rat& q0) {
  return std::vector<Rat>(n_plus_1, q0 / n_plus_1);
}

void check_epsilon(const Rat& epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) throw domain_error("epsilon must lie in (0, 1)");
}

Rat default_infinite_exponent(int k, const Rat& minimal) {
  return std::max(Rat(Rat(k + 2) * (k + 2)), minimal);
}

// Coefficient vector for one pathological cycle: a_1 replaced by a
// decreasing surrogate, higher coefficients floored at it, renormalized.
std::vector<Rat> pathological_coefficients(const std::vector<Rat>& base, const Rat& a1k) {
  std::vector<Rat> a(base.size());
  a[0] = a1k;
  for (std::size_t d = 1; d < base.size(); ++d) a[d] = std::max(base[d], a[d - 1]);
  Rat sum(0);
  for (const auto& v : a) sum += v;
  for (auto& v : a) v /= sum;
  return a;
}

void emit_intersection_cycle(SystemBuilder& builder, const TemplateSchedule& sched, const Rat& Q) {
  const int n = static_cast<int>(sched.a.size()) - 1;
  for (int d = 0; d < n; ++d)
    builder.advance({d + 2, n + 1}, (sched.rho[d + 1] - sched.rho[d]) * Q);
  for (int d = 0; d < n; ++d)
    builder.advance({1, d + 1}, (sched.rho[n + d + 1] - sched.rho[n + d]) * Q);
}

}  // namespace

PiecewiseLinearSystem constant_template(int n, const Rat& q0, const Rat& q_max) {
  if (n < 1) throw domain_error("constant template needs n >= 1");
  if (!(q_max > q0)) throw domain_error("constant template needs q_max > q0");
  std::vector<LinearityInterval> ivs{{q0, q_max, {1, n + 1}}};
  return PiecewiseLinearSystem(n + 1, q0, all_equal_start(n + 1, q0), std::move(ivs));
}

std::vector<Rat> a_coefficients(const ExponentSpectrum& spectrum) {
  if (!spectrum.is_valid())
    throw domain_error("coefficients require a valid spectrum" +
                       (spectrum.violation.empty() ? std::string()
                                                   : " (" + spectrum.violation + ")"));
  const int n = spectrum.n;
  if (spectrum.omegas[n - 1].is_infinite())
    throw domain_error("omega_{n-1} infinite: use the per-cycle surrogate schedule");
  std::vector<Rat> x(n);
  for (int j = 0; j < n; ++j) x[j] = reciprocal_one_plus(spectrum.omegas[j]);
  std::vector<Rat> a(n + 1);
  a[0] = x[n - 1];
  for (int d = 2; d <= n; ++d) a[d - 1] = x[n - d] - x[n - d + 1];
  a[n] = 1 - x[0];
  return a;
}

bool template_admissible(const std::vector<Rat>& a) {
  if (a.empty() || a[0] <= 0) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] > a[i + 1]) return false;
  return true;
}

TemplateSchedule anchor_schedule(const std::vector<Rat>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) throw domain_error("coefficient vector needs at least two entries");
  if (!template_admissible(a)) {
    if (a[0] <= 0)
      throw domain_error("leading coefficient must be positive (finite top exponent)");
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    throw domain_error("coefficients not nondecreasing (a_" + std::to_string(i + 1) + " > a_" +
                       std::to_string(i + 2) + "); the anchor schedule would need a "
                       "negative-length interval");
  }

  Rat sum(0);
  for (const auto& v : a) sum += v;
  if (sum != 1) throw domain_error("coefficients must sum to 1 exactly");

  TemplateSchedule s;
  s.a = a;
  s.q_anchor.resize(2 * n + 1);
  Rat prefix(0);
  for (int d = 0; d <= n; ++d) {
    s.q_anchor[d] = prefix + Rat(n + 1 - d) * a[d];  // a[d] is a_{d+1}
    prefix += a[d];
  }
  Rat suffix(0);
  for (int d = n; d >= 1; --d) {
    s.q_anchor[n + d] = suffix + Rat(1 + d) * a[d];
    suffix += a[d];
  }
  // Overlap consistency: the second anchor family reproduces q_n = 1 at d = 0.
  assert(suffix + a[0] == s.q_anchor[n]);
  assert(s.q_anchor[n] == 1);

  s.alpha.resize(n + 1);
  s.rho.resize(2 * n + 1);
  for (int i = 0; i <= n; ++i) s.alpha[i] = a[i] / s.q_anchor[0];
  for (int i = 0; i <= 2 * n; ++i) s.rho[i] = s.q_anchor[i] / s.q_anchor[0];
  assert(s.rho[0] == 1);
  assert(s.rho[2 * n] == a[n] / a[0]);
  return s;
}

PiecewiseLinearSystem single_exponent_template(const SingleExponentParams& params, int cycles) {
  const int n = params.n, d = params.d;
  if (n < 1 || d < 0 || d >= n) throw domain_error("need n >= 1 and 0 <= d < n");
  check_epsilon(params.epsilon);
  if (!(params.q_start > 0)) throw domain_error("q_start must be positive");
  if (cycles < 1) throw domain_error("need at least one cycle");
  const Rat minimal = minimal_exponent(n, d);
  if (!params.omega_d.is_infinite() && params.omega_d.value() < minimal)
    throw domain_error("omega_" + std::to_string(d) + " below minimal value " +
                       to_fraction_string(minimal));

  SystemBuilder builder(n + 1, params.q_start, all_equal_start(n + 1, params.q_start));
  Rat Q = params.q_start;
  for (int k = 0; k < cycles; ++k) {
    Rat w;
    if (params.omega_d.is_infinite())
      w = params.infinite_schedule ? std::max(params.infinite_schedule(k), minimal)
                                   : default_infinite_exponent(k, minimal);
    else
      w = params.omega_d.value();

    Rat q_top = Q;
    if (w > minimal) {
      const Rat q_star = rat(n - d, n + 1) * (1 + w) * Q;
      q_top = rat(n - d, d + 1) * w * Q;
      builder.advance({n - d + 1, n + 1}, q_star - Q);  // top d+1 rise at 1/(d+1)
      builder.advance({1, n - d}, q_top - q_star);      // bottom n-d rise at 1/(n-d)
    }
    const Rat q_next = q_top / params.epsilon;
    builder.advance({1, n + 1}, q_next - q_top);
    Q = q_next;
  }
  return builder.build();
}

PiecewiseLinearSystem intersection_template(const IntersectionParams& params, int cycles) {
  const ExponentSpectrum spectrum = validate_spectrum(params.spectrum);
  if (!spectrum.is_valid())
    throw domain_error("spectrum fails transference validation: " + spectrum.violation);
  check_epsilon(params.epsilon);
  if (!(params.q_start > 0)) throw domain_error("q_start must be positive");
  if (cycles < 1) throw domain_error("need at least one cycle");
  const int n = spectrum.n;

  SystemBuilder builder(n + 1, params.q_start, all_equal_start(n + 1, params.q_start));
  Rat Q = params.q_start;

  const bool pathological = spectrum.omegas[n - 1].is_infinite();
  std::vector<Rat> base(n + 1);
  if (pathological) {
    std::vector<Rat> x(n);
    for (int j = 0; j < n; ++j) x[j] = reciprocal_one_plus(spectrum.omegas[j]);
    base[0] = 0;
    for (int d = 2; d <= n; ++d) base[d - 1] = x[n - d] - x[n - d + 1];
    base[n] = 1 - x[0];
  } else {
    base = a_coefficients(spectrum);
  }

  TemplateSchedule fixed_schedule;
  if (!pathological) fixed_schedule = anchor_schedule(base);

  Rat prev_a1(2);
  for (int k = 0; k < cycles; ++k) {
    const TemplateSchedule* sched = &fixed_schedule;
    TemplateSchedule cycle_schedule;
    if (pathological) {
      const Rat a1k = params.pathological_a1 ? params.pathological_a1(k) : rat(1, k + 2);
      if (!(a1k > 0 && a1k < 1 && a1k < prev_a1))
        throw domain_error("pathological a_1 surrogates must strictly decrease inside (0, 1)");
      prev_a1 = a1k;
      cycle_schedule = anchor_schedule(pathological_coefficients(base, a1k));
      sched = &cycle_schedule;
    }
    emit_intersection_cycle(builder, *sched, Q);
    const Rat q_top = sched->rho[2 * n] * Q;
    assert(builder.q() == q_top);
    const Rat q_next = q_top / params.epsilon;
    builder.advance({1, n + 1}, q_next - q_top);
    Q = q_next;
  }
  return builder.build();
}

PiecewiseLinearSystem random_roy_system(std::uint64_t seed, int n, const Rat& q0,
                                        const Rat& q_max, const Rat& mean_interval_length) {
  if (n < 1) throw domain_error("need n >= 1");
  if (q0 < 0 || !(q_max > q0)) throw domain_error("need 0 <= q0 < q_max");
  if (!(mean_interval_length > 0)) throw domain_error("mean interval length must be positive");
  const int np1 = n + 1;
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) {
    return static_cast<int>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  // Sorted nonnegative initial values summing to q0.
  std::vector<int> weights(np1);
  for (auto& w : weights) w = draw(0, 16);
  std::sort(weights.begin(), weights.end());
  long total = 0;
  for (int w : weights) total += w;
  std::vector<Rat> initial(np1);
  for (int i = 0; i < np1; ++i)
    initial[i] = total == 0 ? Rat(q0 / np1) : Rat(q0 * rat(weights[i], total));

  SystemBuilder builder(np1, q0, initial);
  int prev_lo = np1 + 1;  // first interval is unconstrained
  bool first = true;
  while (builder.q() < q_max) {
    const auto& v = builder.values();
    // Maximal runs of equal values (1-based, inclusive).
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < np1;) {
      int j = i;
      while (j + 1 < np1 && v[j + 1] == v[i]) ++j;
      classes.push_back({i + 1, j + 1});
      i = j + 1;
    }
    // Junction rule: the new rising block's class must reach down to the
    // previous block's lowest rising component.
    std::vector<std::pair<int, int>> admissible;
    for (auto& c : classes)
      if (first || c.first <= prev_lo) admissible.push_back(c);
    const auto cls = admissible[static_cast<std::size_t>(draw(0, static_cast<int>(admissible.size()) - 1))];
    const int r_lo = draw(cls.first, cls.second);
    const int r_hi = cls.second;
    const SlopeBlock block{r_lo, r_hi};

    Rat dq = mean_interval_length * rat(draw(1, 32), 16);
    if (r_hi < np1) {
      // Cap the duration so the rising run does not overtake the component
      // above it; snapping to the cap merges the classes.
      const Rat cap = (v[r_hi] - v[r_hi - 1]) * (r_hi - r_lo + 1);
      if (draw(0, 2) == 0)
        dq = cap;
      else
        dq = std::min(dq, cap);
    }
    dq = std::min(dq, Rat(q_max - builder.q()));
    builder.advance(block, dq);
    prev_lo = r_lo;
    first = false;
  }
  return builder.build();
}

ExponentSpectrum random_valid_spectrum(std::uint64_t seed, int n) {
  if (n < 1) throw domain_error("need n >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) {
    return static_cast<int>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<ExtRat> w(n);
  Rat prev = rat(1, n) + rat(draw(0, 18), 12);
  w[0] = ExtRat(prev);
  for (int d = 1; d < n; ++d) {
    // Feasible interval for omega_d given omega_{d-1}: the going-down bound
    // gives the floor, the going-up bound the ceiling (empty above d-1
    // when omega_{d-1} >= d).
    const Rat lo = (Rat(n - d + 1) * prev + 1) / Rat(n - d);
    Rat hi = lo + 3;
    if (prev < d) hi = std::min(hi, Rat(Rat(d + 1) * prev / (Rat(d) - prev)));
    const Rat pick = lo + (hi - lo) * rat(draw(0, 16), 16);
    w[d] = ExtRat(pick);
    prev = pick;
  }
  ExponentSpectrum s = validate_spectrum(make_spectrum(std::move(w)));
  assert(s.is_valid());
  return s;
}

ExponentSpectrum random_template_spectrum(std::uint64_t seed, int n) {
  if (n < 1) throw domain_error("need n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<long> c(n + 1);
  for (auto& v : c) v = 1 + static_cast<long>(rng() % 48);
  std::sort(c.begin(), c.end());
  long total = 0;
  for (long v : c) total += v;
  // x_{n-d} = (c_1 + ... + c_d) / total, inverted to exponents.
  std::vector<ExtRat> w(n);
  long prefix = 0;
  for (int d = 1; d <= n; ++d) {
    prefix += c[d - 1];
    w[n - d] = omega_from_reciprocal(rat(prefix, total));
  }
  ExponentSpectrum s = validate_spectrum(make_spectrum(std::move(w)));
  assert(s.is_valid());
  return s;
}

}  // namespace pgn
