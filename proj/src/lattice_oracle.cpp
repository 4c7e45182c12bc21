#include "pgn/lattice_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>

namespace pgn::oracle {

namespace {

constexpr int kMaxDim = 8;
using I128 = __int128;

// Error-compensated dot product (fma for exact products, Neumaier sums).
// x has integer entries up to ~2^16 while x.u can be ~1e-9, so a plain
// double accumulation would lose most of the signal.
double dot_compensated(const long long* x, const double* u, int m) {
  double sum = 0.0, comp = 0.0;
  for (int i = 0; i < m; ++i) {
    const double xi = static_cast<double>(x[i]);
    const double prod = xi * u[i];
    const double prod_err = std::fma(xi, u[i], -prod);
    const double t = sum + prod;
    if (std::fabs(sum) >= std::fabs(prod))
      comp += (sum - t) + prod;
    else
      comp += (prod - t) + sum;
    sum = t;
    comp += prod_err;
  }
  return sum + comp;
}

double norm2(const long long* x, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += static_cast<double>(x[i]) * static_cast<double>(x[i]);
  return std::sqrt(s);
}

struct Candidate {
  double lambda = 0;
  std::array<long long, kMaxDim> x{};  // original coordinate order
};

bool candidate_less(const Candidate& a, const Candidate& b, int m) {
  if (a.lambda != b.lambda) return a.lambda < b.lambda;
  for (int i = 0; i < m; ++i)
    if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
  return false;
}

// Incremental exact rank over the integers (Bareiss-style fraction-free
// elimination; entries stay within minor bounds, safe in 128 bits for
// dimension <= 8 and coordinates <= 2^16).
class IntegerEchelon {
 public:
  explicit IntegerEchelon(int m) : m_(m) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool try_add(const std::array<long long, kMaxDim>& x) {
    std::array<I128, kMaxDim> v{};
    for (int i = 0; i < m_; ++i) v[i] = x[i];
    I128 denom = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int j = pivot_col_[r];
      const I128 p = rows_[r][j];
      const I128 f = v[j];
      for (int c = 0; c < m_; ++c) v[c] = (p * v[c] - f * rows_[r][c]) / denom;
      denom = p;
    }
    int lead = -1;
    for (int c = 0; c < m_; ++c)
      if (v[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    rows_.push_back(v);
    pivot_col_.push_back(lead);
    return true;
  }

 private:
  int m_;
  std::vector<std::array<I128, kMaxDim>> rows_;
  std::vector<int> pivot_col_;
};

void compact_candidates(std::vector<Candidate>& cands, int m);
constexpr std::size_t kCandidateSoftLimit = std::size_t(1) << 19;

struct Kernel {
  int m = 0;                      // ambient dimension n+1
  std::array<double, kMaxDim> u{};  // permuted, u[0] = max |coordinate| > 0
  std::array<int, kMaxDim> perm{};  // permuted index -> original index

  explicit Kernel(const DirectionVector& dir) {
    m = static_cast<int>(dir.u.size());
    std::array<int, kMaxDim> idx{};
    std::iota(idx.begin(), idx.begin() + m, 0);
    std::stable_sort(idx.begin(), idx.begin() + m, [&](int a, int b) {
      return std::fabs(dir.u[a]) > std::fabs(dir.u[b]);
    });
    const double sign = dir.u[idx[0]] < 0 ? -1.0 : 1.0;
    for (int i = 0; i < m; ++i) {
      perm[i] = idx[i];
      u[i] = sign * dir.u[idx[i]];
    }
  }

  // All nonzero x (up to global sign) with max(|x|_2, scale*|x.u|) <= R:
  // iterate the trailing m-1 coordinates over the ball of radius R and read
  // the feasible x_0 range off the slab inequality.
  void enumerate(double q, long long R, std::vector<Candidate>& out) const {
    const double scale = std::exp(q);
    const double slab = static_cast<double>(R) / scale;
    const double r2 = static_cast<double>(R) * static_cast<double>(R);
    const double pad = 1e-9 * static_cast<double>(R) + 1e-12;
    const std::size_t soft_limit = kCandidateSoftLimit;

    std::array<long long, kMaxDim> rest{};  // rest[1..m-1]
    std::array<long long, kMaxDim> x{};
    const int tail = m - 1;

    auto emit_for_rest = [&](double rest_norm2) {
      double t = 0.0;
      {
        std::array<long long, kMaxDim> tx{};
        for (int i = 1; i < m; ++i) tx[i - 1] = rest[i];
        t = dot_compensated(tx.data(), u.data() + 1, tail);
      }
      const double room = r2 - rest_norm2;
      if (room < 0) return;
      const double x0_cap = std::floor(std::sqrt(room) + 1e-9);
      double lo = (-slab - t) / u[0];
      double hi = (slab - t) / u[0];
      lo = std::max(lo, -x0_cap - 0.5);
      hi = std::min(hi, x0_cap + 0.5);
      // tolerate float edges by scanning one integer beyond each end
      long long from = static_cast<long long>(std::ceil(lo)) - 1;
      long long to = static_cast<long long>(std::floor(hi)) + 1;
      bool rest_zero = true;
      for (int i = 1; i < m; ++i) rest_zero = rest_zero && rest[i] == 0;
      for (long long x0 = from; x0 <= to; ++x0) {
        if (rest_zero && x0 <= 0) continue;  // canonical sign, skip zero
        if (static_cast<double>(x0) * static_cast<double>(x0) > room + 0.5) continue;
        x[0] = x0;
        for (int i = 1; i < m; ++i) x[i] = rest[i];
        const double dot = dot_compensated(x.data(), u.data(), m);
        const double lambda = std::max(norm2(x.data(), m), scale * std::fabs(dot));
        if (lambda > static_cast<double>(R) + pad) continue;
        Candidate c;
        c.lambda = lambda;
        // back to original coordinates, sign-canonicalized
        for (int i = 0; i < m; ++i) c.x[perm[i]] = x[i];
        for (int i = 0; i < m; ++i) {
          if (c.x[i] == 0) continue;
          if (c.x[i] < 0)
            for (int j = 0; j < m; ++j) c.x[j] = -c.x[j];
          break;
        }
        out.push_back(c);
        if (out.size() >= soft_limit) compact_candidates(out, m);
      }
    };

    // odometer over rest coordinates; canonical half-space: the first
    // nonzero trailing coordinate is positive (x0-only vectors handled by
    // the x0 > 0 rule above)
    std::function<void(int, double, bool)> rec = [&](int i, double acc, bool lead_found) {
      if (i == m) {
        emit_for_rest(acc);
        return;
      }
      const double room = r2 - acc;
      if (room < 0) return;
      const long long cap = static_cast<long long>(std::floor(std::sqrt(room) + 1e-9));
      const long long lo = lead_found ? -cap : 0;
      for (long long v = lo; v <= cap; ++v) {
        rest[i] = v;
        rec(i + 1, acc + static_cast<double>(v) * static_cast<double>(v), lead_found || v != 0);
      }
    };
    rec(1, 0.0, false);
  }
};

struct Selection {
  bool complete = false;
  std::vector<Candidate> picked;
};

Selection greedy_select(std::vector<Candidate>& cands, int m) {
  std::sort(cands.begin(), cands.end(),
            [m](const Candidate& a, const Candidate& b) { return candidate_less(a, b, m); });
  Selection sel;
  IntegerEchelon ech(m);
  for (const auto& c : cands) {
    if (ech.rank() == m) break;
    if (ech.try_add(c.x)) sel.picked.push_back(c);
  }
  sel.complete = static_cast<int>(sel.picked.size()) == m;
  return sel;
}

// Bounds candidate memory during wide enumerations: once a full independent
// set exists among the collected candidates, anything beyond its largest
// dilation can never be picked by the final greedy pass and is dropped.
void compact_candidates(std::vector<Candidate>& cands, int m) {
  Selection sel = greedy_select(cands, m);
  if (!sel.complete) return;
  const double cutoff =
      sel.picked.back().lambda + 1e-9 * std::max(1.0, sel.picked.back().lambda);
  cands.erase(std::remove_if(cands.begin(), cands.end(),
                             [cutoff](const Candidate& c) { return c.lambda > cutoff; }),
              cands.end());
}

}  // namespace

DirectionVector DirectionVector::from_u(std::vector<double> raw) {
  if (raw.size() < 2 || raw.size() > kMaxDim)
    throw domain_error("direction vector needs between 2 and 8 coordinates");
  double norm = 0;
  for (double v : raw) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0) || !std::isfinite(norm)) throw domain_error("direction vector must be nonzero and finite");
  for (double& v : raw) v /= norm;
  return DirectionVector{std::move(raw)};
}

DirectionVector DirectionVector::from_theta(const std::vector<double>& theta) {
  std::vector<double> u;
  u.reserve(theta.size() + 1);
  u.push_back(1.0);
  u.insert(u.end(), theta.begin(), theta.end());
  return from_u(std::move(u));
}

MinimaPoint successive_minima(const DirectionVector& dir, double q, const OracleOptions& opts) {
  if (q < 0 || !std::isfinite(q)) throw domain_error("q must be finite and nonnegative");
  const Kernel kernel(dir);
  const int m = kernel.m;

  MinimaPoint point;
  point.q = q;

  long long R = std::max<long long>(2, opts.initial_radius);
  R = std::min(R, opts.radius_cap);
  std::vector<Candidate> cands;
  while (true) {
    cands.clear();
    kernel.enumerate(q, R, cands);
    Selection sel = greedy_select(cands, m);
    if (sel.complete || R >= opts.radius_cap) {
      point.radius_used = R;
      point.radius_capped = !sel.complete;
      point.lambdas.clear();
      point.L.clear();
      point.witnesses.clear();
      for (const auto& c : sel.picked) {
        point.lambdas.push_back(c.lambda);
        point.L.push_back(std::log(c.lambda));
        point.witnesses.emplace_back(c.x.begin(), c.x.begin() + m);
      }
      return point;
    }
    R = std::min(R * 2, opts.radius_cap);
  }
}

MinimaTrajectory trajectory(const DirectionVector& dir, double q_max, double step,
                            const OracleOptions& opts) {
  if (!(step > 0)) throw domain_error("step must be positive");
  if (!(q_max >= 0)) throw domain_error("q_max must be nonnegative");
  MinimaTrajectory traj;
  traj.u = dir;
  OracleOptions local = opts;
  const int m = dir.n() + 1;
  for (long long i = 0;; ++i) {
    const double q = static_cast<double>(i) * step;
    if (q > q_max + step * 1e-9) break;
    MinimaPoint p = successive_minima(dir, std::min(q, q_max), local);
    traj.any_capped = traj.any_capped || p.radius_capped;
    if (!traj.points.empty() && !p.radius_capped) {
      const MinimaPoint& prev = traj.points.back();
      const double h = p.q - prev.q;
      for (int d = 0; d < m && d < static_cast<int>(prev.L.size()) &&
                      d < static_cast<int>(p.L.size());
           ++d) {
        if (p.L[d] < prev.L[d] - opts.float_tol)
          throw domain_error("oracle invariant broken: L not monotone along the grid");
        if (p.L[d] > prev.L[d] + h + 2 * opts.float_tol)
          throw domain_error("oracle invariant broken: L not 1-Lipschitz along the grid");
      }
    }
    // warm start: the certified radius is nondecreasing in q
    local.initial_radius = std::max(opts.initial_radius, p.radius_used);
    traj.points.push_back(std::move(p));
  }
  return traj;
}

std::vector<EmpiricalExponent> empirical_exponents(const MinimaTrajectory& traj,
                                                   double tail_fraction) {
  if (traj.points.size() < 50)
    throw domain_error("empirical exponents need at least 50 grid points");
  if (!(tail_fraction > 0 && tail_fraction <= 1))
    throw domain_error("tail fraction must be in (0, 1]");
  const int n = traj.u.n();
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < traj.points.size(); ++i)
    if (traj.points[i].q > 1e-9 && !traj.points[i].radius_capped) usable.push_back(i);
  if (usable.size() < 2) throw domain_error("not enough usable grid points");
  const std::size_t first =
      usable.size() - std::max<std::size_t>(1, static_cast<std::size_t>(
                                                   std::ceil(usable.size() * tail_fraction)));

  std::vector<EmpiricalExponent> out;
  char note[96];
  std::snprintf(note, sizeof(note), "finite-horizon estimate (tail q in [%.3g, %.3g]), O(1/q) error",
                traj.points[usable[first]].q, traj.points[usable.back()].q);
  for (int k = 1; k <= n; ++k) {
    EmpiricalExponent e;
    e.k = k;
    e.note = note;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t t = first; t < usable.size(); ++t) {
      const MinimaPoint& p = traj.points[usable[t]];
      double s = 0;
      for (int d = 0; d < k; ++d) s += p.L[d];
      const double ratio = s / p.q;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    e.liminf_value = lo;
    e.limsup_value = hi;
    e.omega = lo <= 0 ? std::numeric_limits<double>::infinity() : 1.0 / lo - 1.0;
    e.omega_hat = hi <= 0 ? std::numeric_limits<double>::infinity() : 1.0 / hi - 1.0;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace pgn::oracle
