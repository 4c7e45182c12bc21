#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace pgn {

// Exact rational scalar. All piecewise-linear bookkeeping, template
// generation and validation run on these; doubles appear only at the
// reporting boundary and inside the lattice oracle.
using Rat = mpq_class;

// Invalid inputs and mathematical preconditions (maps to CLI exit 1).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configured resource caps exceeded (maps to CLI exit 2).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q", "p", plain decimals ("-1.25") and scientific notation
// ("2.5e-3"). Decimal forms are converted exactly as fractions over powers
// of ten, so no precision is lost on the way in.
Rat parse_rational(const std::string& text);

// Canonical "p/q", or just "p" when the denominator is one.
std::string to_fraction_string(const Rat& x);

// Fixed-point rendering with `digits` fractional digits, rounding half away
// from zero. Deterministic, used for CSV/plot output.
std::string to_decimal_string(const Rat& x, int digits);

inline double to_double(const Rat& x) { return x.get_d(); }

// Rational extended with +infinity. Approximation exponents live in
// [1/n, +inf], and the dimension formulas are meaningful at infinity,
// so infinity is a first-class value rather than a float sentinel.
class ExtRat {
 public:
  ExtRat() : inf_(false), v_(0) {}
  ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}  // NOLINT(implicit)
  ExtRat(long v) : inf_(false), v_(v) {}            // NOLINT(implicit)
  static ExtRat infinity() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }
  const Rat& value() const {
    if (inf_) throw domain_error("value() on infinite quantity");
    return v_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

 private:
  bool inf_;
  Rat v_;
};

// "inf" or anything parse_rational accepts.
ExtRat parse_extended(const std::string& text);
std::string to_string(const ExtRat& x);
std::string to_decimal_string(const ExtRat& x, int digits);

// 1/(1+w) with the convention 1/(1+inf) = 0. The dimension and template
// formulas are all affine in these reciprocals, which keeps infinity exact.
Rat reciprocal_one_plus(const ExtRat& w);

// Inverse of reciprocal_one_plus on [0, 1]: 0 maps back to infinity.
ExtRat omega_from_reciprocal(const Rat& x);

}  // namespace pgn
