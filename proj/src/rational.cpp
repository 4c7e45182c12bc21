#include "pgn/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace pgn {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat pow10(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return Rat(p);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw domain_error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den))
      throw domain_error("malformed rational literal '" + text + "'");
    const mpz_class num_z(num), den_z(den);
    if (den_z == 0) throw domain_error("zero denominator in '" + text + "'");
    Rat r(num_z, den_z);
    r.canonicalize();
    return r;
  }

  if (is_plain_integer(s)) return Rat(mpz_class(s));

  // Decimal, optionally with exponent: [sign] digits [. digits] [e|E [sign] digits]
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string int_part, frac_part, exp_part;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) int_part.push_back(s[i]);
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) frac_part.push_back(s[i]);
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_part.push_back(s[i++]);
    if (i == s.size()) throw domain_error("malformed rational literal '" + text + "'");
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) exp_part.push_back(s[i]);
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty()))
    throw domain_error("malformed rational literal '" + text + "'");

  mpz_class mantissa(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += c - '0';
  }
  Rat r(mantissa);
  if (!frac_part.empty()) r /= pow10(static_cast<long>(frac_part.size()));
  if (!exp_part.empty()) {
    long e = std::strtol(exp_part.c_str(), nullptr, 10);
    if (e > 0)
      r *= pow10(e);
    else if (e < 0)
      r /= pow10(-e);
  }
  if (neg) r = -r;
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rat& x) { return x.get_str(); }

std::string to_decimal_string(const Rat& x, int digits) {
  if (digits < 0) digits = 0;
  mpz_class num = x.get_num(), den = x.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(num * scale / den), half away from zero
  mpz_class t = num * scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  std::string s = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (neg && q != 0) s.insert(0, "-");
  return s;
}

ExtRat parse_extended(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "inf" || s == "+inf" || s == "infinity") return ExtRat::infinity();
  return ExtRat(parse_rational(text));
}

std::string to_string(const ExtRat& x) {
  return x.is_infinite() ? "inf" : to_fraction_string(x.value());
}

std::string to_decimal_string(const ExtRat& x, int digits) {
  return x.is_infinite() ? "inf" : to_decimal_string(x.value(), digits);
}

Rat reciprocal_one_plus(const ExtRat& w) {
  if (w.is_infinite()) return Rat(0);
  return Rat(1) / (Rat(1) + w.value());
}

ExtRat omega_from_reciprocal(const Rat& x) {
  if (x < 0 || x > 1) throw domain_error("reciprocal exponent outside [0, 1]");
  if (x == 0) return ExtRat::infinity();
  return ExtRat(Rat(1) / x - 1);
}

}  // namespace pgn
