#include "diskpack/interval.hpp"

#include <algorithm>
#include <cctype>

#include <gmp.h>

#include "diskpack/errors.hpp"

namespace diskpack {

std::string to_fraction_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_fraction(const std::string& s) {
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const auto slash = s.find('/');
  const std::string p = s.substr(0, slash);
  const std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(p) || !valid_int(q)) throw InputError("malformed rational '" + s + "'");
  const BigInt den(q);
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  return Rational(BigInt(p), den);
}

std::string to_decimal_string(const Rational& x, int digits) {
  if (x == 0) return "0";
  const bool neg = x < 0;
  Rational a = neg ? Rational(-x) : x;
  // Scale into [1, 10) while counting the exponent.
  int exp10 = 0;
  while (a >= 10) {
    a /= 10;
    ++exp10;
  }
  while (a < 1) {
    a *= 10;
    --exp10;
  }
  BigInt scale = 1;
  for (int i = 1; i < digits; ++i) scale *= 10;
  const Rational scaled = a * scale;
  const BigInt mant =
      boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  std::string m = mant.str();
  std::string out = neg ? "-" : "";
  if (exp10 >= 0 && exp10 < digits) {
    out += m.substr(0, static_cast<std::size_t>(exp10) + 1);
    std::string frac = m.substr(static_cast<std::size_t>(exp10) + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (exp10 < 0 && exp10 > -10) {
    out += "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0');
    while (!m.empty() && m.back() == '0') m.pop_back();
    out += m;
  } else {
    out += m.substr(0, 1);
    std::string frac = m.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(exp10);
  }
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

Rational round_dyadic(const Rational& x, unsigned bits, bool up) {
  BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  num <<= bits;
  BigInt q;
  if (up) {
    mpz_cdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  } else {
    mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  }
  BigInt pow2 = 1;
  pow2 <<= bits;
  return Rational(q, pow2);
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits) { return round_dyadic(x, bits, false); }
Rational round_up(const Rational& x, unsigned bits) { return round_dyadic(x, bits, true); }

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw GeometryError("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw GeometryError("interval division by an interval containing 0");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval round_out(const Interval& a, unsigned bits) {
  return {round_down(a.lo, bits), round_up(a.hi, bits)};
}

Rational sqrt_upper(const Rational& a, unsigned bits) {
  if (a < 0) throw GeometryError("square root of a negative number");
  if (a == 0) return 0;
  // Start from a power of two above sqrt(a).
  Rational x = 1;
  while (x * x < a) x *= 2;
  while (x * x / 4 >= a) x /= 2;
  Rational eps = Rational(1, 1) / Rational(BigInt(1) << bits);
  while (true) {
    const Rational next = round_up((x + a / x) / 2, bits);
    if (next >= x) break;
    x = next;
    if (x - a / x <= eps) break;
  }
  return x;
}

Rational sqrt_lower(const Rational& a, unsigned bits) {
  if (a == 0) return 0;
  return round_down(a / sqrt_upper(a, bits), bits);
}

Interval sqrt(const Interval& a, unsigned bits) {
  if (a.hi < 0) throw GeometryError("square root of a negative interval");
  const Rational lo = a.lo > 0 ? sqrt_lower(a.lo, bits) : Rational(0);
  return {lo, sqrt_upper(a.hi, bits)};
}

Interval cos_pi_over_pow2(unsigned p, unsigned bits) {
  Interval c(-1);
  for (unsigned k = 0; k < p; ++k) {
    c = sqrt(round_out((Interval(1) + c) / Interval(2), bits), bits);
    if (c.hi > 1) c.hi = 1;
  }
  return c;
}

Interval sin_pi_over_pow2(unsigned p, unsigned bits) {
  if (p == 0) return Interval(0);
  const Interval c = cos_pi_over_pow2(p, bits);
  // 1 - c^2 for c >= 0 is decreasing in c.
  const Rational clo = std::max(c.lo, Rational(0));
  const Interval one_minus(1 - c.hi * c.hi, 1 - clo * clo);
  return sqrt(round_out(one_minus, bits), bits);
}

}  // namespace diskpack
