#pragma once

#include "diskpack/rational.hpp"

namespace diskpack {

/// Closed interval with rational endpoints. Arithmetic is exact; sqrt and
/// the trigonometric helpers round outward to dyadic rationals with a
/// caller-chosen number of fractional bits.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(const Rational& x) : lo(x), hi(x) {}  // NOLINT: point intervals convert implicitly
  Interval(Rational l, Rational h);

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws GeometryError when `b` contains zero.
Interval operator/(const Interval& a, const Interval& b);

/// Widens to dyadic endpoints with `bits` fractional bits.
Interval round_out(const Interval& a, unsigned bits);

/// Upper bound on sqrt(a) by Heron's iteration rounded up; within about
/// 2^-bits of the true value. Requires a >= 0.
Rational sqrt_upper(const Rational& a, unsigned bits);
/// Lower bound on sqrt(a): a / sqrt_upper(a) rounded down.
Rational sqrt_lower(const Rational& a, unsigned bits);

/// Enclosure of sqrt over the interval; negative parts (from rounding) are
/// clamped to zero, a wholly negative interval throws GeometryError.
Interval sqrt(const Interval& a, unsigned bits);

/// Enclosure of cos(pi / 2^p) from cos(pi) = -1 by p half-angle steps.
Interval cos_pi_over_pow2(unsigned p, unsigned bits);
/// Enclosure of sin(pi / 2^p) = sqrt(1 - cos^2).
Interval sin_pi_over_pow2(unsigned p, unsigned bits);

}  // namespace diskpack
