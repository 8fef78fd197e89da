#pragma once

// Exact scalars of the form  sum_i c_i * sqrt(r_i)  with rational c_i and
// distinct square-free positive integer radicands r_i. Square roots of
// distinct square-free integers are linearly independent over the rationals,
// so the canonical term map makes equality and zero tests exact.

#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace ajf {

class RadicalScalar {
public:
  RadicalScalar() = default;  // zero
  RadicalScalar(const Rational& r) { add_term(r, 1); }  // NOLINT: implicit by design
  RadicalScalar(long n) : RadicalScalar(Rational(n)) {}  // NOLINT

  // coeff * sqrt(radicand) in canonical form; radicand is any non-negative
  // rational, square factors are pulled out into the coefficient.
  static RadicalScalar make(const Rational& coeff, const Rational& radicand);
  static RadicalScalar sqrt_of(const Rational& radicand) { return make(1, radicand); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  Rational as_rational() const;  // requires is_rational()
  bool is_single_term() const { return terms_.size() == 1; }
  // (coefficient, radicand) of a single-term value; zero decomposes as (0, 1).
  std::pair<Rational, BigInt> single_term() const;

  // Defined for nonzero single-term scalars only: 1/(c*sqrt(r)) = sqrt(r)/(c*r).
  RadicalScalar inverse() const;

  friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend RadicalScalar operator/(const RadicalScalar& a, const RadicalScalar& b) {
    return a * b.inverse();
  }
  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o) { return *this = *this + o; }
  RadicalScalar& operator-=(const RadicalScalar& o) { return *this = *this - o; }
  RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }

  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

  double to_double() const;
  std::string str() const;  // "3/2*sqrt(2) + 1"

  const std::map<BigInt, Rational>& terms() const { return terms_; }

private:
  void add_term(const Rational& coeff, const BigInt& squarefree_radicand);
  std::map<BigInt, Rational> terms_;  // square-free radicand >= 1 -> nonzero coeff
};

// Decomposes n >= 0 as s^2 * f with f square-free; returns (s, f).
std::pair<BigInt, BigInt> extract_square(const BigInt& n);

}  // namespace ajf
