#pragma once

// Exact functions of the form
//
//     (1-x)^(em/2) * (1+x)^(ep/2) * p(x)
//
// with integer doubled exponents em, ep and a rational polynomial p. The
// space is closed under addition (matching weight parity), multiplication,
// d/dx, and every first-order ladder operator built on top of it. Negative
// doubled exponents are legal values (they carry poles at the endpoints);
// operator application clears them through normalized_exponents(), which
// turns a non-cancelling singularity into a loud error.

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ajf {

class WeightedPoly {
public:
  WeightedPoly() = default;  // zero
  WeightedPoly(int e_minus, int e_plus, std::vector<Rational> coeffs);

  static WeightedPoly constant(const Rational& c) { return WeightedPoly(0, 0, {c}); }
  static WeightedPoly one() { return constant(1); }
  // c0 + c1*x
  static WeightedPoly linear(const Rational& c0, const Rational& c1) {
    return WeightedPoly(0, 0, {c0, c1});
  }

  int e_minus() const { return em_; }
  int e_plus() const { return ep_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

  // Mechanical arithmetic: exponents are matched or added, no content is
  // factored out. Addition requires equal weight parities.
  friend WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
  WeightedPoly operator-() const { return scaled(-1); }
  WeightedPoly scaled(const Rational& c) const;

  // Exact derivative via the product rule; divisible weight content in the
  // result is factored back into the exponents. Genuinely negative exponents
  // (a pole in the derivative) are kept.
  WeightedPoly derivative() const;

  // Factors every (1-x) and (1+x) divisor of p into the exponents. Never
  // throws; the result may keep negative exponents.
  WeightedPoly canonicalized() const;

  // canonicalized(), then requires both exponents to be >= 0. A remaining
  // negative exponent means the value left the polynomial-weighted space.
  WeightedPoly normalized_exponents() const;

  // Exact integral over [-1, 1]; requires the canonical form to be a plain
  // polynomial (even non-negative exponents).
  Rational integrate() const;

  // x -> -x: swaps the weights and alternates coefficient signs.
  WeightedPoly reflected() const;

  double evaluate(double x) const;  // -1 <= x <= 1

  // Exact equality as functions on (-1, 1), independent of representation.
  bool value_equal(const WeightedPoly& other) const;

  std::string str() const;

private:
  int em_ = 0, ep_ = 0;
  std::vector<Rational> coeffs_;  // ascending powers; empty means zero
};

}  // namespace ajf
