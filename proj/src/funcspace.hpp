#pragma once

// LabeledFunction pairs a weighted polynomial body with a radical scalar
// prefactor and the (j, m, q) label it is claimed to carry. RadicalFunction
// is the closure of such values under addition: a finite sum
// sum_r sqrt(r) * w_r(x) bucketed by square-free radicand and weight parity.
// Distinct buckets are linearly independent as functions, which makes exact
// equality a per-bucket zero test.

#include <map>
#include <optional>
#include <tuple>

#include "labels.hpp"
#include "radical.hpp"
#include "weighted_poly.hpp"

namespace ajf {

struct LabeledFunction {
  std::optional<JmqTriple> label;  // disengaged for the zero function
  RadicalScalar scale;
  WeightedPoly body;

  static LabeledFunction zero() { return {}; }
  bool is_zero() const { return scale.is_zero() || body.is_zero(); }
  double evaluate(double x) const {
    return is_zero() ? 0.0 : scale.to_double() * body.evaluate(x);
  }
  bool value_equal(const LabeledFunction& other) const;
};

class RadicalFunction {
public:
  RadicalFunction() = default;

  void accumulate(const RadicalScalar& scale, const WeightedPoly& body);
  void subtract(const RadicalScalar& scale, const WeightedPoly& body);

  bool is_zero() const;
  // The value as a plain WeightedPoly; throws non_rational_synthesis when an
  // irrational bucket survives.
  WeightedPoly rational_part() const;
  double evaluate(double x) const;

private:
  // key: (radicand, em mod 2, ep mod 2)
  std::map<std::tuple<BigInt, int, int>, WeightedPoly> buckets_;
};

}  // namespace ajf
