#include "funcspace.hpp"

#include <cmath>

namespace ajf {

bool LabeledFunction::value_equal(const LabeledFunction& other) const {
  RadicalFunction diff;
  diff.accumulate(scale, body);
  diff.subtract(other.scale, other.body);
  return diff.is_zero();
}

void RadicalFunction::accumulate(const RadicalScalar& scale, const WeightedPoly& body) {
  if (scale.is_zero() || body.is_zero()) return;
  for (const auto& [rad, coeff] : scale.terms()) {
    WeightedPoly term = body.scaled(coeff);
    auto key = std::make_tuple(rad, ((term.e_minus() % 2) + 2) % 2,
                               ((term.e_plus() % 2) + 2) % 2);
    auto it = buckets_.find(key);
    if (it == buckets_.end()) {
      buckets_.emplace(key, std::move(term));
    } else {
      it->second = it->second + term;
      if (it->second.is_zero()) buckets_.erase(it);
    }
  }
}

void RadicalFunction::subtract(const RadicalScalar& scale, const WeightedPoly& body) {
  accumulate(-scale, body);
}

bool RadicalFunction::is_zero() const { return buckets_.empty(); }

WeightedPoly RadicalFunction::rational_part() const {
  if (buckets_.empty()) return {};
  if (buckets_.size() > 1)
    fail(errc::non_rational_synthesis, "mixed radicands or weight parities in result");
  const auto& [key, poly] = *buckets_.begin();
  if (std::get<0>(key) != 1)
    fail(errc::non_rational_synthesis,
         "irrational residue with radicand " + std::get<0>(key).get_str());
  return poly;
}

double RadicalFunction::evaluate(double x) const {
  double v = 0;
  for (const auto& [key, poly] : buckets_)
    v += std::sqrt(std::get<0>(key).get_d()) * poly.evaluate(x);
  return v;
}

}  // namespace ajf
