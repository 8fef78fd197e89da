#include "jacobi.hpp"

namespace ajf {

Rational gen_binomial(long a, long s) {
  if (s < 0) fail(errc::domain_error, "binomial with negative lower index");
  Rational num(1);
  for (long i = 0; i < s; ++i) num *= Rational(a - i);
  return num / factorial(static_cast<unsigned long>(s));
}

WeightedPoly jacobi_poly(const NabTriple& t) {
  const long n = t.n();
  // ((x+1)/2)^s ((x-1)/2)^(n-s), accumulated over s.
  std::vector<Rational> total(static_cast<size_t>(n) + 1, Rational(0));
  std::vector<Rational> xp1 = {Rational(1)};  // ((x+1)/2)^s
  for (long s = 0; s <= n; ++s) {
    Rational c = gen_binomial(n + t.alpha(), s) * gen_binomial(n + t.beta(), n - s);
    if (!c.is_zero()) {
      std::vector<Rational> term = xp1;
      for (long k = 0; k < n - s; ++k) {  // times ((x-1)/2)^(n-s)
        std::vector<Rational> next(term.size() + 1, Rational(0));
        for (size_t i = 0; i < term.size(); ++i) {
          next[i] += term[i] * Rational(-1, 2);
          next[i + 1] += term[i] * Rational(1, 2);
        }
        term = std::move(next);
      }
      for (size_t i = 0; i < term.size(); ++i) total[i] += term[i] * c;
    }
    std::vector<Rational> next(xp1.size() + 1, Rational(0));
    for (size_t i = 0; i < xp1.size(); ++i) {
      next[i] += xp1[i] * Rational(1, 2);
      next[i + 1] += xp1[i] * Rational(1, 2);
    }
    xp1 = std::move(next);
  }
  return WeightedPoly(0, 0, std::move(total));
}

LabeledFunction make_ajf(const JmqTriple& t) {
  NabTriple nab = nab_from_jmq(t);
  // Norm squared (j+m)!(j-m)!/((j+q)!(j-q)!) with the 2^(-m) factor from the
  // half-interval weights folded in; all four arguments are non-negative
  // integers on a valid triple.
  auto fac = [](int twice) {
    return factorial(static_cast<unsigned long>(twice / 2));
  };
  Rational norm2 = fac(t.two_j() + t.two_m()) * fac(t.two_j() - t.two_m()) /
                   (fac(t.two_j() + t.two_q()) * fac(t.two_j() - t.two_q()));
  RadicalScalar scale = RadicalScalar::sqrt_of(norm2 * pow2(-t.two_m()));
  int em = (t.two_m() + t.two_q()) / 2;
  int ep = (t.two_m() - t.two_q()) / 2;
  WeightedPoly body =
      WeightedPoly(em, ep, jacobi_poly(nab).coeffs()).normalized_exponents();
  return LabeledFunction{t, std::move(scale), std::move(body)};
}

LabeledFunction make_ajf_hat(int two_j, int two_m, int two_q) {
  if (two_j < 0) fail(errc::condition_violation, "2j must be non-negative");
  if ((two_j - two_m) % 2 != 0 || (two_j - two_q) % 2 != 0)
    fail(errc::condition_violation, "labels must be simultaneously integer or half-odd");
  if (std::abs(two_q) > two_j)
    fail(errc::condition_violation, "hat extension is only defined for j >= |q|");
  if (std::abs(two_m) > two_j) return LabeledFunction::zero();
  return make_ajf(JmqTriple::make(two_j, two_m, two_q));
}

SymmetryImage symmetry_image(const JmqTriple& t, Symmetry which) {
  auto sign_pow = [](int twice) {
    // (-1)^k for the integer k = twice/2
    return (twice / 2) % 2 == 0 ? +1 : -1;
  };
  switch (which) {
    case Symmetry::swap_mq:
      return {JmqTriple::make(t.two_j(), t.two_q(), t.two_m()), +1, false};
    case Symmetry::negate_q:
      return {JmqTriple::make(t.two_j(), t.two_m(), -t.two_q()),
              sign_pow(t.two_j() - t.two_m()), true};
    case Symmetry::negate_m:
      return {JmqTriple::make(t.two_j(), -t.two_m(), t.two_q()),
              sign_pow(t.two_j() - t.two_q()), true};
    case Symmetry::negate_mq:
      return {JmqTriple::make(t.two_j(), -t.two_m(), -t.two_q()),
              sign_pow(t.two_m() + t.two_q()), false};
  }
  fail(errc::internal, "unreachable symmetry kind");
}

WeightedPoly ode_residual(const JmqTriple& t) {
  const WeightedPoly body = make_ajf(t).body;
  const Rational j = t.j().to_rational();
  const Rational m = t.m().to_rational();
  const Rational q = t.q().to_rational();
  WeightedPoly one_minus_x2(2, 2, {Rational(1)});
  WeightedPoly d1 = body.derivative();
  WeightedPoly term1 = (one_minus_x2 * d1.derivative()).scaled(-1);
  WeightedPoly term2 = (WeightedPoly::linear(0, 1) * d1).scaled(2);
  WeightedPoly term3 = WeightedPoly(-2, -2, {m * m + q * q, m * q * Rational(2)}) * body;
  WeightedPoly term4 = body.scaled(-(j * (j + 1)));
  return term1 + term2 + term3 + term4;
}

}  // namespace ajf
