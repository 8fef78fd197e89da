#include "radical.hpp"

#include <cmath>

namespace ajf {

std::pair<BigInt, BigInt> extract_square(const BigInt& n) {
  if (n < 0) fail(errc::internal, "extract_square on a negative integer");
  if (n == 0) return {0, 1};
  BigInt square_part = 1;
  BigInt free_part = 1;
  BigInt rest = n;
  // Trial division. Every radicand arising from label arithmetic is a
  // product of small integers, so the bound is never the limiting factor.
  constexpr unsigned long kTrialBound = 1u << 20;
  for (unsigned long d = 2; d <= kTrialBound && BigInt(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), d)) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= d;
      ++count;
    }
    for (unsigned i = 0; i + 1 < count; i += 2) square_part *= d;
    if (count % 2 == 1) free_part *= d;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      square_part *= root;
    } else {
      free_part *= rest;
    }
  }
  return {square_part, free_part};
}

RadicalScalar RadicalScalar::make(const Rational& coeff, const Rational& radicand) {
  if (radicand.sign() < 0)
    fail(errc::negative_radicand, "sqrt(" + radicand.str() + ")");
  RadicalScalar out;
  if (coeff.is_zero() || radicand.is_zero()) return out;
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt pq = radicand.num() * radicand.den();
  auto [sq, sf] = extract_square(pq);
  out.add_term(coeff * Rational(sq, radicand.den()), sf);
  return out;
}

Rational RadicalScalar::as_rational() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  fail(errc::internal, "scalar is not rational: " + str());
}

std::pair<Rational, BigInt> RadicalScalar::single_term() const {
  if (terms_.empty()) return {Rational(0), BigInt(1)};
  if (terms_.size() != 1)
    fail(errc::internal, "scalar is not single-term: " + str());
  return {terms_.begin()->second, terms_.begin()->first};
}

RadicalScalar RadicalScalar::inverse() const {
  if (terms_.empty())
    fail(errc::division_unsupported, "division by zero scalar");
  if (terms_.size() != 1)
    fail(errc::division_unsupported, "division by multi-term scalar " + str());
  const auto& [rad, coeff] = *terms_.begin();
  RadicalScalar out;
  out.add_term(Rational(1) / (coeff * Rational(rad)), rad);
  return out;
}

void RadicalScalar::add_term(const Rational& coeff, const BigInt& radicand) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar out = a;
  for (const auto& [rad, coeff] : b.terms_) out.add_term(coeff, rad);
  return out;
}

RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar out = a;
  for (const auto& [rad, coeff] : b.terms_) out.add_term(-coeff, rad);
  return out;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      // sqrt(ra)*sqrt(rb) = g*sqrt((ra/g)(rb/g)) with g = gcd(ra, rb); the
      // reduced product of two coprime square-free integers is square-free.
      BigInt g = gcd(ra, rb);
      out.add_term(ca * cb * Rational(g), (ra / g) * (rb / g));
    }
  }
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out;
  for (const auto& [rad, coeff] : terms_) out.terms_.emplace(rad, -coeff);
  return out;
}

double RadicalScalar::to_double() const {
  double v = 0;
  for (const auto& [rad, coeff] : terms_)
    v += coeff.to_double() * std::sqrt(rad.get_d());
  return v;
}

std::string RadicalScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [rad, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (rad == 1) {
      out += c.str();
    } else {
      if (!(c == Rational(1))) out += c.str() + "*";
      out += "sqrt(" + rad.get_str() + ")";
    }
    first = false;
  }
  return out;
}

}  // namespace ajf
