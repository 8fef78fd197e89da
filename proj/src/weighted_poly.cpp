#include "weighted_poly.hpp"

#include <cmath>
#include <optional>

namespace ajf {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs add_coeffs(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Coeffs mul_coeffs(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Multiplies by (1 - s*x) with s = +1 or -1.
Coeffs mul_linear(const Coeffs& a, int s) {
  if (a.empty()) return {};
  Coeffs out(a.size() + 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + 1] += Rational(-s) * a[i];
  }
  trim(out);
  return out;
}

// Divides by (1 - s*x) when possible, i.e. when p(1/s) = 0.
std::optional<Coeffs> div_linear(const Coeffs& a, int s) {
  if (a.empty()) return Coeffs{};
  // p = (1 - s*x) h  <=>  h_0 = p_0, h_k = p_k + s*h_{k-1}, remainder
  // p_n + s*h_{n-1} must vanish.
  Coeffs h(a.size() - 1, Rational(0));
  Rational carry(0);
  for (size_t k = 0; k + 1 < a.size(); ++k) {
    carry = a[k] + Rational(s) * carry;
    h[k] = carry;
  }
  Rational rem = a.back() + Rational(s) * carry;
  if (!rem.is_zero()) return std::nullopt;
  trim(h);
  return h;
}

Coeffs diff_coeffs(const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs out(a.size() - 1, Rational(0));
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
  return out;
}

double horner(const Coeffs& a, double x) {
  double v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i].to_double();
  return v;
}

}  // namespace

WeightedPoly::WeightedPoly(int e_minus, int e_plus, std::vector<Rational> coeffs)
    : em_(e_minus), ep_(e_plus), coeffs_(std::move(coeffs)) {
  trim(coeffs_);
  if (coeffs_.empty()) em_ = ep_ = 0;
}

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if ((a.em_ - b.em_) % 2 != 0 || (a.ep_ - b.ep_) % 2 != 0)
    fail(errc::parity_mismatch,
         "cannot add weights (" + std::to_string(a.em_) + "," + std::to_string(a.ep_) +
             ") and (" + std::to_string(b.em_) + "," + std::to_string(b.ep_) + ")");
  int em = std::min(a.em_, b.em_);
  int ep = std::min(a.ep_, b.ep_);
  Coeffs ca = a.coeffs_, cb = b.coeffs_;
  for (int k = 0; k < (a.em_ - em) / 2; ++k) ca = mul_linear(ca, +1);
  for (int k = 0; k < (a.ep_ - ep) / 2; ++k) ca = mul_linear(ca, -1);
  for (int k = 0; k < (b.em_ - em) / 2; ++k) cb = mul_linear(cb, +1);
  for (int k = 0; k < (b.ep_ - ep) / 2; ++k) cb = mul_linear(cb, -1);
  return WeightedPoly(em, ep, add_coeffs(ca, cb));
}

WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b) { return a + (-b); }

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return WeightedPoly(a.em_ + b.em_, a.ep_ + b.ep_, mul_coeffs(a.coeffs_, b.coeffs_));
}

WeightedPoly WeightedPoly::scaled(const Rational& c) const {
  if (c.is_zero() || is_zero()) return {};
  Coeffs out = coeffs_;
  for (auto& v : out) v *= c;
  return WeightedPoly(em_, ep_, std::move(out));
}

WeightedPoly WeightedPoly::derivative() const {
  if (is_zero()) return {};
  // d/dx [(1-x)^(em/2) (1+x)^(ep/2) p] =
  //   (1-x)^(em/2-1) (1+x)^(ep/2-1) *
  //     [ -em/2 (1+x) p + ep/2 (1-x) p + (1-x)(1+x) p' ]
  Coeffs bracket = add_coeffs(
      add_coeffs([&] {
                   Coeffs t = mul_linear(coeffs_, -1);  // (1+x) p
                   for (auto& v : t) v *= Rational(-em_, 2);
                   return t;
                 }(),
                 [&] {
                   Coeffs t = mul_linear(coeffs_, +1);  // (1-x) p
                   for (auto& v : t) v *= Rational(ep_, 2);
                   return t;
                 }()),
      mul_linear(mul_linear(diff_coeffs(coeffs_), +1), -1));
  return WeightedPoly(em_ - 2, ep_ - 2, std::move(bracket)).canonicalized();
}

WeightedPoly WeightedPoly::canonicalized() const {
  if (is_zero()) return {};
  int em = em_, ep = ep_;
  Coeffs c = coeffs_;
  while (true) {
    auto h = div_linear(c, +1);
    if (!h) break;
    c = std::move(*h);
    em += 2;
  }
  while (true) {
    auto h = div_linear(c, -1);
    if (!h) break;
    c = std::move(*h);
    ep += 2;
  }
  return WeightedPoly(em, ep, std::move(c));
}

WeightedPoly WeightedPoly::normalized_exponents() const {
  WeightedPoly w = canonicalized();
  if (w.em_ < 0)
    fail(errc::not_divisible, "residual (1-x)^(" + std::to_string(w.em_) + "/2) factor");
  if (w.ep_ < 0)
    fail(errc::not_divisible, "residual (1+x)^(" + std::to_string(w.ep_) + "/2) factor");
  return w;
}

Rational WeightedPoly::integrate() const {
  WeightedPoly w = canonicalized();
  if (w.is_zero()) return 0;
  if (w.em_ < 0 || w.ep_ < 0 || w.em_ % 2 != 0 || w.ep_ % 2 != 0)
    fail(errc::non_polynomial_integrand,
         "weights (" + std::to_string(w.em_) + "," + std::to_string(w.ep_) + ")/2");
  Coeffs c = w.coeffs_;
  for (int k = 0; k < w.em_ / 2; ++k) c = mul_linear(c, +1);
  for (int k = 0; k < w.ep_ / 2; ++k) c = mul_linear(c, -1);
  Rational total(0);
  for (size_t k = 0; k < c.size(); k += 2)
    total += c[k] * Rational(2, static_cast<long>(k) + 1);
  return total;
}

WeightedPoly WeightedPoly::reflected() const {
  Coeffs out = coeffs_;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return WeightedPoly(ep_, em_, std::move(out));
}

double WeightedPoly::evaluate(double x) const {
  if (x < -1.0 || x > 1.0) fail(errc::domain_error, "evaluation outside [-1, 1]");
  if (is_zero()) return 0.0;
  if (x == 1.0) {
    if (em_ < 0) fail(errc::pole_at_endpoint, "pole at x = 1");
    if (em_ > 0) return 0.0;
    return horner(coeffs_, x) * std::pow(2.0, ep_ / 2.0);
  }
  if (x == -1.0) {
    if (ep_ < 0) fail(errc::pole_at_endpoint, "pole at x = -1");
    if (ep_ > 0) return 0.0;
    return horner(coeffs_, x) * std::pow(2.0, em_ / 2.0);
  }
  return std::pow(1.0 - x, em_ / 2.0) * std::pow(1.0 + x, ep_ / 2.0) * horner(coeffs_, x);
}

bool WeightedPoly::value_equal(const WeightedPoly& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  if ((em_ - other.em_) % 2 != 0 || (ep_ - other.ep_) % 2 != 0) return false;
  return (*this - other).is_zero();
}

std::string WeightedPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto weight = [&](const char* base, int e) {
    if (e == 0) return;
    out += std::string(base);
    if (e != 2) {
      out += "^(" + std::to_string(e) + "/2)";
    }
    out += " ";
  };
  weight("(1-x)", em_);
  weight("(1+x)", ep_);
  std::string poly;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    Rational c = coeffs_[k];
    if (!first) {
      poly += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    } else if (c.sign() < 0 && k > 0) {
      poly += "-";
      c = -c;
    }
    if (k == 0) {
      poly += c.str();
    } else {
      if (!(c == Rational(1))) poly += c.str() + "*";
      poly += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    first = false;
  }
  if (coeffs_.size() > 1 && !out.empty()) poly = "(" + poly + ")";
  return out + poly;
}

}  // namespace ajf
