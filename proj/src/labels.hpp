#pragma once

// Half-integer labels (j, m, q), the (n, alpha, beta) parameter triple of the
// classical Jacobi family, and the exact reparametrization between the two.
//
//   j = n + (alpha+beta)/2,   m = (alpha+beta)/2,   q = (alpha-beta)/2
//   n = j - m,                alpha = m + q,        beta = m - q
//
// A label triple is admissible when
//   j >= |m|,  j >= |q|,  2j in N,  j - m in N,  j - q in N
// which forces j, m, q to be simultaneously integer or half-odd-integer.

#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ajf {

// Exact half-integer, stored as twice its value. All arithmetic is integer
// arithmetic on the doubled representation.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT: implicit by design
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  double to_double() const { return twice_ / 2.0; }
  Rational to_rational() const { return Rational(twice_, 2); }

  std::string str() const;                       // "2", "-3/2"
  static HalfInt parse(std::string_view text);   // accepts "2", "4/2", "-3/2"

private:
  int twice_;
};

// Validated (j, m, q) triple. Instances always satisfy the five lattice
// conditions; no other construction path exists.
class JmqTriple {
public:
  static JmqTriple make(int two_j, int two_m, int two_q);
  static std::optional<JmqTriple> try_make(int two_j, int two_m, int two_q);
  static bool valid(int two_j, int two_m, int two_q);
  // Human-readable description of the first violated condition, or nullptr.
  static const char* first_violation(int two_j, int two_m, int two_q);

  HalfInt j() const { return j_; }
  HalfInt m() const { return m_; }
  HalfInt q() const { return q_; }
  int two_j() const { return j_.twice(); }
  int two_m() const { return m_.twice(); }
  int two_q() const { return q_.twice(); }

  friend bool operator==(const JmqTriple&, const JmqTriple&) = default;
  friend auto operator<=>(const JmqTriple&, const JmqTriple&) = default;

  std::string str() const;  // "j=3/2,m=1/2,q=-1/2"

private:
  JmqTriple(HalfInt j, HalfInt m, HalfInt q) : j_(j), m_(m), q_(q) {}
  HalfInt j_, m_, q_;
};

// Validated (n, alpha, beta) triple: n >= 0, alpha >= -n, beta >= -n,
// alpha + beta >= -n.
class NabTriple {
public:
  static NabTriple make(long n, long alpha, long beta);
  long n() const { return n_; }
  long alpha() const { return alpha_; }
  long beta() const { return beta_; }
  friend bool operator==(const NabTriple&, const NabTriple&) = default;

private:
  NabTriple(long n, long alpha, long beta) : n_(n), alpha_(alpha), beta_(beta) {}
  long n_, alpha_, beta_;
};

JmqTriple jmq_from_nab(const NabTriple& t);
NabTriple nab_from_jmq(const JmqTriple& t);

// All admissible triples with 2j <= two_j_max, ordered by ascending 2j and
// then by descending m and q inside each j shell.
std::vector<JmqTriple> basis_window(int two_j_max);

// CLI text form: "j=1/2,m=1/2,q=1/2" with the key prefixes optional.
JmqTriple parse_jmq_text(std::string_view text);
std::string format_jmq_text(const JmqTriple& t);

}  // namespace ajf
