#include "labels.hpp"

#include <charconv>

namespace ajf {

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> int {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      fail(errc::parse_error, "not an integer: '" + std::string(s) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text));
  int num = parse_int(text.substr(0, slash));
  int den = parse_int(text.substr(slash + 1));
  if (den == 2) return HalfInt::from_twice(num);
  if (den == 1) return HalfInt(num);
  fail(errc::parse_error, "half-integer denominator must be 1 or 2: '" + std::string(text) + "'");
}

const char* JmqTriple::first_violation(int two_j, int two_m, int two_q) {
  if (two_j < 0) return "2j must be a non-negative integer";
  if (std::abs(two_m) > two_j) return "j >= |m| violated";
  if (std::abs(two_q) > two_j) return "j >= |q| violated";
  if ((two_j - two_m) % 2 != 0) return "j - m must be a non-negative integer";
  if ((two_j - two_q) % 2 != 0) return "j - q must be a non-negative integer";
  return nullptr;
}

bool JmqTriple::valid(int two_j, int two_m, int two_q) {
  return first_violation(two_j, two_m, two_q) == nullptr;
}

JmqTriple JmqTriple::make(int two_j, int two_m, int two_q) {
  if (const char* why = first_violation(two_j, two_m, two_q)) {
    fail(errc::condition_violation,
         std::string(why) + " for (2j,2m,2q)=(" + std::to_string(two_j) + "," +
             std::to_string(two_m) + "," + std::to_string(two_q) + ")");
  }
  return JmqTriple(HalfInt::from_twice(two_j), HalfInt::from_twice(two_m),
                   HalfInt::from_twice(two_q));
}

std::optional<JmqTriple> JmqTriple::try_make(int two_j, int two_m, int two_q) {
  if (!valid(two_j, two_m, two_q)) return std::nullopt;
  return make(two_j, two_m, two_q);
}

std::string JmqTriple::str() const {
  return "j=" + j_.str() + ",m=" + m_.str() + ",q=" + q_.str();
}

NabTriple NabTriple::make(long n, long alpha, long beta) {
  if (n < 0) fail(errc::condition_violation, "n must be non-negative");
  if (alpha < -n) fail(errc::condition_violation, "alpha >= -n violated");
  if (beta < -n) fail(errc::condition_violation, "beta >= -n violated");
  if (alpha + beta < -n) fail(errc::condition_violation, "alpha + beta >= -n violated");
  return NabTriple(n, alpha, beta);
}

JmqTriple jmq_from_nab(const NabTriple& t) {
  // 2j = 2n + alpha + beta, 2m = alpha + beta, 2q = alpha - beta
  long two_j = 2 * t.n() + t.alpha() + t.beta();
  long two_m = t.alpha() + t.beta();
  long two_q = t.alpha() - t.beta();
  return JmqTriple::make(static_cast<int>(two_j), static_cast<int>(two_m),
                         static_cast<int>(two_q));
}

NabTriple nab_from_jmq(const JmqTriple& t) {
  // All three are exact integers on a valid triple.
  long n = (t.two_j() - t.two_m()) / 2;
  long alpha = (t.two_m() + t.two_q()) / 2;
  long beta = (t.two_m() - t.two_q()) / 2;
  return NabTriple::make(n, alpha, beta);
}

std::vector<JmqTriple> basis_window(int two_j_max) {
  if (two_j_max < 0) fail(errc::domain_error, "window bound must be non-negative");
  std::vector<JmqTriple> out;
  for (int two_j = 0; two_j <= two_j_max; ++two_j) {
    for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
      for (int two_q = two_j; two_q >= -two_j; two_q -= 2) {
        out.push_back(JmqTriple::make(two_j, two_m, two_q));
      }
    }
  }
  return out;
}

JmqTriple parse_jmq_text(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != 3)
    fail(errc::parse_error, "label must have three comma-separated fields: '" +
                                std::string(text) + "'");
  const char* keys[3] = {"j=", "m=", "q="};
  int twice[3];
  for (int i = 0; i < 3; ++i) {
    std::string_view p = parts[i];
    while (!p.empty() && p.front() == ' ') p.remove_prefix(1);
    while (!p.empty() && p.back() == ' ') p.remove_suffix(1);
    if (p.starts_with(keys[i])) p.remove_prefix(2);
    twice[i] = HalfInt::parse(p).twice();
  }
  return JmqTriple::make(twice[0], twice[1], twice[2]);
}

std::string format_jmq_text(const JmqTriple& t) { return t.str(); }

}  // namespace ajf
