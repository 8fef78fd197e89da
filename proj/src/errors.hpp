#pragma once

#include <stdexcept>
#include <string>

namespace ajf {

enum class errc {
  condition_violation,      // (j,m,q) or (n,alpha,beta) outside the admissible lattice
  negative_radicand,        // sqrt of a negative rational requested
  division_unsupported,     // radical division by zero or by a multi-term scalar
  parity_mismatch,          // sum of half-odd and integer weight functions
  not_divisible,            // negative weight exponent could not be cleared
  non_polynomial_integrand, // integrand is not a polynomial over [-1,1]
  pole_at_endpoint,         // evaluation at x = +-1 with a negative weight exponent
  domain_error,             // argument outside the documented domain
  dimension_mismatch,       // vector length does not match matrix dimension
  boundary_case,            // differential ladder form undefined at j = |m| = |q|
  non_rational_synthesis,   // synthesized function has an irrational residue
  parse_error,              // malformed text or JSON input
  unknown_suite,            // verification suite name not recognized
  internal,                 // invariant breach; indicates a defect
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::condition_violation:      return "condition_violation";
    case errc::negative_radicand:        return "negative_radicand";
    case errc::division_unsupported:     return "division_unsupported";
    case errc::parity_mismatch:          return "parity_mismatch";
    case errc::not_divisible:            return "not_divisible";
    case errc::non_polynomial_integrand: return "non_polynomial_integrand";
    case errc::pole_at_endpoint:         return "pole_at_endpoint";
    case errc::domain_error:             return "domain_error";
    case errc::dimension_mismatch:       return "dimension_mismatch";
    case errc::boundary_case:            return "boundary_case";
    case errc::non_rational_synthesis:   return "non_rational_synthesis";
    case errc::parse_error:              return "parse_error";
    case errc::unknown_suite:            return "unknown_suite";
    case errc::internal:                 return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

}  // namespace ajf
