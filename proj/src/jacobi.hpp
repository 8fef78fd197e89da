#pragma once

// Jacobi polynomials from the exact finite sum
//
//   J_n^(alpha,beta)(x) = sum_s C(n+alpha, s) C(n+beta, n-s)
//                                ((x+1)/2)^s ((x-1)/2)^(n-s)
//
// with generalized binomials C(a, s) = (a+1-s)_s / s!, valid for the negative
// integer alpha, beta the label lattice requires. The normalized functions
//
//   F_j^(m,q)(x) = sqrt((j+m)!(j-m)!/((j+q)!(j-q)!)) *
//                  ((1-x)/2)^((m+q)/2) ((1+x)/2)^((m-q)/2) J_(j-m)^(m+q,m-q)(x)
//
// carry the whole operator structure: the four label symmetries, the
// second-order defining equation, and the ladder actions built in generators.

#include "funcspace.hpp"
#include "labels.hpp"

namespace ajf {

// (a+1-s)_s / s!, exact for any integer a and s >= 0; zero exactly when the
// Pochhammer product contains a zero factor.
Rational gen_binomial(long a, long s);

// Plain polynomial (both weights zero), degree <= n.
WeightedPoly jacobi_poly(const NabTriple& t);

// The normalized weight-carrying function for a valid label.
LabeledFunction make_ajf(const JmqTriple& t);

// Extension to j < |m|, where the function vanishes identically. Requires
// 2j >= 0, matching label parities, and j >= |q|.
LabeledFunction make_ajf_hat(int two_j, int two_m, int two_q);

enum class Symmetry { swap_mq, negate_q, negate_m, negate_mq };

struct SymmetryImage {
  JmqTriple target;
  int sign;        // +1 or -1
  bool reflect_x;  // whether the argument is reflected x -> -x
};

// The four exact label symmetries:
//   F_j^(m,q)(x) =            F_j^(q,m)(x)
//   F_j^(m,q)(x) = (-1)^(j-m) F_j^(m,-q)(-x)
//   F_j^(m,q)(x) = (-1)^(j-q) F_j^(-m,q)(-x)
//   F_j^(m,q)(x) = (-1)^(m+q) F_j^(-m,-q)(x)
SymmetryImage symmetry_image(const JmqTriple& t, Symmetry which);

// Image of the second-order operator
//   -(1-x^2) d^2/dx^2 + 2x d/dx + (2mqx + m^2 + q^2)/(1-x^2) - j(j+1)
// applied to the body of make_ajf(t); identically zero for every valid label.
WeightedPoly ode_residual(const JmqTriple& t);

}  // namespace ajf
