#pragma once

// The fifteen su(2,2) generators plus the derived K ladder pair, in both of
// their realizations on the labeled function space:
//
//  * closed form: each generator maps a basis label to a square-root
//    coefficient times a shifted label (or annihilates it);
//  * differential form: each generator is a first-order operator
//    prefactor * (cd(x) d/dx + ci(x)) with the Cartan operators replaced by
//    their eigenvalues, which is exact because they stand to the right of
//    x and d/dx in every generator.
//
// The two realizations must agree on every label; that agreement is one of
// the verification suites.

#include "funcspace.hpp"
#include "jacobi.hpp"
#include "labels.hpp"

namespace ajf {

enum class Gen {
  APlus, AMinus,   // m +- 1
  BPlus, BMinus,   // q +- 1
  CPlus, CMinus,   // (j, m, q) +- (1/2, 1/2, 1/2)
  DPlus, DMinus,   // (1/2, 1/2, -1/2) up, (-1/2, -1/2, 1/2) down
  EPlus, EMinus,   // (1/2, -1/2, 1/2) up
  FPlus, FMinus,   // (1/2, -1/2, -1/2) up
  J, M, Q,         // Cartan, diagonal
  KPlus, KMinus,   // j +- 1 at fixed (m, q)
};

inline constexpr Gen kAllGenerators[] = {
    Gen::APlus, Gen::AMinus, Gen::BPlus, Gen::BMinus, Gen::CPlus, Gen::CMinus,
    Gen::DPlus, Gen::DMinus, Gen::EPlus, Gen::EMinus, Gen::FPlus, Gen::FMinus,
    Gen::J,     Gen::M,      Gen::Q,     Gen::KPlus,  Gen::KMinus,
};

std::string gen_name(Gen g);                       // "A+", "K-", "J", ...
std::optional<Gen> gen_parse(std::string_view s);
bool is_cartan(Gen g);

// Doubled label shift (2dj, 2dm, 2dq) effected by the generator.
struct LabelShift {
  int dj, dm, dq;
};
LabelShift gen_shift(Gen g);

struct ClosedAction {
  RadicalScalar coef;               // zero <=> annihilated
  std::optional<JmqTriple> target;  // engaged iff coef is nonzero
  bool annihilated() const { return coef.is_zero(); }
};

// Closed-form action on a basis label. Cartan generators return their
// eigenvalue on the unchanged label; a vanishing coefficient and a shifted
// label leaving the lattice coincide, and both report annihilation.
ClosedAction apply_closed(Gen g, const JmqTriple& t);

// First-order differential realization at fixed rational eigenvalues. The
// eigenvalues are not restricted to the lattice so that substitution
// identities between the generators can be checked on a dense grid.
struct DiffOp {
  RadicalScalar prefactor;
  WeightedPoly d_coef;  // multiplies f'
  WeightedPoly i_coef;  // multiplies f
};
DiffOp diff_op(Gen g, const Rational& j, const Rational& m, const Rational& q);

// Applies the differential realization to a labeled function. Throws
// boundary_case for K- at j = |m| = |q|, where only the closed form (which
// annihilates) is defined.
LabeledFunction apply_diff(Gen g, const LabeledFunction& f);

// Checks the Weyl substitution identities
//   D+-(x, d/dx, m, q) =  C+-(-x, -d/dx, m, -q)
//   E+-(x, d/dx, m, q) =  C+-(-x, -d/dx, -m, q)
//   F+-(x, d/dx, m, q) = -C+-(x, d/dx, -m, -q)
// on the stored operator descriptions over a grid of eigenvalues; the
// coefficients are affine in (j, m, q), so the grid pins the identity.
bool weyl_substitution_check(Gen g);

// K ladder action at fixed (m, q): the coefficient involves the dominant
// label, sqrt((j+1)^2 - max(m,q)^2) upward and sqrt(j^2 - max(m,q)^2)
// downward, with annihilation at the bottom of the chain.
ClosedAction k_operator(const JmqTriple& t, int direction);

}  // namespace ajf
