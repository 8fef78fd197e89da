#include "generators.hpp"

#include <array>

namespace ajf {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::APlus: return "A+";
    case Gen::AMinus: return "A-";
    case Gen::BPlus: return "B+";
    case Gen::BMinus: return "B-";
    case Gen::CPlus: return "C+";
    case Gen::CMinus: return "C-";
    case Gen::DPlus: return "D+";
    case Gen::DMinus: return "D-";
    case Gen::EPlus: return "E+";
    case Gen::EMinus: return "E-";
    case Gen::FPlus: return "F+";
    case Gen::FMinus: return "F-";
    case Gen::J: return "J";
    case Gen::M: return "M";
    case Gen::Q: return "Q";
    case Gen::KPlus: return "K+";
    case Gen::KMinus: return "K-";
  }
  return "?";
}

std::optional<Gen> gen_parse(std::string_view s) {
  for (Gen g : kAllGenerators)
    if (gen_name(g) == s) return g;
  return std::nullopt;
}

bool is_cartan(Gen g) { return g == Gen::J || g == Gen::M || g == Gen::Q; }

LabelShift gen_shift(Gen g) {
  switch (g) {
    case Gen::APlus: return {0, 2, 0};
    case Gen::AMinus: return {0, -2, 0};
    case Gen::BPlus: return {0, 0, 2};
    case Gen::BMinus: return {0, 0, -2};
    case Gen::CPlus: return {1, 1, 1};
    case Gen::CMinus: return {-1, -1, -1};
    case Gen::DPlus: return {1, 1, -1};
    case Gen::DMinus: return {-1, -1, 1};
    case Gen::EPlus: return {1, -1, 1};
    case Gen::EMinus: return {-1, 1, -1};
    case Gen::FPlus: return {1, -1, -1};
    case Gen::FMinus: return {-1, 1, 1};
    case Gen::J:
    case Gen::M:
    case Gen::Q: return {0, 0, 0};
    case Gen::KPlus: return {2, 0, 0};
    case Gen::KMinus: return {-2, 0, 0};
  }
  fail(errc::internal, "unreachable generator");
}

namespace {

ClosedAction shifted_action(const JmqTriple& t, Gen g, const Rational& radicand) {
  if (radicand.sign() < 0)
    fail(errc::internal, "negative ladder radicand at " + t.str());
  RadicalScalar coef = RadicalScalar::sqrt_of(radicand);
  if (coef.is_zero()) return {RadicalScalar(), std::nullopt};
  LabelShift d = gen_shift(g);
  // A nonzero coefficient implies the shifted label is admissible; make()
  // throwing here would expose a defect.
  JmqTriple target =
      JmqTriple::make(t.two_j() + d.dj, t.two_m() + d.dm, t.two_q() + d.dq);
  return {std::move(coef), target};
}

ClosedAction diagonal_action(const JmqTriple& t, const Rational& eigenvalue) {
  if (eigenvalue.is_zero()) return {RadicalScalar(), std::nullopt};
  return {RadicalScalar(eigenvalue), t};
}

}  // namespace

ClosedAction k_operator(const JmqTriple& t, int direction) {
  const Rational j = t.j().to_rational();
  // The action depends on the dominant of |m|, |q| only.
  const HalfInt dom = t.m().abs() >= t.q().abs() ? t.m().abs() : t.q().abs();
  const Rational d = dom.to_rational();
  if (direction > 0) return shifted_action(t, Gen::KPlus, (j + 1) * (j + 1) - d * d);
  return shifted_action(t, Gen::KMinus, j * j - d * d);
}

ClosedAction apply_closed(Gen g, const JmqTriple& t) {
  const Rational j = t.j().to_rational();
  const Rational m = t.m().to_rational();
  const Rational q = t.q().to_rational();
  switch (g) {
    case Gen::APlus: return shifted_action(t, g, (j - m) * (j + m + 1));
    case Gen::AMinus: return shifted_action(t, g, (j + m) * (j - m + 1));
    case Gen::BPlus: return shifted_action(t, g, (j - q) * (j + q + 1));
    case Gen::BMinus: return shifted_action(t, g, (j + q) * (j - q + 1));
    case Gen::CPlus: return shifted_action(t, g, (j + m + 1) * (j + q + 1));
    case Gen::CMinus: return shifted_action(t, g, (j + m) * (j + q));
    case Gen::DPlus: return shifted_action(t, g, (j + m + 1) * (j - q + 1));
    case Gen::DMinus: return shifted_action(t, g, (j + m) * (j - q));
    case Gen::EPlus: return shifted_action(t, g, (j - m + 1) * (j + q + 1));
    case Gen::EMinus: return shifted_action(t, g, (j - m) * (j + q));
    case Gen::FPlus: return shifted_action(t, g, (j - m + 1) * (j - q + 1));
    case Gen::FMinus: return shifted_action(t, g, (j - m) * (j - q));
    case Gen::J: return diagonal_action(t, j);
    case Gen::M: return diagonal_action(t, m);
    case Gen::Q: return diagonal_action(t, q);
    case Gen::KPlus: return k_operator(t, +1);
    case Gen::KMinus: return k_operator(t, -1);
  }
  fail(errc::internal, "unreachable generator");
}

namespace {

const RadicalScalar& inv_sqrt2() {
  static const RadicalScalar v = RadicalScalar::sqrt_of(Rational(1, 2));
  return v;
}

// sqrt(1-x^2) and its reciprocal as weighted polynomials
WeightedPoly root_both(int sign) { return WeightedPoly(sign, sign, {Rational(1)}); }

}  // namespace

DiffOp diff_op(Gen g, const Rational& j, const Rational& m, const Rational& q) {
  switch (g) {
    // A+- = +-sqrt(1-x^2) d/dx + (x m + q)/sqrt(1-x^2)
    case Gen::APlus:
      return {1, root_both(1), WeightedPoly(-1, -1, {q, m})};
    case Gen::AMinus:
      return {1, root_both(1).scaled(-1), WeightedPoly(-1, -1, {q, m})};
    // B+- = +-sqrt(1-x^2) d/dx + (x q + m)/sqrt(1-x^2)
    case Gen::BPlus:
      return {1, root_both(1), WeightedPoly(-1, -1, {m, q})};
    case Gen::BMinus:
      return {1, root_both(1).scaled(-1), WeightedPoly(-1, -1, {m, q})};
    // C+ = (1/sqrt2) [ (1+x)sqrt(1-x) d/dx - (x(j+1) - (j+1+m+q))/sqrt(1-x) ]
    case Gen::CPlus:
      return {inv_sqrt2(), WeightedPoly(1, 0, {1, 1}),
              WeightedPoly(-1, 0, {j + 1 + m + q, -(j + 1)})};
    // C- = (1/sqrt2) [ -(1+x)sqrt(1-x) d/dx - (x j - (j+m+q))/sqrt(1-x) ]
    case Gen::CMinus:
      return {inv_sqrt2(), WeightedPoly(1, 0, {-1, -1}),
              WeightedPoly(-1, 0, {j + m + q, -j})};
    // D+ = (1/sqrt2) [ -(1-x)sqrt(1+x) d/dx + (x(j+1) + (j+1+m-q))/sqrt(1+x) ]
    case Gen::DPlus:
      return {inv_sqrt2(), WeightedPoly(0, 1, {-1, 1}),
              WeightedPoly(0, -1, {j + 1 + m - q, j + 1})};
    // D- = (1/sqrt2) [ (1-x)sqrt(1+x) d/dx + (x j + (j+m-q))/sqrt(1+x) ]
    case Gen::DMinus:
      return {inv_sqrt2(), WeightedPoly(0, 1, {1, -1}),
              WeightedPoly(0, -1, {j + m - q, j})};
    // E+ = (1/sqrt2) [ -(1-x)sqrt(1+x) d/dx + (x(j+1) + (j+1-m+q))/sqrt(1+x) ]
    case Gen::EPlus:
      return {inv_sqrt2(), WeightedPoly(0, 1, {-1, 1}),
              WeightedPoly(0, -1, {j + 1 - m + q, j + 1})};
    // E- = (1/sqrt2) [ (1-x)sqrt(1+x) d/dx + (x j + (j-m+q))/sqrt(1+x) ]
    case Gen::EMinus:
      return {inv_sqrt2(), WeightedPoly(0, 1, {1, -1}),
              WeightedPoly(0, -1, {j - m + q, j})};
    // F+ = (1/sqrt2) [ -(1+x)sqrt(1-x) d/dx + (x(j+1) - (j+1-m-q))/sqrt(1-x) ]
    case Gen::FPlus:
      return {inv_sqrt2(), WeightedPoly(1, 0, {-1, -1}),
              WeightedPoly(-1, 0, {-(j + 1 - m - q), j + 1})};
    // F- = (1/sqrt2) [ (1+x)sqrt(1-x) d/dx + (x j - (j-m-q))/sqrt(1-x) ]
    case Gen::FMinus:
      return {inv_sqrt2(), WeightedPoly(1, 0, {1, 1}),
              WeightedPoly(-1, 0, {-(j - m - q), j})};
    case Gen::J: return {1, WeightedPoly(), WeightedPoly::constant(j)};
    case Gen::M: return {1, WeightedPoly(), WeightedPoly::constant(m)};
    case Gen::Q: return {1, WeightedPoly(), WeightedPoly::constant(q)};
    // K+- = (-+(1-x^2) d/dx + x J' + mq/J') J'/sqrt(J'^2 - w^2), with
    // J' = j+1 (up) or j (down) and w the smaller of |m|, |q|.
    case Gen::KPlus:
    case Gen::KMinus: {
      const Rational w = m.abs() >= q.abs() ? q : m;
      if (g == Gen::KPlus) {
        RadicalScalar norm = RadicalScalar((j + 1)) *
                             RadicalScalar::sqrt_of((j + 1) * (j + 1) - w * w).inverse();
        return {std::move(norm), root_both(2).scaled(-1),
                WeightedPoly(0, 0, {m * q / (j + 1), j + 1})};
      }
      if (j * j == w * w)
        fail(errc::boundary_case,
             "K- differential form undefined at j = |m| = |q|");
      RadicalScalar norm =
          RadicalScalar(j) * RadicalScalar::sqrt_of(j * j - w * w).inverse();
      return {std::move(norm), root_both(2),
              WeightedPoly(0, 0, {m * q / j, j})};
    }
  }
  fail(errc::internal, "unreachable generator");
}

LabeledFunction apply_diff(Gen g, const LabeledFunction& f) {
  if (f.is_zero()) return LabeledFunction::zero();
  if (!f.label) fail(errc::domain_error, "unlabeled function");
  const JmqTriple& t = *f.label;
  DiffOp op = diff_op(g, t.j().to_rational(), t.m().to_rational(), t.q().to_rational());
  WeightedPoly body =
      (op.d_coef * f.body.derivative() + op.i_coef * f.body).normalized_exponents();
  ClosedAction closed = apply_closed(g, t);
  if (closed.annihilated()) {
    if (!body.is_zero())
      fail(errc::internal, gen_name(g) + " should annihilate " + t.str());
    return LabeledFunction::zero();
  }
  return LabeledFunction{closed.target, f.scale * op.prefactor, std::move(body)};
}

namespace {

bool diff_ops_equal(const DiffOp& a, const DiffOp& b) {
  return a.prefactor == b.prefactor && a.d_coef.value_equal(b.d_coef) &&
         a.i_coef.value_equal(b.i_coef);
}

// C-type operator with x -> -x, d/dx -> -d/dx applied.
DiffOp reflect_op(const DiffOp& op) {
  return {op.prefactor, op.d_coef.reflected().scaled(-1), op.i_coef.reflected()};
}

DiffOp negate_op(const DiffOp& op) {
  return {op.prefactor, op.d_coef.scaled(-1), op.i_coef.scaled(-1)};
}

}  // namespace

bool weyl_substitution_check(Gen g) {
  Gen c_image;
  bool reflect = false, negate = false, flip_m = false, flip_q = false;
  switch (g) {
    case Gen::DPlus: c_image = Gen::CPlus; reflect = true; flip_q = true; break;
    case Gen::DMinus: c_image = Gen::CMinus; reflect = true; flip_q = true; break;
    case Gen::EPlus: c_image = Gen::CPlus; reflect = true; flip_m = true; break;
    case Gen::EMinus: c_image = Gen::CMinus; reflect = true; flip_m = true; break;
    case Gen::FPlus: c_image = Gen::CPlus; negate = true; flip_m = true; flip_q = true; break;
    case Gen::FMinus: c_image = Gen::CMinus; negate = true; flip_m = true; flip_q = true; break;
    default:
      fail(errc::domain_error, "no substitution rule for " + gen_name(g));
  }
  // Operator coefficients are affine in the eigenvalues, so a small grid is
  // equivalent to the symbolic identity.
  const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (const Rational& j : grid) {
    for (const Rational& m : grid) {
      for (const Rational& q : grid) {
        DiffOp lhs = diff_op(g, j, m, q);
        DiffOp rhs = diff_op(c_image, j, flip_m ? -m : m, flip_q ? -q : q);
        if (reflect) rhs = reflect_op(rhs);
        if (negate) rhs = negate_op(rhs);
        if (!diff_ops_equal(lhs, rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace ajf
