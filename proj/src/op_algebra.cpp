#include "op_algebra.hpp"

namespace ajf {

OperatorExpr OperatorExpr::scalar(const RadicalScalar& c) {
  OperatorExpr e;
  if (!c.is_zero()) e.terms_.push_back({c, {}});
  return e;
}

OperatorExpr OperatorExpr::generator(Gen g) {
  OperatorExpr e;
  e.terms_.push_back({RadicalScalar(1), {g}});
  return e;
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out = a;
  for (const auto& t : b.terms_) out.terms_.push_back(t);
  return out;
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return a + (-b); }

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      OpTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.word = ta.word;
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

OperatorExpr OperatorExpr::scaled(const RadicalScalar& c) const {
  OperatorExpr out = *this;
  if (c.is_zero()) return OperatorExpr();
  for (auto& t : out.terms_) t.coeff = t.coeff * c;
  return out;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += "(" + terms_[i].coeff.str() + ")";
    for (Gen g : terms_[i].word) out += " " + gen_name(g);
  }
  return out;
}

BasisImage apply_word(std::span<const Gen> word, const JmqTriple& t) {
  RadicalScalar coef(Rational(1));
  JmqTriple cur = t;
  for (size_t i = word.size(); i-- > 0;) {
    ClosedAction act = apply_closed(word[i], cur);
    if (act.annihilated()) return {};
    coef = coef * act.coef;
    cur = *act.target;
  }
  return {{cur, std::move(coef)}};
}

BasisImage apply_expr(const OperatorExpr& e, const JmqTriple& t) {
  BasisImage out;
  for (const auto& term : e.terms()) {
    for (auto& [label, coef] : apply_word(term.word, t)) {
      RadicalScalar v = term.coeff * coef;
      auto it = out.find(label);
      if (it == out.end()) {
        if (!v.is_zero()) out.emplace(label, std::move(v));
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

BasisWindow BasisWindow::make(int two_j_max) {
  return {two_j_max, basis_window(two_j_max)};
}

bool OperatorMatrix::is_zero() const {
  for (const auto& col : cols)
    if (!col.empty()) return false;
  return !has_leakage();
}

bool OperatorMatrix::has_leakage() const {
  for (const auto& l : leakage)
    if (!l.empty()) return true;
  return false;
}

std::string OperatorMatrix::first_nonzero() const {
  for (size_t c = 0; c < cols.size(); ++c) {
    if (!cols[c].empty()) {
      const auto& [row, v] = *cols[c].begin();
      return "<" + window->labels[row].str() + "| . |" + window->labels[c].str() +
             "> = " + v.str();
    }
    if (!leakage[c].empty()) {
      const auto& [label, v] = leakage[c].front();
      return "out-of-window <" + label.str() + "| . |" + window->labels[c].str() +
             "> = " + v.str();
    }
  }
  return "";
}

OperatorMatrix operator_matrix(const OperatorExpr& e, const BasisWindow& w) {
  std::map<JmqTriple, size_t> index;
  for (size_t i = 0; i < w.labels.size(); ++i) index.emplace(w.labels[i], i);
  OperatorMatrix m;
  m.window = &w;
  m.cols.resize(w.labels.size());
  m.leakage.resize(w.labels.size());
  for (size_t c = 0; c < w.labels.size(); ++c) {
    for (auto& [label, coef] : apply_expr(e, w.labels[c])) {
      auto it = index.find(label);
      if (it == index.end()) {
        m.leakage[c].emplace_back(label, std::move(coef));
      } else {
        m.cols[c].emplace(it->second, std::move(coef));
      }
    }
  }
  return m;
}

namespace {

OperatorExpr gen(Gen g) { return OperatorExpr::generator(g); }
OperatorExpr num(const Rational& r) { return OperatorExpr::scalar(RadicalScalar(r)); }

// Affine Cartan combination c_j J + c_m M + c_q Q + c_1.
OperatorExpr cartan(const Rational& cj, const Rational& cm, const Rational& cq,
                    const Rational& c1) {
  return gen(Gen::J).scaled(RadicalScalar(cj)) + gen(Gen::M).scaled(RadicalScalar(cm)) +
         gen(Gen::Q).scaled(RadicalScalar(cq)) + num(c1);
}

OperatorExpr third_element(Gen plus) {
  switch (plus) {
    case Gen::APlus: return gen(Gen::M);
    case Gen::BPlus: return gen(Gen::Q);
    case Gen::CPlus: return cartan(1, Rational(1, 2), Rational(1, 2), Rational(1, 2));
    case Gen::DPlus: return cartan(1, Rational(1, 2), Rational(-1, 2), Rational(1, 2));
    case Gen::EPlus: return cartan(1, Rational(-1, 2), Rational(1, 2), Rational(1, 2));
    case Gen::FPlus: return cartan(1, Rational(-1, 2), Rational(-1, 2), Rational(1, 2));
    case Gen::KPlus: return cartan(1, 0, 0, Rational(1, 2));
    default: fail(errc::internal, "no third element for " + gen_name(plus));
  }
}

}  // namespace

const char* casimir_name(CasimirKind k) {
  switch (k) {
    case CasimirKind::suA: return "suA";
    case CasimirKind::suB: return "suB";
    case CasimirKind::suC: return "suC";
    case CasimirKind::suD: return "suD";
    case CasimirKind::suE: return "suE";
    case CasimirKind::suF: return "suF";
    case CasimirKind::suK: return "suK";
    case CasimirKind::su22: return "su22";
  }
  return "?";
}

OperatorExpr casimir_expr(CasimirKind k) {
  auto acomm = [](Gen p, Gen m) {
    return OperatorExpr::anticommutator(gen(p), gen(m));
  };
  auto su2 = [&](Gen p, Gen m) {
    OperatorExpr h = third_element(p);
    return h * h + acomm(p, m).scaled(RadicalScalar(Rational(1, 2)));
  };
  auto su11 = [&](Gen p, Gen m) {
    OperatorExpr h = third_element(p);
    return h * h - acomm(p, m).scaled(RadicalScalar(Rational(1, 2)));
  };
  switch (k) {
    case CasimirKind::suA: return su2(Gen::APlus, Gen::AMinus);
    case CasimirKind::suB: return su2(Gen::BPlus, Gen::BMinus);
    case CasimirKind::suC: return su11(Gen::CPlus, Gen::CMinus);
    case CasimirKind::suD: return su11(Gen::DPlus, Gen::DMinus);
    case CasimirKind::suE: return su11(Gen::EPlus, Gen::EMinus);
    case CasimirKind::suF: return su11(Gen::FPlus, Gen::FMinus);
    case CasimirKind::suK: return su11(Gen::KPlus, Gen::KMinus);
    case CasimirKind::su22: {
      OperatorExpr ladders =
          (acomm(Gen::APlus, Gen::AMinus) + acomm(Gen::BPlus, Gen::BMinus) -
           acomm(Gen::CPlus, Gen::CMinus) - acomm(Gen::DPlus, Gen::DMinus) -
           acomm(Gen::EPlus, Gen::EMinus) - acomm(Gen::FPlus, Gen::FMinus))
              .scaled(RadicalScalar(Rational(1, 2)));
      return ladders + (gen(Gen::J) * gen(Gen::J)).scaled(RadicalScalar(Rational(2))) +
             gen(Gen::J).scaled(RadicalScalar(Rational(2))) + gen(Gen::M) * gen(Gen::M) +
             gen(Gen::Q) * gen(Gen::Q) + num(Rational(1, 2));
    }
  }
  fail(errc::internal, "unreachable casimir kind");
}

Rational casimir_eigenvalue(CasimirKind k, const JmqTriple& t) {
  const Rational j = t.j().to_rational();
  const Rational m = t.m().to_rational();
  const Rational q = t.q().to_rational();
  switch (k) {
    case CasimirKind::suA:
    case CasimirKind::suB: return j * (j + 1);
    case CasimirKind::suC:
    case CasimirKind::suF: return ((m + q) * (m + q) - 1) / Rational(4);
    case CasimirKind::suD:
    case CasimirKind::suE: return ((m - q) * (m - q) - 1) / Rational(4);
    case CasimirKind::suK: {
      Rational d = (t.m().abs() >= t.q().abs() ? t.m() : t.q()).to_rational();
      return d * d - Rational(1, 4);
    }
    case CasimirKind::su22: return Rational(-3, 2);
  }
  fail(errc::internal, "unreachable casimir kind");
}

RadicalScalar casimir_apply(CasimirKind k, const JmqTriple& t) {
  BasisImage image = apply_expr(casimir_expr(k), t);
  for (const auto& [label, coef] : image) {
    if (!(label == t))
      fail(errc::internal, std::string(casimir_name(k)) + " has off-diagonal residue <" +
                               label.str() + "| . |" + t.str() + "> = " + coef.str());
  }
  auto it = image.find(t);
  return it == image.end() ? RadicalScalar() : it->second;
}

bool factorization_check(FactorPair p, const JmqTriple& t) {
  const Rational j = t.j().to_rational();
  const Rational m = t.m().to_rational();
  const Rational q = t.q().to_rational();
  Gen up, down;
  Rational eig_pm, eig_mp;  // eigenvalues of (up down) and (down up)
  switch (p) {
    case FactorPair::A:
      up = Gen::APlus; down = Gen::AMinus;
      eig_pm = (j + m) * (j - m + 1);
      eig_mp = (j - m) * (j + m + 1);
      break;
    case FactorPair::B:
      up = Gen::BPlus; down = Gen::BMinus;
      eig_pm = (j + q) * (j - q + 1);
      eig_mp = (j - q) * (j + q + 1);
      break;
    case FactorPair::C:
      up = Gen::CPlus; down = Gen::CMinus;
      eig_pm = (j + m) * (j + q);
      eig_mp = (j + 1 + m) * (j + 1 + q);
      break;
  }
  auto diagonal_equals = [&](const OperatorExpr& e, const Rational& expect) {
    BasisImage image = apply_expr(e, t);
    if (expect.is_zero()) return image.empty();
    if (image.size() != 1) return false;
    const auto& [label, coef] = *image.begin();
    return label == t && coef == RadicalScalar(expect);
  };
  return diagonal_equals(gen(up) * gen(down), eig_pm) &&
         diagonal_equals(gen(down) * gen(up), eig_mp);
}

namespace {

std::vector<CommutatorRelation> build_table() {
  std::vector<CommutatorRelation> table;
  auto add = [&](Gen a, Gen b, const OperatorExpr& rhs, const std::string& rhs_text) {
    table.push_back({"[" + gen_name(a) + "," + gen_name(b) + "] = " + rhs_text, a, b, rhs});
  };
  auto half = [](int s) { return Rational(s, 2); };

  const Gen cartans[] = {Gen::J, Gen::M, Gen::Q};
  const Gen ladders[] = {Gen::APlus, Gen::AMinus, Gen::BPlus, Gen::BMinus,
                         Gen::CPlus, Gen::CMinus, Gen::DPlus, Gen::DMinus,
                         Gen::EPlus, Gen::EMinus, Gen::FPlus, Gen::FMinus};

  // Cartan-Cartan
  add(Gen::J, Gen::M, {}, "0");
  add(Gen::J, Gen::Q, {}, "0");
  add(Gen::M, Gen::Q, {}, "0");

  // A Cartan element commutes into the root value of the ladder: the shift
  // that the ladder applies to the corresponding eigenvalue.
  for (Gen h : cartans) {
    for (Gen x : ladders) {
      LabelShift s = gen_shift(x);
      int twice = h == Gen::J ? s.dj : h == Gen::M ? s.dm : s.dq;
      if (twice == 0) {
        add(h, x, {}, "0");
      } else {
        Rational c = half(twice);
        add(h, x, gen(x).scaled(RadicalScalar(c)), c.str() + "*" + gen_name(x));
      }
    }
  }

  // Ladder pairs within one family: su(2) for A and B, su(1,1) for the rest.
  add(Gen::APlus, Gen::AMinus, gen(Gen::M).scaled(RadicalScalar(Rational(2))), "2*M");
  add(Gen::BPlus, Gen::BMinus, gen(Gen::Q).scaled(RadicalScalar(Rational(2))), "2*Q");
  add(Gen::CPlus, Gen::CMinus, cartan(-2, -1, -1, -1), "-(2J+M+Q+1)");
  add(Gen::DPlus, Gen::DMinus, cartan(-2, -1, 1, -1), "-(2J+M-Q+1)");
  add(Gen::EPlus, Gen::EMinus, cartan(-2, 1, -1, -1), "-(2J-M+Q+1)");
  add(Gen::FPlus, Gen::FMinus, cartan(-2, 1, 1, -1), "-(2J-M-Q+1)");

  // Cross-family relations. sign = 0 encodes a vanishing bracket.
  struct Cross {
    Gen a, b;
    int sign;
    Gen rhs;
  };
  const Cross cross[] = {
      {Gen::APlus, Gen::BPlus, 0, Gen::J},    {Gen::APlus, Gen::BMinus, 0, Gen::J},
      {Gen::AMinus, Gen::BPlus, 0, Gen::J},   {Gen::AMinus, Gen::BMinus, 0, Gen::J},
      {Gen::APlus, Gen::CPlus, 0, Gen::J},    {Gen::AMinus, Gen::CMinus, 0, Gen::J},
      {Gen::APlus, Gen::CMinus, +1, Gen::EMinus},
      {Gen::AMinus, Gen::CPlus, -1, Gen::EPlus},
      {Gen::APlus, Gen::DPlus, 0, Gen::J},    {Gen::AMinus, Gen::DMinus, 0, Gen::J},
      {Gen::APlus, Gen::DMinus, -1, Gen::FMinus},
      {Gen::AMinus, Gen::DPlus, +1, Gen::FPlus},
      {Gen::APlus, Gen::EPlus, +1, Gen::CPlus},
      {Gen::AMinus, Gen::EMinus, -1, Gen::CMinus},
      {Gen::APlus, Gen::EMinus, 0, Gen::J},   {Gen::AMinus, Gen::EPlus, 0, Gen::J},
      {Gen::APlus, Gen::FPlus, +1, Gen::DPlus},
      {Gen::AMinus, Gen::FMinus, -1, Gen::DMinus},
      {Gen::APlus, Gen::FMinus, 0, Gen::J},   {Gen::AMinus, Gen::FPlus, 0, Gen::J},
      {Gen::BPlus, Gen::CPlus, 0, Gen::J},    {Gen::BMinus, Gen::CMinus, 0, Gen::J},
      {Gen::BPlus, Gen::CMinus, -1, Gen::DMinus},
      {Gen::BMinus, Gen::CPlus, +1, Gen::DPlus},
      {Gen::BPlus, Gen::DPlus, +1, Gen::CPlus},
      {Gen::BMinus, Gen::DMinus, -1, Gen::CMinus},
      {Gen::BPlus, Gen::DMinus, 0, Gen::J},   {Gen::BMinus, Gen::DPlus, 0, Gen::J},
      {Gen::BPlus, Gen::EPlus, 0, Gen::J},    {Gen::BMinus, Gen::EMinus, 0, Gen::J},
      {Gen::BPlus, Gen::EMinus, -1, Gen::FMinus},
      {Gen::BMinus, Gen::EPlus, +1, Gen::FPlus},
      {Gen::BPlus, Gen::FPlus, +1, Gen::EPlus},
      {Gen::BMinus, Gen::FMinus, -1, Gen::EMinus},
      {Gen::BPlus, Gen::FMinus, 0, Gen::J},   {Gen::BMinus, Gen::FPlus, 0, Gen::J},
      {Gen::CPlus, Gen::DPlus, 0, Gen::J},    {Gen::CMinus, Gen::DMinus, 0, Gen::J},
      {Gen::CPlus, Gen::DMinus, -1, Gen::BPlus},
      {Gen::CMinus, Gen::DPlus, +1, Gen::BMinus},
      {Gen::CPlus, Gen::EPlus, 0, Gen::J},    {Gen::CMinus, Gen::EMinus, 0, Gen::J},
      {Gen::CPlus, Gen::EMinus, -1, Gen::APlus},
      {Gen::CMinus, Gen::EPlus, +1, Gen::AMinus},
      {Gen::CPlus, Gen::FPlus, 0, Gen::J},    {Gen::CMinus, Gen::FMinus, 0, Gen::J},
      {Gen::CPlus, Gen::FMinus, 0, Gen::J},   {Gen::CMinus, Gen::FPlus, 0, Gen::J},
      {Gen::DPlus, Gen::EPlus, 0, Gen::J},    {Gen::DMinus, Gen::EMinus, 0, Gen::J},
      {Gen::DPlus, Gen::EMinus, 0, Gen::J},   {Gen::DMinus, Gen::EPlus, 0, Gen::J},
      {Gen::DPlus, Gen::FPlus, 0, Gen::J},    {Gen::DMinus, Gen::FMinus, 0, Gen::J},
      {Gen::DPlus, Gen::FMinus, -1, Gen::APlus},
      {Gen::DMinus, Gen::FPlus, +1, Gen::AMinus},
      {Gen::EPlus, Gen::FPlus, 0, Gen::J},    {Gen::EMinus, Gen::FMinus, 0, Gen::J},
      {Gen::EPlus, Gen::FMinus, -1, Gen::BPlus},
      {Gen::EMinus, Gen::FPlus, +1, Gen::BMinus},
  };
  for (const Cross& c : cross) {
    if (c.sign == 0) {
      add(c.a, c.b, {}, "0");
    } else {
      Rational s(c.sign);
      add(c.a, c.b, gen(c.rhs).scaled(RadicalScalar(s)),
          (c.sign > 0 ? "" : "-") + gen_name(c.rhs));
    }
  }
  return table;
}

}  // namespace

const std::vector<CommutatorRelation>& commutator_table() {
  static const std::vector<CommutatorRelation> table = build_table();
  return table;
}

}  // namespace ajf
