#pragma once

// Word algebra over the generators. An OperatorExpr is a finite radical-linear
// combination of generator words; applying a word to a basis label chains the
// closed-form actions exactly, with no window truncation anywhere, so matrix
// entries on a finite window are the entries of the infinite representation.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "generators.hpp"

namespace ajf {

struct OpTerm {
  RadicalScalar coeff;
  std::vector<Gen> word;  // rightmost factor acts first
};

class OperatorExpr {
public:
  OperatorExpr() = default;  // zero
  static OperatorExpr scalar(const RadicalScalar& c);
  static OperatorExpr generator(Gen g);
  static OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
    return a * b - b * a;
  }
  static OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) {
    return a * b + b * a;
  }

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  OperatorExpr operator-() const;
  OperatorExpr scaled(const RadicalScalar& c) const;

  const std::vector<OpTerm>& terms() const { return terms_; }
  std::string str() const;

private:
  std::vector<OpTerm> terms_;
};

// Image of a basis element under an expression: a finite combination of
// basis labels with exact coefficients. Zero coefficients are dropped.
using BasisImage = std::map<JmqTriple, RadicalScalar>;

BasisImage apply_word(std::span<const Gen> word, const JmqTriple& t);
BasisImage apply_expr(const OperatorExpr& e, const JmqTriple& t);

struct BasisWindow {
  int two_j_max = 0;
  std::vector<JmqTriple> labels;

  static BasisWindow make(int two_j_max);
  bool contains(const JmqTriple& t) const { return t.two_j() <= two_j_max; }
  size_t size() const { return labels.size(); }
};

// Sparse matrix of an expression on a window. Column t collects the image of
// t; image components leaving the window are kept separately as leakage
// rather than silently dropped, so a zero check can cover them too.
struct OperatorMatrix {
  const BasisWindow* window = nullptr;
  std::vector<std::map<size_t, RadicalScalar>> cols;
  std::vector<std::vector<std::pair<JmqTriple, RadicalScalar>>> leakage;

  bool is_zero() const;          // no in-window entries and no leakage
  bool has_leakage() const;
  // First nonzero position as text, for diagnostics; empty when zero.
  std::string first_nonzero() const;
};

OperatorMatrix operator_matrix(const OperatorExpr& e, const BasisWindow& w);

enum class CasimirKind { suA, suB, suC, suD, suE, suF, suK, su22 };

const char* casimir_name(CasimirKind k);
OperatorExpr casimir_expr(CasimirKind k);
// Expected eigenvalue on a given label.
Rational casimir_eigenvalue(CasimirKind k, const JmqTriple& t);
// Applies the Casimir and checks the image is exactly eigenvalue * identity;
// throws internal on any off-diagonal residue.
RadicalScalar casimir_apply(CasimirKind k, const JmqTriple& t);

enum class FactorPair { A, B, C };

// Checks both diagonal products of the ladder pair against their closed
// eigenvalues, e.g. A+A- = (j+m)(j-m+1) and A-A+ = (j-m)(j+m+1).
bool factorization_check(FactorPair p, const JmqTriple& t);

// One relation of the full commutator table: [a, b] - rhs = 0.
struct CommutatorRelation {
  std::string id;
  Gen a, b;
  OperatorExpr rhs;
};

// The complete machine-verified table over the fifteen generators, 105
// unordered pairs. Signs follow the verified ground truth.
const std::vector<CommutatorRelation>& commutator_table();

}  // namespace ajf
