#pragma once

// Quadratic forms F_{q^{m1}} -> F_q and their congruence invariants.

#include "qfcodes/gf_tower.hpp"
#include "qfcodes/linalg.hpp"

#include <optional>
#include <vector>

namespace qfcodes {

/// Tr_{q^{m1}/q}(coeff * x^{q^i + 1}), coeff in F_{q^{m1}}, i < m1.
struct FrobTerm {
  Index coeff = 0;
  unsigned i = 0;
};

/// c * Tr_{q^{m1}/q}(b x)^2, c in F_q, b in F_{q^{m1}}.
struct TraceSquareTerm {
  Index c = 0;
  Index b = 0;
};

struct QuadFormSpec {
  std::vector<FrobTerm> frob;
  std::vector<TraceSquareTerm> trsq;
  /// Optional symmetric m1 x m1 matrix over F_q, contributing xbar * G * xbar^T.
  std::optional<Matrix> gram;
};

class QuadForm {
 public:
  /// Throws ParameterError on malformed terms, UnsupportedInput if every coefficient is zero.
  QuadForm(FieldTower tower, QuadFormSpec spec);

  const FieldTower& tower() const { return tower_; }
  const QuadFormSpec& spec() const { return spec_; }

  Index eval(Index x) const { return values_[x]; }
  /// Term-by-term evaluation without the value table.
  Index eval_direct(Index x) const;
  /// Q(x) for every x in F_{q^{m1}}, indexed by element.
  const std::vector<Index>& values() const { return values_; }

  Index bilinear(Index x, Index y) const;
  /// B_Q(t^i, t^j) in the power basis of F_{q^{m1}} over F_q.
  Matrix gram() const;

 private:
  FieldTower tower_;
  QuadFormSpec spec_;
  std::vector<Index> values_;
};

struct QuadFormAnalysis {
  Matrix gram;
  std::vector<Index> diagonal;  // nonzero pivots of the congruence diagonalization
  unsigned rank = 0;
  Index delta = 1;  // product of diagonal, in F_q
  int eps_Q = 1;
  int eps = 1;
};

/// eps_Q * (-1)^{(p-1) m r / 4} for even r, eps_Q * (-1)^{(p-1) m (r+1) / 4} for odd r.
int derived_sign(unsigned p, unsigned m, unsigned rank, int eps_Q);

/// Symmetric congruence diagonalization of a Gram matrix over fq. Accepts rank 0.
QuadFormAnalysis diagonalize(const Field& fq, const Matrix& gram);

/// As diagonalize, but rejects the zero form with UnsupportedInput.
QuadFormAnalysis analyze_gram(const Field& fq, const Matrix& gram);
QuadFormAnalysis analyze(const QuadForm& Q);

/// Basis (power-basis coordinate rows) of the radical of B_Q.
Matrix radical(const QuadForm& Q);

}  // namespace qfcodes
