#include "qfcodes/quadform.hpp"

#include "qfcodes/errors.hpp"

namespace qfcodes {

QuadForm::QuadForm(FieldTower tower, QuadFormSpec spec) : tower_(std::move(tower)), spec_(std::move(spec)) {
  const Field& f1 = *tower_.f1;
  const Field& fq = *tower_.fq;
  const unsigned m1 = tower_.params.m1;
  bool nonzero = false;
  for (const auto& t : spec_.frob) {
    if (t.i >= m1) throw ParameterError("Frobenius exponent index must be below m1");
    if (t.coeff >= f1.size()) throw ParameterError("Frobenius coefficient outside F_{q^m1}");
    nonzero |= t.coeff != 0;
  }
  for (const auto& t : spec_.trsq) {
    if (t.c >= fq.size()) throw ParameterError("trace-square scale outside F_q");
    if (t.b >= f1.size()) throw ParameterError("trace-square argument outside F_{q^m1}");
    nonzero |= t.c != 0 && t.b != 0;
  }
  if (spec_.gram) {
    const Matrix& g = *spec_.gram;
    if (g.size() != m1) throw ParameterError("Gram matrix must be m1 x m1");
    for (std::size_t i = 0; i < m1; ++i) {
      if (g[i].size() != m1) throw ParameterError("Gram matrix must be m1 x m1");
      for (std::size_t j = 0; j < m1; ++j) {
        if (g[i][j] >= fq.size()) throw ParameterError("Gram entry outside F_q");
        if (g[i][j] != g[j][i]) throw ParameterError("Gram matrix must be symmetric");
        nonzero |= g[i][j] != 0;
      }
    }
  }
  if (!nonzero) throw UnsupportedInput("quadratic form has no nonzero term");

  values_.resize(f1.size());
  for (Index x = 0; x < f1.size(); ++x) values_[x] = eval_direct(x);
}

Index QuadForm::eval_direct(Index x) const {
  const Field& f1 = *tower_.f1;
  const Field& fq = *tower_.fq;
  const std::uint64_t q = fq.size();
  Index acc = 0;
  for (const auto& t : spec_.frob) {
    std::uint64_t e = 1;
    for (unsigned k = 0; k < t.i; ++k) e *= q;
    Index v = f1.mul(t.coeff, f1.pow(x, e + 1));
    acc = fq.add(acc, f1.trace_to(fq, v));
  }
  for (const auto& t : spec_.trsq) {
    Index tr = f1.trace_to(fq, f1.mul(t.b, x));
    acc = fq.add(acc, fq.mul(t.c, fq.mul(tr, tr)));
  }
  if (spec_.gram) {
    const Matrix& g = *spec_.gram;
    auto xb = f1.coeffs(x);
    for (std::size_t i = 0; i < xb.size(); ++i) {
      if (xb[i] == 0) continue;
      for (std::size_t j = 0; j < xb.size(); ++j) acc = fq.add(acc, fq.mul(xb[i], fq.mul(g[i][j], xb[j])));
    }
  }
  return acc;
}

Index QuadForm::bilinear(Index x, Index y) const {
  const Field& fq = *tower_.fq;
  const Field& f1 = *tower_.f1;
  Index s = fq.sub(fq.sub(eval(f1.add(x, y)), eval(x)), eval(y));
  return fq.mul(s, fq.inv(fq.from_int(2)));
}

Matrix QuadForm::gram() const {
  const unsigned m1 = tower_.params.m1;
  const Index q = tower_.fq->size();
  std::vector<Index> basis(m1);
  Index t = 1;
  for (unsigned i = 0; i < m1; ++i, t *= q) basis[i] = t;
  Matrix g(m1, std::vector<Index>(m1));
  for (unsigned i = 0; i < m1; ++i)
    for (unsigned j = 0; j < m1; ++j) g[i][j] = bilinear(basis[i], basis[j]);
  return g;
}

int derived_sign(unsigned p, unsigned m, unsigned rank, int eps_Q) {
  const unsigned long long r = rank % 2 == 0 ? rank : rank + 1;
  const unsigned long long e = (unsigned long long)(p - 1) * m * r / 4;
  return (e % 2 == 0) ? eps_Q : -eps_Q;
}

QuadFormAnalysis diagonalize(const Field& fq, const Matrix& gram) {
  QuadFormAnalysis out;
  out.gram = gram;
  Matrix a = gram;
  const std::size_t n = a.size();
  auto swap_rc = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (a[i][i] != 0) piv = i;
    if (piv == n) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal
      // entry onto the diagonal, giving A_ii = 2 A_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a[pi][c] = fq.add(a[pi][c], a[pj][c]);
      for (std::size_t r = 0; r < n; ++r) a[r][pi] = fq.add(a[r][pi], a[r][pj]);
      piv = pi;
    }
    if (piv != k) swap_rc(piv, k);
    const Index inv_pivot = fq.inv(a[k][k]);
    for (std::size_t l = k + 1; l < n; ++l) {
      if (a[l][k] == 0) continue;
      const Index t = fq.mul(a[l][k], inv_pivot);
      for (std::size_t c = 0; c < n; ++c) a[l][c] = fq.sub(a[l][c], fq.mul(t, a[k][c]));
      for (std::size_t r = 0; r < n; ++r) a[r][l] = fq.sub(a[r][l], fq.mul(t, a[r][k]));
    }
    out.diagonal.push_back(a[k][k]);
  }
  out.rank = unsigned(out.diagonal.size());
  out.delta = 1;
  for (Index d : out.diagonal) out.delta = fq.mul(out.delta, d);
  out.eps_Q = fq.quad_char(out.delta);
  out.eps = derived_sign(fq.characteristic(), fq.absolute_degree(), out.rank, out.eps_Q);
  return out;
}

QuadFormAnalysis analyze_gram(const Field& fq, const Matrix& gram) {
  auto out = diagonalize(fq, gram);
  if (out.rank == 0) throw UnsupportedInput("quadratic form has rank 0");
  return out;
}

QuadFormAnalysis analyze(const QuadForm& Q) { return analyze_gram(*Q.tower().fq, Q.gram()); }

Matrix radical(const QuadForm& Q) {
  const Matrix g = Q.gram();
  return nullspace(*Q.tower().fq, g, g.size());
}

}  // namespace qfcodes
