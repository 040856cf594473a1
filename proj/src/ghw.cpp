#include "qfcodes/ghw.hpp"

#include "qfcodes/cyclotomic.hpp"
#include "qfcodes/errors.hpp"

namespace qfcodes {

namespace {

void check_basis(const Code& code, const Matrix& basis) {
  for (const auto& row : basis) {
    if (row.size() != code.dimension()) throw ParameterError("basis row length differs from the message dimension");
    for (Index v : row)
      if (v >= code.q()) throw ParameterError("basis entry outside F_q");
  }
}

/// Every message of span(basis), by enumerating all F_q-combinations.
template <class F>
void for_each_in_span(const Code& code, const Matrix& basis, F&& visit) {
  const Field& fq = *code.tower().fq;
  const std::uint64_t q = code.q();
  const std::size_t r = basis.size();
  const std::uint64_t total = to_u64(ipow(q, unsigned(r)));
  std::vector<Index> row(code.dimension());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::fill(row.begin(), row.end(), 0);
    std::uint64_t rest = idx;
    for (std::size_t k = 0; k < r; ++k, rest /= q) {
      const Index lambda = Index(rest % q);
      if (!lambda) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = fq.add(row[j], fq.mul(lambda, basis[k][j]));
    }
    visit(row);
  }
}

}  // namespace

std::uint64_t support_defect(const Code& code, const Matrix& basis) {
  check_basis(code, basis);
  std::vector<Message> msgs;
  for (const auto& row : basis) msgs.push_back(code.from_row(row));
  std::uint64_t count = 0;
  for (const auto& [x, y] : code.points()) {
    bool zero = true;
    for (const auto& m : msgs)
      if (code.symbol(m, x, y) != 0) {
        zero = false;
        break;
      }
    count += zero;
  }
  return count;
}

std::uint64_t support_defect_audit(const Code& code, const Matrix& basis) {
  check_basis(code, basis);
  const Field& fq = *code.tower().fq;
  const Field& fp = *code.tower().fp;
  const unsigned p = fp.characteristic();
  const auto omega = fq.ordering();
  std::vector<BigInt> hist(p, 0);
  for_each_in_span(code, basis, [&](const std::vector<Index>& row) {
    const Composition k = code.composition(code.from_row(row), EnumMode::Audit);
    for (std::size_t i = 0; i < k.size(); ++i) hist[fq.trace_to(fp, omega[i])] += k[i];
  });
  const CycInt sum = CycInt::from_histogram(p, hist);
  const BigInt scale = ipow(code.q(), unsigned(basis.size()));
  for (std::size_t i = 1; i < sum.coords().size(); ++i)
    if (sum.coords()[i] != 0) throw std::logic_error("character sum over a subspace is not rational");
  if (sum.coords()[0] % scale != 0) throw std::logic_error("character sum over a subspace is not divisible by q^r");
  return to_u64(sum.coords()[0] / scale);
}

SpanStrata span_strata(const Code& code, const Matrix& basis) {
  check_basis(code, basis);
  const Field& fq = *code.tower().fq;
  const bool affine = code.variant() == Variant::Affine;
  const unsigned m2 = code.tower().params.m2;
  SpanStrata s;
  for_each_in_span(code, basis, [&](const std::vector<Index>& row) {
    for (unsigned j = 0; j < m2; ++j)
      if (row[1 + j] != 0) return;
    const Index a = row[0];
    const Index c = affine ? row[m2 + 1] : 0;
    if (a && !c) ++s.t;
    if (a && c) {
      ++s.t2;
      s.eta_ac += fq.quad_char(fq.mul(a, c));
    }
    if (!a && c) ++s.t3;
  });
  return s;
}

BigInt support_defect_closed(const Code& code, const Matrix& basis) {
  const SpanStrata s = span_strata(code, basis);
  const auto& an = code.analysis();
  const std::uint64_t q = code.q();
  const long r = long(basis.size());
  const long M = long(code.tower().M());
  const Rational lead = rpow(q, M - r);
  const bool even = an.rank % 2 == 0;
  if (code.variant() == Variant::Homogeneous) {
    if (!even) return require_integer(lead - 1, "N(H)");
    return require_integer(lead * (an.eps * Rational(s.t) * rpow(q, -long(an.rank / 2)) + 1) - 1, "N(H)");
  }
  const Rational tail = 1 - Rational(s.t3, q - 1);
  if (even) {
    const Rational mid = Rational(s.t) - Rational(s.t2, q - 1);
    return require_integer(lead * (an.eps * rpow(q, -long(an.rank / 2)) * mid + tail), "N(H)");
  }
  const Rational mid = rpow(q, (1 - long(an.rank)) / 2) * Rational(s.eta_ac, q - 1);
  return require_integer(lead * (an.eps * mid + tail), "N(H)");
}

GhwResult ghw_brute(const Code& code, unsigned r, GhwMethod method, std::uint64_t budget,
                    const kernels::ZeroSets* zero_sets) {
  const unsigned k = code.dimension();
  if (r < 1 || r > k) throw ParameterError("GHW index r must lie in [1, dimension]");
  const BigInt count = gaussian_binomial(code.q(), k, r);
  const BigInt work = count * code.length();
  if (work > budget)
    throw ResourceError("GHW enumeration over [" + std::to_string(k) + " choose " + std::to_string(r) + "]_" +
                            std::to_string(code.q()) + " = " + count.str() + " subspaces",
                        work.str(), budget);
  const SubspaceEnumerator subspaces(code.q(), k, r);
  kernels::SubspaceBest best;
  if (method == GhwMethod::Direct) {
    best = kernels::best_subspace_serial(subspaces,
                                         [&](std::uint64_t s) { return support_defect(code, subspaces.at(s)); });
  } else {
    const bool parallel = method == GhwMethod::ZeroSets;
    std::optional<kernels::ZeroSets> own;
    if (!zero_sets) zero_sets = &own.emplace(kernels::code_zero_sets(code, parallel));
    best = kernels::best_subspace(*zero_sets, subspaces, parallel);
  }
  return {code.length() - best.defect, best.defect, subspaces.at(best.index), count};
}

BigInt ghw_closed(const FieldTower& tower, const QuadFormAnalysis& an, Variant v, unsigned r) {
  if (an.rank == 0) throw UnsupportedInput("the zero quadratic form has no weight hierarchy");
  const unsigned m2 = tower.params.m2;
  const unsigned k = m2 + (v == Variant::Homogeneous ? 1 : 2);
  if (r < 1 || r > k) throw ParameterError("GHW index r must lie in [1, dimension]");
  const std::uint64_t q = tower.q();
  const long M = long(tower.M());
  const Rational lead = rpow(q, M - long(r));
  const Rational qr = Rational(ipow(q, r));
  const bool even = an.rank % 2 == 0;
  const Rational half = even ? rpow(q, -long(an.rank / 2)) : rpow(q, (1 - long(an.rank)) / 2);
  Rational d;
  if (v == Variant::Homogeneous) {
    if (!even)
      d = lead * (qr - 1);
    else if (an.eps == 1)
      d = lead * (qr - 1 - Rational(q - 1) * half);
    else if (r < m2 + 1)
      d = lead * (qr - 1);
    else
      d = lead * (qr - 1 + Rational(q - 1) * half);
  } else {
    if (r == m2 + 2)
      d = Rational(ipow(q, unsigned(M)));
    else if (!even)
      d = lead * (qr - 1 - half);
    else if (an.eps == 1)
      d = lead * (qr - 1 - Rational(q - 1) * half);
    else
      d = lead * (qr - 1 - half);
  }
  return require_integer(d, "closed-form GHW");
}

bool GhwRow::agree() const {
  if (brute && BigInt(*brute) != closed) return false;
  if (reference && BigInt(*reference) != closed) return false;
  if (reference && brute && *reference != *brute) return false;
  return true;
}

bool GhwReport::all_agree() const {
  for (const auto& row : rows)
    if (!row.agree()) return false;
  return true;
}

bool GhwReport::strictly_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const BigInt prev = rows[i - 1].brute ? BigInt(*rows[i - 1].brute) : rows[i - 1].closed;
    const BigInt cur = rows[i].brute ? BigInt(*rows[i].brute) : rows[i].closed;
    if (!(prev < cur)) return false;
  }
  return true;
}

GhwReport hierarchy(const Code& code, unsigned r_max, const std::vector<std::uint64_t>& reference, std::uint64_t budget) {
  const unsigned k = code.dimension();
  if (r_max == 0 || r_max > k) r_max = k;
  GhwReport rep;
  std::optional<kernels::ZeroSets> zs;
  for (unsigned r = 1; r <= r_max; ++r) {
    GhwRow row;
    row.r = r;
    row.closed = ghw_closed(code, r);
    if (r - 1 < reference.size()) row.reference = reference[r - 1];
    try {
      const BigInt work = gaussian_binomial(code.q(), k, r) * code.length();
      if (work <= budget && !zs) zs.emplace(kernels::code_zero_sets(code, true));
      const GhwResult res = ghw_brute(code, r, GhwMethod::ZeroSets, budget, zs ? &*zs : nullptr);
      row.brute = res.d;
      row.witness = res.witness;
    } catch (const ResourceError& e) {
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace qfcodes
