#include "qfcodes/code.hpp"

#include "qfcodes/errors.hpp"
#include "qfcodes/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace qfcodes {

std::string to_string(Variant v) { return v == Variant::Homogeneous ? "homogeneous" : "affine"; }

Variant parse_variant(const std::string& s) {
  if (s == "homogeneous" || s == "C") return Variant::Homogeneous;
  if (s == "affine" || s == "Cbar") return Variant::Affine;
  throw ParameterError("unknown code variant '" + s + "' (expected homogeneous or affine)");
}

Code::Code(QuadForm Q, Variant variant) : Q_(std::move(Q)), an_(analyze(Q_)), variant_(variant) {
  const FieldTower& t = Q_.tower();
  tr2_ = t.f2->trace_table(*t.fq);
  q_hist_.assign(t.q(), 0);
  for (Index v : Q_.values()) ++q_hist_[v];
  const std::uint64_t full = std::uint64_t(t.f1->size()) * t.f2->size();
  length_ = variant_ == Variant::Homogeneous ? full - 1 : full;
  message_count_ = to_u64(ipow(t.q(), dimension()));
  points_.reserve(length_);
  const auto xs = t.f1->ordering();
  const auto ys = t.f2->ordering();
  for (Index x : xs)
    for (Index y : ys)
      if (variant_ == Variant::Affine || x != 0 || y != 0) points_.emplace_back(x, y);
}

unsigned Code::dimension() const {
  return tower().params.m2 + (variant_ == Variant::Homogeneous ? 1 : 2);
}

Message Code::make_message(Index a, Index b, std::optional<Index> c) const {
  if (a >= q() || b >= tower().f2->size()) throw ParameterError("message coordinate out of range");
  if (c.has_value() != (variant_ == Variant::Affine))
    throw ParameterError(variant_ == Variant::Affine ? "affine messages need a constant term c"
                                                     : "homogeneous messages take no constant term");
  if (c && *c >= q()) throw ParameterError("message coordinate out of range");
  return {a, b, c.value_or(0)};
}

std::uint64_t Code::encode(const Message& m) const {
  const std::uint64_t qq = q();
  std::uint64_t idx = m.a + qq * std::uint64_t(m.b);
  if (variant_ == Variant::Affine) idx += std::uint64_t(tower().f2->size()) * qq * m.c;
  return idx;
}

Message Code::decode(std::uint64_t index) const {
  if (index >= message_count_) throw ParameterError("message index out of range");
  const std::uint64_t qq = q();
  const std::uint64_t s2 = tower().f2->size();
  Message m;
  m.a = Index(index % qq);
  index /= qq;
  m.b = Index(index % s2);
  m.c = Index(index / s2);
  return m;
}

Message Code::from_row(const std::vector<Index>& row) const {
  if (row.size() != dimension()) throw ParameterError("message row has the wrong length");
  std::uint64_t idx = 0, pw = 1;
  for (Index v : row) {
    if (v >= q()) throw ParameterError("message row entry outside F_q");
    idx += pw * v;
    pw *= q();
  }
  return decode(idx);
}

std::vector<Index> Code::codeword(const Message& m) const {
  std::vector<Index> out;
  out.reserve(points_.size());
  for (const auto& [x, y] : points_) out.push_back(symbol(m, x, y));
  return out;
}

Composition Code::composition(const Message& m, EnumMode mode) const {
  const Field& fq = *tower().fq;
  const std::uint64_t qq = q();
  std::vector<std::uint64_t> by_value(qq, 0);
  if (mode == EnumMode::Audit) {
    for (const auto& [x, y] : points_) ++by_value[symbol(m, x, y)];
  } else {
    std::vector<std::uint64_t> hx(qq, 0), hy(qq, 0);
    for (Index v = 0; v < qq; ++v) hx[fq.mul(m.a, v)] += q_hist_[v];
    const Field& f2 = *tower().f2;
    for (Index y = 0; y < f2.size(); ++y) ++hy[tr2_[f2.mul(m.b, y)]];
    for (Index v = 0; v < qq; ++v) {
      if (!hx[v]) continue;
      for (Index w = 0; w < qq; ++w) by_value[fq.add(fq.add(v, w), m.c)] += hx[v] * hy[w];
    }
    if (variant_ == Variant::Homogeneous) --by_value[0];  // origin evaluates to 0
  }
  Composition k(qq, 0);
  for (Index v = 0; v < qq; ++v) k[fq.position(v)] = by_value[v];
  return k;
}

std::vector<Composition> all_compositions(const Code& code, EnumMode mode, bool parallel, std::uint64_t budget) {
  const BigInt work = BigInt(code.message_count()) * code.length();
  if (work > budget) throw ResourceError("codebook enumeration exceeds budget", work.str(), budget);
  return parallel ? kernels::compositions_parallel(code, mode) : kernels::compositions_serial(code, mode);
}

WeightDistribution weight_distribution_from(const Code& code, const std::vector<Composition>& comps) {
  WeightDistribution wd;
  for (const auto& k : comps) wd[code.weight(k)] += 1;
  return wd;
}

CWE cwe_from(const std::vector<Composition>& comps) {
  CWE out;
  for (const auto& k : comps) out[k] += 1;
  return out;
}

WeightDistribution weight_distribution_brute(const Code& code, EnumMode mode, std::uint64_t budget) {
  return weight_distribution_from(code, all_compositions(code, mode, true, budget));
}

CWE cwe_brute(const Code& code, EnumMode mode, std::uint64_t budget) {
  return cwe_from(all_compositions(code, mode, true, budget));
}

namespace {

struct Shape {
  std::uint64_t q;
  unsigned M, m2, r;
  int eps;
  BigInt A;  // q^{M-1}
  Rational A_r() const { return Rational(A); }
};

Shape shape_of(const FieldTower& t, const QuadFormAnalysis& an) {
  if (an.rank == 0) throw UnsupportedInput("the zero quadratic form has no weight tables");
  return {t.q(), t.M(), t.params.m2, an.rank, an.eps, ipow(t.q(), t.M() - 1)};
}

void add_weight(WeightDistribution& wd, const Rational& w, const BigInt& freq, const char* what) {
  if (freq == 0) return;
  wd[to_u64(require_integer(w, what))] += freq;
}

std::uint64_t exponent(const Rational& v, const char* what) { return to_u64(require_integer(v, what)); }

}  // namespace

WeightDistribution weight_distribution_predicted(const FieldTower& tower, const QuadFormAnalysis& an, Variant v) {
  const Shape s = shape_of(tower, an);
  const BigInt q = s.q;
  const Rational A = s.A_r();
  const BigInt qm2 = ipow(s.q, s.m2);
  WeightDistribution wd;
  wd[0] = 1;
  const bool even = s.r % 2 == 0;
  const Rational half = even ? rpow(s.q, -long(s.r / 2)) : rpow(s.q, (1 - long(s.r)) / 2);
  if (v == Variant::Homogeneous) {
    if (even) {
      add_weight(wd, A * Rational(q - 1), q * (qm2 - 1), "weight");
      add_weight(wd, A * Rational(q - 1) * (1 - s.eps * half), q - 1, "weight");
    } else {
      add_weight(wd, A * Rational(q - 1), q * qm2 - 1, "weight");
    }
    return wd;
  }
  add_weight(wd, A * Rational(q), q - 1, "weight");
  if (even) {
    add_weight(wd, A * Rational(q - 1), q * q * (qm2 - 1), "weight");
    add_weight(wd, A * Rational(q - 1) * (1 - s.eps * half), q - 1, "weight");
    add_weight(wd, A * (Rational(q - 1) + s.eps * half), (q - 1) * (q - 1), "weight");
  } else {
    add_weight(wd, A * Rational(q - 1), q * q * (qm2 - 1) + q - 1, "weight");
    add_weight(wd, A * (Rational(q - 1) - s.eps * half), (q - 1) * (q - 1) / 2, "weight");
    add_weight(wd, A * (Rational(q - 1) + s.eps * half), (q - 1) * (q - 1) / 2, "weight");
  }
  return wd;
}

CWE cwe_predicted(const FieldTower& tower, const QuadFormAnalysis& an, Variant v) {
  const Shape s = shape_of(tower, an);
  const Field& fq = *tower.fq;
  const std::uint64_t q = s.q;
  const Rational A = s.A_r();
  const std::uint64_t a = to_u64(s.A);
  const BigInt qm2 = ipow(q, s.m2);
  const std::uint64_t qM = to_u64(ipow(q, s.M));
  const auto omega = fq.ordering();
  const bool even = s.r % 2 == 0;
  const Rational half = even ? rpow(q, -long(s.r / 2)) : rpow(q, (1 - long(s.r)) / 2);
  CWE out;
  auto put = [&](Composition k, const BigInt& mult) {
    if (mult != 0) out[std::move(k)] += mult;
  };

  if (v == Variant::Homogeneous) {
    put(Composition{[&] {
          Composition k(q, 0);
          k[0] = qM - 1;
          return k;
        }()},
        1);
    Composition flat(q, a);
    flat[0] = a - 1;
    put(flat, BigInt(q) * (qm2 - 1));
    if (even) {
      Composition k(q, exponent(A * (1 - s.eps * half), "composition entry"));
      k[0] = exponent(A * (1 + s.eps * Rational(q - 1) * half), "composition entry") - 1;
      put(k, q - 1);
    } else {
      for (int sign : {1, -1}) {
        Composition k(q, 0);
        k[0] = a - 1;
        for (std::size_t rho = 1; rho < q; ++rho)
          k[rho] = exponent(A * (1 + sign * s.eps * half * fq.quad_char(fq.neg(omega[rho]))), "composition entry");
        put(k, (q - 1) / 2);
      }
    }
    return out;
  }

  for (std::size_t i = 0; i < q; ++i) {
    Composition k(q, 0);
    k[i] = qM;
    put(k, 1);
  }
  put(Composition(q, a), BigInt(q) * q * (qm2 - 1));
  if (even) {
    const std::uint64_t t1 = exponent(A * (1 + s.eps * Rational(q - 1) * half), "composition entry");
    const std::uint64_t t2 = exponent(A * (1 - s.eps * half), "composition entry");
    for (std::size_t i = 0; i < q; ++i) {
      Composition k(q, t2);
      k[i] = t1;
      put(k, q - 1);
    }
  } else {
    for (std::size_t i = 0; i < q; ++i)
      for (int sign : {1, -1}) {
        Composition k(q, 0);
        for (std::size_t rho = 0; rho < q; ++rho)
          k[rho] = rho == i ? a
                            : exponent(A * (1 + sign * s.eps * half * fq.quad_char(fq.sub(omega[i], omega[rho]))),
                                       "composition entry");
        put(k, (q - 1) / 2);
      }
  }
  return out;
}

WeightDistribution marginalize(const CWE& cwe, std::uint64_t length) {
  WeightDistribution wd;
  for (const auto& [k, mult] : cwe) wd[length - k[0]] += mult;
  return wd;
}

BigInt total(const WeightDistribution& wd) {
  BigInt s = 0;
  for (const auto& [w, f] : wd) s += f;
  return s;
}

BigInt total(const CWE& cwe) {
  BigInt s = 0;
  for (const auto& [k, f] : cwe) s += f;
  return s;
}

std::uint64_t min_distance(const WeightDistribution& wd) {
  for (const auto& [w, f] : wd)
    if (w > 0 && f > 0) return w;
  return 0;
}

CWE relabel(const CWE& cwe, const std::vector<std::size_t>& perm) {
  CWE out;
  for (const auto& [k, mult] : cwe) {
    if (perm.size() != k.size() || perm[0] != 0) throw ParameterError("relabeling must fix symbol 0 and cover every symbol");
    Composition nk(k.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i) nk[perm[i]] = k[i];
    out[nk] += mult;
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_relabeling(const CWE& a, const CWE& b) {
  if (a.empty() || b.empty()) return a == b ? std::optional(std::vector<std::size_t>{}) : std::nullopt;
  const std::size_t q = a.begin()->first.size();
  if (q - 1 > 8) throw ResourceError("relabeling search over (q-1)! permutations", std::to_string(q - 1) + "!", 8);
  std::vector<std::size_t> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return perm;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> relabeling_for_eta_pattern(const Field& fq, const std::vector<int>& pattern,
                                                                   bool negate) {
  const std::size_t q = fq.size();
  if (pattern.size() != q - 1) throw ParameterError("eta pattern must list q-1 values");
  const auto omega = fq.ordering();
  std::vector<bool> used(q, false);
  std::vector<std::size_t> perm(q, 0);
  for (std::size_t i = 1; i < q; ++i) {
    std::size_t j = 1;
    for (; j < q; ++j) {
      const int val = fq.quad_char(negate ? fq.neg(omega[j]) : omega[j]);
      if (!used[j] && val == pattern[i - 1]) break;
    }
    if (j == q) return std::nullopt;
    used[j] = true;
    perm[i] = j;
  }
  return perm;
}

GriesmerVerdict griesmer_check(const BigInt& n, unsigned k, const BigInt& d, std::uint64_t q) {
  GriesmerVerdict v;
  v.bound = 0;
  BigInt pw = 1;
  for (unsigned i = 0; i < k; ++i, pw *= q) v.bound += (d + pw - 1) / pw;
  v.meets = v.bound == n;
  v.slack = n - v.bound;
  return v;
}

std::string to_string(Minimality m) { return m == Minimality::MinimalByAB ? "minimal (Ashikhmin-Barg)" : "inconclusive"; }

Minimality ab_minimality(const WeightDistribution& wd, std::uint64_t q) {
  std::uint64_t wmin = 0, wmax = 0;
  for (const auto& [w, f] : wd) {
    if (w == 0 || f == 0) continue;
    if (wmin == 0) wmin = w;
    wmax = w;
  }
  if (wmin == 0) return Minimality::Inconclusive;
  return BigInt(wmin) * q > BigInt(wmax) * (q - 1) ? Minimality::MinimalByAB : Minimality::Inconclusive;
}

}  // namespace qfcodes
