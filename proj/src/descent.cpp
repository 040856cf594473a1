#include "qfcodes/descent.hpp"

#include "qfcodes/errors.hpp"
#include "qfcodes/linalg.hpp"

#include <numeric>
#include <set>

namespace qfcodes {

namespace {

std::string coprimality_violation(const FieldTower& t, unsigned N) {
  const std::uint64_t p = t.params.p, q = t.q();
  if (N == 0) return "N must be positive";
  if ((p - 1) % N != 0) return "N = " + std::to_string(N) + " does not divide p - 1 = " + std::to_string(p - 1);
  const std::uint64_t idx = (q - 1) / (p - 1);
  const std::uint64_t g = std::gcd<std::uint64_t>(N, idx);
  if (g != 1)
    return "gcd(N, (q-1)/(p-1)) = gcd(" + std::to_string(N) + ", " + std::to_string(idx) + ") = " + std::to_string(g) +
           ", not 1";
  return {};
}

}  // namespace

DescentParams make_descent(const FieldTower& tower, unsigned N, std::optional<Index> theta_override) {
  if (auto v = coprimality_violation(tower, N); !v.empty()) throw ParameterError("inadmissible descent: " + v);
  const Field& fq = *tower.fq;
  DescentParams d;
  d.N = N;
  d.L = (tower.q() - 1) / N;
  d.theta = theta_override.value_or(fq.exp(N));
  if (d.theta == 0 || d.theta >= fq.size() || fq.order(d.theta) != d.L)
    throw ParameterError("theta must have multiplicative order (q-1)/N = " + std::to_string(d.L));
  return d;
}

DescentParams make_descent_unchecked(const FieldTower& tower, unsigned N) {
  if (N == 0 || (tower.q() - 1) % N != 0) throw ParameterError("N must divide q - 1");
  DescentParams d;
  d.N = N;
  d.L = (tower.q() - 1) / N;
  d.theta = tower.fq->exp(N);
  d.violation = coprimality_violation(tower, N);
  d.admissible = d.violation.empty();
  return d;
}

std::vector<Index> psi(const FieldTower& tower, const DescentParams& d, Index gamma) {
  const Field& fq = *tower.fq;
  std::vector<Index> out(d.L);
  Index t = 1;
  for (std::uint64_t i = 0; i < d.L; ++i, t = fq.mul(t, d.theta)) out[i] = fq.trace_to(*tower.fp, fq.mul(gamma, t));
  return out;
}

std::uint64_t psi_weight(const FieldTower& tower, const DescentParams& d, Index gamma) {
  std::uint64_t w = 0;
  for (Index v : psi(tower, d, gamma)) w += v != 0;
  return w;
}

DescendedCode::DescendedCode(const Code& source, DescentParams params) : source_(source), params_(params) {
  const FieldTower& t = source_.tower();
  const Field& fq = *t.fq;
  tr_ = fq.trace_table(*t.fp);
  theta_pow_.resize(params_.L);
  Index th = 1;
  for (auto& v : theta_pow_) {
    v = th;
    th = fq.mul(th, params_.theta);
  }
  col_weight_.resize(fq.size());
  for (Index g = 0; g < fq.size(); ++g) col_weight_[g] = psi_weight(t, params_, g);
}

unsigned DescendedCode::dimension() const { return source_.tower().params.m * source_.dimension(); }

bool DescendedCode::zero_at(const Message& m, std::uint64_t point, std::uint64_t i) const {
  const auto& [x, y] = source_.points()[point];
  return tr_[source_.tower().fq->mul(source_.symbol(m, x, y), theta_pow_[i])] == 0;
}

std::vector<Index> DescendedCode::codeword(const Message& m) const {
  const Field& fq = *source_.tower().fq;
  std::vector<Index> out;
  out.reserve(length());
  for (const auto& [x, y] : source_.points()) {
    const Index s = source_.symbol(m, x, y);
    for (Index t : theta_pow_) out.push_back(tr_[fq.mul(s, t)]);
  }
  return out;
}

std::size_t DescendedCode::rank() const {
  const unsigned p = source_.tower().params.p;
  Matrix gen;
  std::uint64_t idx = 1;
  for (unsigned j = 0; j < dimension(); ++j, idx *= p) gen.push_back(codeword(source_.decode(idx)));
  return qfcodes::rank(*source_.tower().fp, std::move(gen));
}

WeightDistribution descended_wd_brute(const DescendedCode& dc, DescentWdMode mode, std::uint64_t budget) {
  const Code& code = dc.source();
  const BigInt work = BigInt(code.message_count()) * dc.length();
  if (work > budget) throw ResourceError("descended codebook enumeration exceeds budget", work.str(), budget);
  WeightDistribution wd;
  if (mode == DescentWdMode::Audit) {
    const auto n = std::int64_t(code.message_count());
    std::vector<std::uint64_t> weights(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
      std::uint64_t w = 0;
      for (Index v : dc.codeword(code.decode(std::uint64_t(i)))) w += v != 0;
      weights[i] = w;
    }
    for (auto w : weights) wd[w] += 1;
    return wd;
  }
  const auto omega = code.tower().fq->ordering();
  for (const auto& k : all_compositions(code, EnumMode::Fast, true, budget)) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) w += k[i] * dc.column_weights()[omega[i]];
    wd[w] += 1;
  }
  return wd;
}

WeightDistribution descended_wd_predicted(const FieldTower& tower, const QuadFormAnalysis& an, Variant v, unsigned N) {
  const unsigned p = tower.params.p, m = tower.params.m;
  const Rational scale = Rational(BigInt(p - 1) * ipow(p, m - 1), N);
  WeightDistribution out;
  for (const auto& [w, f] : weight_distribution_predicted(tower, an, v))
    out[to_u64(require_integer(scale * w, "descended weight"))] += f;
  return out;
}

OrbitVerdict orbit_check(const FieldTower& tower, const DescentParams& d) {
  const Field& fq = *tower.fq;
  const unsigned p = tower.params.p;
  std::set<Index> H;
  Index t = 1;
  for (std::uint64_t i = 0; i < d.L; ++i, t = fq.mul(t, d.theta)) H.insert(t);
  OrbitVerdict v;
  v.cosets = (tower.q() - 1) / H.size();
  v.expected_stabilizer = (p - 1) / d.N;
  std::set<std::uint64_t> orbit;
  for (Index lambda = 1; lambda < p; ++lambda) {
    v.stabilizer += H.count(lambda);
    orbit.insert(fq.log(lambda) % v.cosets);  // cosets of the order-L subgroup are log classes
  }
  v.orbit = orbit.size();
  return v;
}

CharIdentityVerdict char_identity_check(const FieldTower& tower, const DescentParams& d, Index c, Index a) {
  const Field& fq = *tower.fq;
  if (c == 0 || a == 0) throw DomainError("character identities need nonzero a and c");
  const unsigned p = tower.params.p;
  const auto tr = fq.trace_table(*tower.fp);
  std::vector<BigInt> h1(p, 0), h2(p, 0);
  for (Index lambda = 1; lambda < p; ++lambda) {
    Index t = 1;
    for (std::uint64_t i = 0; i < d.L; ++i, t = fq.mul(t, d.theta)) {
      const Index z = fq.mul(lambda, t);
      const Index e = tr[fq.mul(c, z)];
      h1[e] += 1;
      h2[e] += fq.quad_char(fq.mul(a, z));
    }
  }
  CharIdentityVerdict v;
  v.first_lhs = CycInt::from_histogram(p, h1);
  v.first_rhs = CycQ(p, -Rational(p - 1, d.N));
  v.second_lhs = CycInt::from_histogram(p, h2);
  v.second_rhs = to_rational(eta_twisted_sum(fq, 1, 1)) * (Rational(p - 1, d.N) * fq.quad_char(fq.mul(a, c)));
  return v;
}

kernels::ZeroSets descended_zero_sets(const DescendedCode& dc, bool parallel) {
  const Code& code = dc.source();
  const std::uint64_t L = dc.params().L;
  const std::uint64_t npts = code.length();
  kernels::ZeroSets zs(code.message_count(), dc.length());
  const auto n = std::int64_t(code.message_count());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::int64_t mi = 0; mi < n; ++mi) {
    const Message m = code.decode(std::uint64_t(mi));
    for (std::uint64_t j = 0; j < npts; ++j)
      for (std::uint64_t i = 0; i < L; ++i)
        if (dc.zero_at(m, j, i)) zs.set(std::uint64_t(mi), j * L + i);
  }
  return zs;
}

std::uint64_t descended_support_defect(const DescendedCode& dc, const std::vector<std::uint64_t>& basis) {
  const Code& code = dc.source();
  std::vector<Message> msgs;
  for (auto idx : basis) msgs.push_back(code.decode(idx));
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < code.length(); ++j)
    for (std::uint64_t i = 0; i < dc.params().L; ++i) {
      bool zero = true;
      for (const auto& m : msgs)
        if (!dc.zero_at(m, j, i)) {
          zero = false;
          break;
        }
      count += zero;
    }
  return count;
}

GhwResult descended_ghw_brute(const DescendedCode& dc, unsigned r, bool parallel, std::uint64_t budget,
                              const kernels::ZeroSets* zero_sets) {
  const unsigned k = dc.dimension();
  const unsigned p = dc.source().tower().params.p;
  if (r < 1 || r > k) throw ParameterError("GHW index r must lie in [1, dimension]");
  const BigInt count = gaussian_binomial(p, k, r);
  const BigInt work = count * dc.length();
  if (work > budget)
    throw ResourceError("descended GHW enumeration over [" + std::to_string(k) + " choose " + std::to_string(r) +
                            "]_" + std::to_string(p) + " = " + count.str() + " subspaces",
                        work.str(), budget);
  const SubspaceEnumerator subspaces(p, k, r);
  std::optional<kernels::ZeroSets> own;
  if (!zero_sets) zero_sets = &own.emplace(descended_zero_sets(dc, parallel));
  const auto best = kernels::best_subspace(*zero_sets, subspaces, parallel);
  return {dc.length() - best.defect, best.defect, subspaces.at(best.index), count};
}

BigInt descended_ghw_closed(const FieldTower& tower, const QuadFormAnalysis& an, Variant v, unsigned N, unsigned r) {
  if (an.rank == 0) throw UnsupportedInput("the zero quadratic form has no weight hierarchy");
  const std::uint64_t p = tower.params.p, q = tower.q();
  const unsigned m = tower.params.m, m2 = tower.params.m2;
  const unsigned k = m * (m2 + (v == Variant::Homogeneous ? 1 : 2));
  if (r < 1 || r > k) throw ParameterError("GHW index r must lie in [1, dimension]");
  const Rational qM = Rational(ipow(q, tower.M()));
  const Rational pr = Rational(ipow(p, r));
  const Rational base = qM / (pr * N);  // q^M / (p^r N)
  const Rational F = base * Rational(q - 1);
  const bool even = an.rank % 2 == 0;
  const Rational h = rpow(q, -long(an.rank / 2));       // q^{-r_Q/2}, even rank
  const Rational ho = rpow(q, (1 - long(an.rank)) / 2);  // q^{(1-r_Q)/2}, odd rank
  Rational d;
  if (v == Variant::Homogeneous) {
    if (!even)
      d = F * (pr - 1);
    else if (an.eps == 1)
      d = r <= m ? F * (pr - 1) * (1 - h) : F * (pr - 1 - h * Rational(q - 1));
    else
      d = r <= m * m2 ? F * (pr - 1) : F * (pr - 1 + h * (Rational(ipow(p, r - m * m2)) - 1));
  } else {
    const unsigned cut = m * (m2 + 1);
    if (r <= m) {
      if (even && an.eps == 1)
        d = F * (pr - 1) * (1 - h);
      else if (even)
        d = base * (pr - 1) * (Rational(q - 1) - h);
      else
        d = base * (pr - 1) * (Rational(q - 1) - ho);
    } else if (r <= cut) {
      if (even && an.eps == 1)
        d = F * (pr - 1 - h * Rational(q - 1));
      else if (even)
        d = F * (pr - 1 - h);
      else
        d = F * (pr - 1 - ho);
    } else {
      const Rational X = even ? (an.eps == 1 ? 1 + h * Rational(q - 1) : 1 + h) : 1 + ho;
      d = base * (pr * Rational(q - 1) - (Rational(q) - Rational(ipow(p, r - cut))) * X);
    }
  }
  return require_integer(d, "closed-form descended GHW");
}

OptimizerCheck affine_optimizer(const DescendedCode& dc, unsigned r, std::uint64_t budget) {
  const Code& code = dc.source();
  if (code.variant() != Variant::Affine) throw ParameterError("optimizer construction applies to the affine code");
  const FieldTower& t = code.tower();
  const unsigned p = t.params.p, m = t.params.m, m2 = t.params.m2;
  if (r <= m * (m2 + 1) || r > dc.dimension()) throw ParameterError("optimizer construction needs m(m2+1) < r <= dimension");
  const unsigned s = r - m * m2;
  const SubspaceEnumerator W(p, 2 * m, s);
  const BigInt work = W.count() * dc.length();
  if (work > budget) throw ResourceError("optimizer search exceeds budget", work.str(), budget);
  const std::uint64_t q = t.q();
  const std::uint64_t c_shift = to_u64(ipow(q, m2 + 1));
  std::vector<std::uint64_t> fixed;
  for (std::uint64_t j = 0, pj = 1; j < std::uint64_t(m) * m2; ++j, pj *= p) fixed.push_back(q * pj);
  OptimizerCheck best;
  std::vector<std::uint64_t> rows(s);
  for (std::uint64_t w = 0; w < W.size(); ++w) {
    W.row_indices(w, rows.data());
    std::vector<std::uint64_t> basis = fixed;
    for (auto ac : rows) basis.push_back(ac % q + c_shift * (ac / q));
    const std::uint64_t defect = descended_support_defect(dc, basis);
    if (best.basis.empty() || defect > best.defect) best = {defect, 0, basis};
  }
  best.d = dc.length() - best.defect;
  return best;
}

}  // namespace qfcodes
