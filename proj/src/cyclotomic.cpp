#include "qfcodes/cyclotomic.hpp"

namespace qfcodes {

namespace {

const Field& prime_subfield(const Field& f) {
  const Field* cur = &f;
  while (!cur->is_prime()) cur = cur->base().get();
  return *cur;
}

int upsilon(const Field& fq, Index x) { return x == 0 ? int(fq.size()) - 1 : -1; }

void check_in(const Field& f, Index x, const char* what) {
  if (x >= f.size()) throw ParameterError(std::string(what) + " lies outside its field");
}

}  // namespace

CycQ to_rational(const CycInt& x) {
  CycQ out(x.prime());
  for (unsigned i = 0; i + 1 < x.prime(); ++i) out.add_zeta(i, Rational(x.coords()[i]));
  return out;
}

long long p_star(unsigned p) { return ((p - 1) / 2) % 2 == 0 ? (long long)p : -(long long)p; }

CycInt gauss_sum_prime(unsigned p) {
  std::vector<long long> h(p, 0);
  for (unsigned x = 0; x < p; ++x) ++h[(unsigned long long)x * x % p];
  return CycInt::from_histogram(p, h);
}

CycQ p_star_half_power(unsigned p, long k) {
  const Rational ps(p_star(p));
  auto rational_pow = [&](long e) {
    Rational r(1);
    Rational base = e >= 0 ? ps : Rational(1) / ps;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= base;
    return r;
  };
  if (k % 2 == 0) return CycQ(p, rational_pow(k / 2));
  return to_rational(gauss_sum_prime(p)) * rational_pow((k - 1) / 2);
}

CycInt additive_char_sum(const Field& f, const std::function<Index(Index)>& arg,
                         const std::function<long(Index)>& weight) {
  const Field& fp = prime_subfield(f);
  const unsigned p = fp.characteristic();
  std::vector<long long> h(p, 0);
  for (Index x = 0; x < f.size(); ++x) {
    long w = weight ? weight(x) : 1;
    if (w == 0) continue;
    h[f.trace_to(fp, arg(x))] += w;
  }
  return CycInt::from_histogram(p, h);
}

CycInt eta_twisted_sum(const Field& fq, unsigned k, Index b) {
  check_in(fq, b, "b");
  return additive_char_sum(
      fq, [&](Index z) { return fq.mul(z, b); },
      [&](Index z) -> long {
        if (z == 0) return 0;
        return (k % 2 == 0) ? 1 : fq.quad_char(z);
      });
}

CycQ eta_twisted_sum_closed(const Field& fq, unsigned k, Index b) {
  check_in(fq, b, "b");
  const unsigned p = fq.characteristic();
  const unsigned m = fq.absolute_degree();
  if (k % 2 == 0) return CycQ(p, Rational(upsilon(fq, b)));
  const int sign = ((m - 1) % 2 == 0 ? 1 : -1) * fq.quad_char(fq.neg(b));
  return p_star_half_power(p, -long(m)) * Rational(sign * (long long)fq.size());
}

CycInt qf_exp_sum(const QuadForm& Q, Index z) {
  const Field& fq = *Q.tower().fq;
  const Field& f1 = *Q.tower().f1;
  check_in(fq, z, "z");
  const Field& fp = prime_subfield(fq);
  const auto tr = fq.trace_table(fp);
  std::vector<BigInt> h(fp.size(), 0);
  std::vector<std::uint64_t> per_value(fq.size(), 0);
  for (Index x = 0; x < f1.size(); ++x) ++per_value[Q.eval(x)];
  for (Index v = 0; v < fq.size(); ++v) h[tr[fq.mul(z, v)]] += per_value[v];
  return CycInt::from_histogram(fp.size(), h);
}

CycQ qf_exp_sum_closed(const FieldTower& tower, const QuadFormAnalysis& an, Index z) {
  const Field& fq = *tower.fq;
  check_in(fq, z, "z");
  if (z == 0) throw DomainError("exponential sum closed form needs z != 0");
  const unsigned p = tower.params.p, m = tower.params.m, m1 = tower.params.m1;
  const std::uint64_t q = tower.q();
  const unsigned r = an.rank;
  if (r % 2 == 0) return CycQ(p, Rational(an.eps) * rpow(q, long(m1) - long(r / 2)));
  const int sign = ((m - 1) % 2 == 0 ? 1 : -1) * fq.quad_char(fq.neg(z)) * an.eps_Q;
  return p_star_half_power(p, -long(m) * long(r)) * (Rational(sign) * rpow(q, long(m1)));
}

BigInt count_solutions(const FieldTower& tower, const QuadFormAnalysis& an, Index a, Index b, Index beta,
                       std::optional<Index> c) {
  const Field& fq = *tower.fq;
  check_in(fq, a, "a");
  check_in(*tower.f2, b, "b");
  check_in(fq, beta, "beta");
  if (c) {
    check_in(fq, *c, "c");
    beta = fq.sub(beta, *c);
  }
  const std::uint64_t q = tower.q();
  const long M = long(tower.M());
  if (a == 0 && b == 0) return beta == 0 ? ipow(q, unsigned(M)) : BigInt(0);
  if (b != 0) return ipow(q, unsigned(M - 1));
  const long r = long(an.rank);
  Rational inner;
  if (r % 2 == 0)
    inner = 1 + Rational(an.eps * upsilon(fq, beta)) * rpow(q, -r / 2);
  else
    inner = 1 + Rational(an.eps * fq.quad_char(fq.neg(fq.mul(a, beta)))) * rpow(q, (1 - r) / 2);
  return require_integer(Rational(ipow(q, unsigned(M - 1))) * inner, "N(a,b;beta)");
}

BigInt count_solutions_brute(const QuadForm& Q, Index a, Index b, Index beta, std::optional<Index> c,
                             std::uint64_t budget) {
  const FieldTower& t = Q.tower();
  const Field& fq = *t.fq;
  const Field& f1 = *t.f1;
  const Field& f2 = *t.f2;
  check_in(fq, a, "a");
  check_in(f2, b, "b");
  check_in(fq, beta, "beta");
  if (c) check_in(fq, *c, "c");
  const BigInt points = ipow(t.q(), t.M());
  if (points > budget) throw ResourceError("solution count enumeration", points.str(), budget);

  std::vector<Index> lhs_x(f1.size()), lhs_y(f2.size());
  for (Index x = 0; x < f1.size(); ++x) lhs_x[x] = fq.mul(a, Q.eval(x));
  for (Index y = 0; y < f2.size(); ++y) lhs_y[y] = f2.trace_to(fq, f2.mul(b, y));
  const Index shift = c ? *c : 0;
  std::uint64_t n = 0;
  for (Index x = 0; x < f1.size(); ++x)
    for (Index y = 0; y < f2.size(); ++y)
      if (fq.add(fq.add(lhs_x[x], lhs_y[y]), shift) == beta) ++n;
  return BigInt(n);
}

}  // namespace qfcodes
