#pragma once

// Exact arithmetic in Z[zeta_p] and Q(zeta_p), character sums over finite
// fields, and solution counts of a Q(x) + Tr(b y) (+ c) = beta.

#include "qfcodes/bigint.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/gf_tower.hpp"
#include "qfcodes/quadform.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qfcodes {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// sum coords[i] * zeta_p^i over the basis 1, zeta, ..., zeta^{p-2}.
template <class T>
class CycElem {
 public:
  CycElem() = default;
  explicit CycElem(unsigned p) : p_(p), c_(p - 1, T(0)) {}
  CycElem(unsigned p, const T& scalar) : CycElem(p) { c_[0] = scalar; }

  /// zeta^k, reduced.
  static CycElem zeta(unsigned p, long long k) {
    CycElem out(p);
    long long e = k % (long long)p;
    if (e < 0) e += p;
    out.add_zeta(unsigned(e), T(1));
    return out;
  }
  /// Builds from counts h[j] = multiplicity of zeta^j, j < p.
  template <class U>
  static CycElem from_histogram(unsigned p, const std::vector<U>& h) {
    CycElem out(p);
    for (unsigned j = 0; j < p && j < h.size(); ++j)
      if (h[j] != 0) out.add_zeta(j, T(h[j]));
    return out;
  }

  unsigned prime() const { return p_; }
  const std::vector<T>& coords() const { return c_; }
  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  /// Adds s * zeta^j for 0 <= j < p, folding zeta^{p-1} = -(1 + ... + zeta^{p-2}).
  void add_zeta(unsigned j, const T& s) {
    if (j + 1 < p_) {
      c_[j] += s;
    } else {
      for (auto& v : c_) v -= s;
    }
  }

  CycElem& operator+=(const CycElem& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycElem& operator-=(const CycElem& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycElem& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator-(CycElem a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend CycElem operator*(CycElem a, const T& s) { return a *= s; }
  friend CycElem operator*(const CycElem& a, const CycElem& b) {
    a.check(b);
    const unsigned p = a.p_;
    std::vector<T> full(p, T(0));
    for (unsigned i = 0; i + 1 < p; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; j + 1 < p; ++j) full[(i + j) % p] += a.c_[i] * b.c_[j];
    }
    CycElem out(p);
    for (unsigned j = 0; j < p; ++j)
      if (full[j] != 0) out.add_zeta(j, full[j]);
    return out;
  }
  bool operator==(const CycElem& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c_[i]) + ")";
      if (i > 0) s += "z^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const CycElem& o) const {
    if (p_ != o.p_) throw FieldMismatch("cyclotomic operands use different primes");
  }

  unsigned p_ = 0;
  std::vector<T> c_;
};

using CycInt = CycElem<BigInt>;
using CycQ = CycElem<Rational>;

CycQ to_rational(const CycInt& x);

/// (-1)^{(p-1)/2} p.
long long p_star(unsigned p);
/// sum_{x in F_p} zeta^{x^2}.
CycInt gauss_sum_prime(unsigned p);
/// (p*)^{k/2} for any integer k; odd k goes through the prime-field Gauss sum.
CycQ p_star_half_power(unsigned p, long k);

/// sum_{x in f} weight(x) * zeta_p^{Tr_{f/p}(arg(x))}; weight defaults to 1.
CycInt additive_char_sum(const Field& f, const std::function<Index(Index)>& arg,
                         const std::function<long(Index)>& weight = nullptr);

/// sum_{z in F_q^*} eta(z)^k zeta_p^{Tr(z b)}, by enumeration.
CycInt eta_twisted_sum(const Field& fq, unsigned k, Index b);
CycQ eta_twisted_sum_closed(const Field& fq, unsigned k, Index b);

/// sum_{x in F_{q^{m1}}} zeta_p^{Tr_{q/p}(z Q(x))}, by enumeration.
CycInt qf_exp_sum(const QuadForm& Q, Index z);
CycQ qf_exp_sum_closed(const FieldTower& tower, const QuadFormAnalysis& an, Index z);

/// Closed-form N(a, b; beta), or N(a, b, c; beta) = N(a, b; beta - c).
BigInt count_solutions(const FieldTower& tower, const QuadFormAnalysis& an, Index a, Index b, Index beta,
                       std::optional<Index> c = std::nullopt);
/// Literal count over all (x, y); ResourceError when q^M exceeds the budget.
BigInt count_solutions_brute(const QuadForm& Q, Index a, Index b, Index beta, std::optional<Index> c = std::nullopt,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace qfcodes
