#pragma once

// Finite-field towers F_p ⊂ F_q ⊂ F_{q^k} with table-driven arithmetic.
//
// Every field in a tower is a relative extension of the field below it, and
// elements are encoded as integers: an element of F_{Q^d} over F_Q with
// coefficients (c_0, ..., c_{d-1}) has index sum(c_i * Q^i), where each c_i is
// itself an index in F_Q. Consequences used throughout the library:
//   * the subfield F_Q embeds as the indices [0, Q) (identity embedding);
//   * addition is digit-wise mod p on the flattened base-p expansion;
//   * an F_Q-vector of length d is a single index in [0, Q^d).

#include "qfcodes/bigint.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace qfcodes {

using Index = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Polynomial over a field; coefficient indices, lowest degree first.
using Poly = std::vector<Index>;

class Field {
 public:
  /// Largest field the table-driven representation accepts.
  static constexpr Index kMaxSize = Index{1} << 24;

  static FieldPtr prime(unsigned p);
  /// F_base[t]/(modulus). The modulus must be monic and irreducible over base.
  static FieldPtr extension(FieldPtr base, Poly modulus);

  unsigned characteristic() const { return p_; }
  /// Degree over the immediate base field (1 for a prime field).
  unsigned degree() const { return degree_; }
  unsigned absolute_degree() const { return abs_degree_; }
  Index size() const { return size_; }
  bool is_prime() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  /// Monic modulus over base, degree()+1 coefficients. Empty for prime fields.
  const Poly& modulus() const { return modulus_; }
  /// True when `sub` is this field or appears in its chain of base fields.
  bool contains(const Field& sub) const;

  Index add(Index x, Index y) const {
    if (add_table_.empty()) return add_digits(x, y);
    return add_table_[std::size_t(x) * size_ + y];
  }
  Index neg(Index x) const { return neg_table_[x]; }
  Index sub(Index x, Index y) const { return add(x, neg_table_[y]); }
  Index mul(Index x, Index y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[std::size_t(log_[x]) + log_[y]];
  }
  Index inv(Index x) const;
  Index div(Index x, Index y) const { return mul(x, inv(y)); }
  Index pow(Index x, std::uint64_t e) const;
  /// Arbitrary-precision exponent; negative means invert first. 0^0 = 1.
  Index pow(Index x, const BigInt& e) const;
  /// n * 1 for an integer n (reduced mod p).
  Index from_int(long long n) const;

  /// Canonical primitive element: first index whose order is size()-1.
  Index primitive() const { return primitive_; }
  /// g^k for the canonical primitive g.
  Index exp(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }
  /// Discrete log to base g of a nonzero element.
  std::uint64_t log(Index x) const;
  std::uint64_t order(Index x) const;
  /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  int quad_char(Index x) const {
    if (x == 0) return 0;
    return (log_[x] % 2 == 0) ? 1 : -1;
  }

  std::vector<Index> coeffs(Index x) const;
  Index from_coeffs(std::span<const Index> c) const;

  /// Sum of x^{|target|^j}, j < [this : target]. Target must be contained in this field.
  Index trace_to(const Field& target, Index x) const;
  /// Trace table over all elements of this field down to target.
  std::vector<Index> trace_table(const Field& target) const;

  /// omega_0 = 0, omega_i = g^{i-1}.
  std::vector<Index> ordering() const;
  /// Position of x in ordering().
  std::size_t position(Index x) const { return x == 0 ? 0 : std::size_t(log_[x]) + 1; }

 private:
  Field() = default;
  Index add_digits(Index x, Index y) const;
  Index mul_reference(Index x, Index y) const;
  Index pow_reference(Index x, std::uint64_t e) const;
  void build_tables();

  unsigned p_ = 0;
  unsigned degree_ = 1;
  unsigned abs_degree_ = 1;
  Index size_ = 0;
  FieldPtr base_;
  Poly modulus_;
  Index primitive_ = 0;
  std::vector<Index> add_table_;
  std::vector<Index> neg_table_;
  std::vector<Index> exp_;  // length 2(size-1)
  std::vector<Index> log_;
};

/// Field element with its field handle; mixed-field arithmetic throws FieldMismatch.
class Elem {
 public:
  Elem(FieldPtr field, Index index);

  const FieldPtr& field() const { return field_; }
  Index index() const { return index_; }
  std::vector<Index> coeffs() const { return field_->coeffs(index_); }
  bool is_zero() const { return index_ == 0; }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;
  Elem operator-() const { return {field_, field_->neg(index_)}; }
  Elem inv() const { return {field_, field_->inv(index_)}; }
  Elem pow(const BigInt& e) const { return {field_, field_->pow(index_, e)}; }

  bool operator==(const Elem& o) const { return field_ == o.field_ && index_ == o.index_; }

 private:
  void check_same(const Elem& o) const;

  FieldPtr field_;
  Index index_;
};

namespace poly {
Poly trim(Poly a);
int degree(const Poly& a);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly mod(const Field& f, Poly a, const Poly& m);
Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& f, Poly a, std::uint64_t e, const Poly& m);
Poly gcd(const Field& f, Poly a, Poly b);
}  // namespace poly

/// Irreducibility over base: f | x^{Q^d} - x and gcd(f, x^{Q^e} - x) = 1 for proper divisors e of d.
bool is_irreducible(const Field& base, const Poly& f);

/// Lexicographically smallest monic irreducible of the given degree over base.
/// Polynomials are ranked by their coefficient vectors read as base-|base|
/// numbers with the constant term least significant.
Poly find_irreducible(const Field& base, unsigned degree);

struct TowerParams {
  unsigned p = 0;
  unsigned m = 1;
  unsigned m1 = 1;
  unsigned m2 = 1;
};

struct FieldTower {
  TowerParams params;
  FieldPtr fp;
  FieldPtr fq;
  FieldPtr f1;  // F_{q^{m1}}
  FieldPtr f2;  // F_{q^{m2}}

  std::uint64_t q() const { return fq->size(); }
  unsigned M() const { return params.m1 + params.m2; }
};

bool is_prime(unsigned n);

/// Deterministic tower construction. Degree-1 levels reuse the field below.
FieldTower build_tower(unsigned p, unsigned m, unsigned m1, unsigned m2);

/// {p, m, m1, m2, moduli} record pinning the representation.
nlohmann::json describe(const FieldTower& tower);

Elem rel_trace(const Elem& x, const FieldPtr& target);
int quad_char(const Elem& x);
Elem primitive_element(const FieldPtr& field);
/// All elements in canonical order (0 first, then powers of g).
std::vector<Elem> enumerate(const FieldPtr& field);

}  // namespace qfcodes
