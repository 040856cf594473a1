#pragma once

// Coordinate-wise descent of F_q-codes to F_p: each symbol gamma becomes the
// column (Tr_{q/p}(gamma theta^i))_{i < L}, theta of order L = (q-1)/N.
// Codewords flatten point-major with i fastest.

#include "qfcodes/code.hpp"
#include "qfcodes/cyclotomic.hpp"
#include "qfcodes/ghw.hpp"
#include "qfcodes/kernels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qfcodes {

struct DescentParams {
  unsigned N = 1;
  Index theta = 0;
  std::uint64_t L = 0;
  bool admissible = true;  // false only for make_descent_unchecked outside the conditions
  std::string violation;   // the failed condition, when not admissible
};

/// Requires N | p - 1 and gcd(N, (q-1)/(p-1)) = 1. theta defaults to g^N;
/// an override must have multiplicative order (q-1)/N.
DescentParams make_descent(const FieldTower& tower, unsigned N, std::optional<Index> theta_override = std::nullopt);
/// Same construction without the coprimality condition (N | q - 1 is still required).
DescentParams make_descent_unchecked(const FieldTower& tower, unsigned N);

std::vector<Index> psi(const FieldTower& tower, const DescentParams& d, Index gamma);
std::uint64_t psi_weight(const FieldTower& tower, const DescentParams& d, Index gamma);

class DescendedCode {
 public:
  DescendedCode(const Code& source, DescentParams params);

  const Code& source() const { return source_; }
  const DescentParams& params() const { return params_; }
  std::uint64_t length() const { return source_.length() * params_.L; }
  /// m * source dimension.
  unsigned dimension() const;
  /// Rank over F_p of the descended images of an F_p-basis of the message space.
  std::size_t rank() const;

  std::vector<Index> codeword(const Message& m) const;
  /// Weight of psi_gamma for every gamma, indexed by element.
  const std::vector<std::uint64_t>& column_weights() const { return col_weight_; }
  /// Bit (point j, row i) sits at position j * L + i.
  bool zero_at(const Message& m, std::uint64_t point, std::uint64_t i) const;

 private:
  Code source_;
  DescentParams params_;
  std::vector<Index> tr_;               // Tr_{q/p} table
  std::vector<Index> theta_pow_;        // theta^i, i < L
  std::vector<std::uint64_t> col_weight_;
};

enum class DescentWdMode { Fast, Audit };
WeightDistribution descended_wd_brute(const DescendedCode& dc, DescentWdMode mode = DescentWdMode::Fast,
                                      std::uint64_t budget = kDefaultBudget);
/// Source tables with each weight scaled by (p-1) p^{m-1} / N; integrality asserted.
WeightDistribution descended_wd_predicted(const FieldTower& tower, const QuadFormAnalysis& an, Variant v, unsigned N);

struct OrbitVerdict {
  std::uint64_t stabilizer = 0;           // |F_p^* cap <theta>|
  std::uint64_t expected_stabilizer = 0;  // (p-1)/N
  std::uint64_t cosets = 0;               // [F_q^* : <theta>] = N
  std::uint64_t orbit = 0;                // size of the F_p^*-orbit of the trivial coset
  bool transitive() const { return orbit == cosets; }
  bool ok() const { return stabilizer == expected_stabilizer && transitive(); }
};
OrbitVerdict orbit_check(const FieldTower& tower, const DescentParams& d);

struct CharIdentityVerdict {
  CycInt first_lhs;
  CycQ first_rhs;
  CycInt second_lhs;
  CycQ second_rhs;
  bool first_ok() const { return to_rational(first_lhs) == first_rhs; }
  bool second_ok() const { return to_rational(second_lhs) == second_rhs; }
};
CharIdentityVerdict char_identity_check(const FieldTower& tower, const DescentParams& d, Index c, Index a);

/// F_p-subspaces of the message space; F_p coordinates are the base-p digits of the message index.
GhwResult descended_ghw_brute(const DescendedCode& dc, unsigned r, bool parallel = true,
                              std::uint64_t budget = kDefaultBudget,
                              const kernels::ZeroSets* zero_sets = nullptr);
kernels::ZeroSets descended_zero_sets(const DescendedCode& dc, bool parallel = true);
BigInt descended_ghw_closed(const FieldTower& tower, const QuadFormAnalysis& an, Variant v, unsigned N, unsigned r);

/// Support defect of an F_p-subspace given by message indices of its basis.
std::uint64_t descended_support_defect(const DescendedCode& dc, const std::vector<std::uint64_t>& basis);

/// Affine codes, r > m(m2+1): best subspace among {0} x F_{q2} x {0} + W, W ranging over
/// (r - m m2)-dimensional F_p-subspaces of the (a, c) coordinates.
struct OptimizerCheck {
  std::uint64_t defect = 0;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> basis;  // message indices
};
OptimizerCheck affine_optimizer(const DescendedCode& dc, unsigned r, std::uint64_t budget = kDefaultBudget);

}  // namespace qfcodes
