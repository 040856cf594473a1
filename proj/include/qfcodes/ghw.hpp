#pragma once

// Generalized Hamming weights of the homogeneous and affine codes. Message
// subspaces are F_q-subspaces of F_q^{dimension()}, coordinates ordered as in
// Code::from_row: (a, b_0, ..., b_{m2-1}[, c]).

#include "qfcodes/code.hpp"
#include "qfcodes/kernels.hpp"
#include "qfcodes/subspace.hpp"

#include <optional>
#include <vector>

namespace qfcodes {

/// Points where every basis message's codeword vanishes. Stops at the first
/// nonzero basis functional per point.
std::uint64_t support_defect(const Code& code, const Matrix& basis);
/// The same count as (1/q^r) sum_{h in H} sum_points zeta^{Tr(h(point))}.
std::uint64_t support_defect_audit(const Code& code, const Matrix& basis);

/// Counts of special messages in the span of a basis.
struct SpanStrata {
  std::uint64_t t = 0;   // (a, 0) or (a, 0, 0) with a != 0
  std::uint64_t t2 = 0;  // (a, 0, c) with a c != 0
  std::uint64_t t3 = 0;  // (0, 0, c) with c != 0
  long long eta_ac = 0;  // sum of eta(a c) over the t2 messages
};
SpanStrata span_strata(const Code& code, const Matrix& basis);

/// Closed-form N(H) from the strata of H.
BigInt support_defect_closed(const Code& code, const Matrix& basis);

struct GhwResult {
  std::uint64_t d = 0;
  std::uint64_t defect = 0;  // max N(H)
  Matrix witness;            // RREF basis attaining it
  BigInt subspaces;
};

enum class GhwMethod {
  ZeroSets,      // bitset kernel, OpenMP
  ZeroSetsSerial,
  Direct,        // serial per-subspace evaluation
};

/// Budget guard: [dimension choose r]_q * length.
GhwResult ghw_brute(const Code& code, unsigned r, GhwMethod method = GhwMethod::ZeroSets,
                    std::uint64_t budget = kDefaultBudget, const kernels::ZeroSets* zero_sets = nullptr);

BigInt ghw_closed(const FieldTower& tower, const QuadFormAnalysis& an, Variant v, unsigned r);
inline BigInt ghw_closed(const Code& c, unsigned r) { return ghw_closed(c.tower(), c.analysis(), c.variant(), r); }

struct GhwRow {
  unsigned r = 0;
  std::optional<std::uint64_t> brute;
  BigInt closed;
  std::optional<std::uint64_t> reference;
  Matrix witness;
  std::string error;  // set when brute force was skipped

  /// Every available value coincides.
  bool agree() const;
};

struct GhwReport {
  std::vector<GhwRow> rows;
  bool all_agree() const;
  /// Strict increase over the brute-force column (falls back to closed values).
  bool strictly_increasing() const;
};

/// Rows r = 1..r_max (dimension when 0). Budget failures are recorded per row.
GhwReport hierarchy(const Code& code, unsigned r_max = 0, const std::vector<std::uint64_t>& reference = {},
                    std::uint64_t budget = kDefaultBudget);

}  // namespace qfcodes
