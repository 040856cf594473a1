#pragma once

// The homogeneous code (a Q(x) + Tr(b y)) over F \ {(0,0)} and the affine
// code (a Q(x) + Tr(b y) + c) over F, plus their weight statistics.

#include "qfcodes/bigint.hpp"
#include "qfcodes/cyclotomic.hpp"
#include "qfcodes/gf_tower.hpp"
#include "qfcodes/quadform.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qfcodes {

enum class Variant { Homogeneous, Affine };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Message (a, b, c); c stays 0 for the homogeneous code.
struct Message {
  Index a = 0;
  Index b = 0;
  Index c = 0;
};

/// Symbol counts indexed by position in the canonical ordering of F_q.
using Composition = std::vector<std::uint64_t>;
/// weight -> frequency, including weight 0.
using WeightDistribution = std::map<std::uint64_t, BigInt>;
/// composition -> multiplicity, ordered lexicographically by composition.
using CWE = std::map<Composition, BigInt>;

enum class EnumMode {
  Fast,   // per-message histograms of a Q(x) and Tr(b y), convolved
  Audit,  // literal evaluation at every point
};

class Code {
 public:
  /// Analyzes Q; rank-0 forms raise UnsupportedInput.
  Code(QuadForm Q, Variant variant);

  const QuadForm& form() const { return Q_; }
  const FieldTower& tower() const { return Q_.tower(); }
  const QuadFormAnalysis& analysis() const { return an_; }
  Variant variant() const { return variant_; }

  std::uint64_t q() const { return tower().q(); }
  std::uint64_t length() const { return length_; }
  /// Dimension over F_q of the message space: m2+1 or m2+2.
  unsigned dimension() const;
  std::uint64_t message_count() const { return message_count_; }

  /// Validates ranges and arity (c present iff affine).
  Message make_message(Index a, Index b, std::optional<Index> c = std::nullopt) const;
  /// Message index: base-q digits (a, b_0, ..., b_{m2-1}, c).
  std::uint64_t encode(const Message& m) const;
  Message decode(std::uint64_t index) const;
  /// Message with the given F_q coordinate row (length dimension()).
  Message from_row(const std::vector<Index>& row) const;

  /// Evaluation points in codeword order: x-major over canonical orderings,
  /// origin dropped for the homogeneous code.
  const std::vector<std::pair<Index, Index>>& points() const { return points_; }
  Index symbol(const Message& m, Index x, Index y) const {
    const Field& fq = *tower().fq;
    return fq.add(fq.add(fq.mul(m.a, Q_.eval(x)), tr2_[tower().f2->mul(m.b, y)]), m.c);
  }
  std::vector<Index> codeword(const Message& m) const;

  Composition composition(const Message& m, EnumMode mode) const;
  /// Hamming weight from a composition: length - k_0.
  std::uint64_t weight(const Composition& k) const { return length_ - k[0]; }

 private:
  QuadForm Q_;
  QuadFormAnalysis an_;
  Variant variant_;
  std::uint64_t length_ = 0;
  std::uint64_t message_count_ = 0;
  std::vector<Index> tr2_;
  std::vector<std::uint64_t> q_hist_;  // #{x : Q(x) = v}
  std::vector<std::pair<Index, Index>> points_;
};

/// Every message's composition; `parallel` selects the OpenMP kernel.
std::vector<Composition> all_compositions(const Code& code, EnumMode mode, bool parallel = true,
                                          std::uint64_t budget = kDefaultBudget);

WeightDistribution weight_distribution_brute(const Code& code, EnumMode mode = EnumMode::Fast,
                                             std::uint64_t budget = kDefaultBudget);
CWE cwe_brute(const Code& code, EnumMode mode = EnumMode::Fast, std::uint64_t budget = kDefaultBudget);
WeightDistribution weight_distribution_from(const Code& code, const std::vector<Composition>& comps);
CWE cwe_from(const std::vector<Composition>& comps);

WeightDistribution weight_distribution_predicted(const FieldTower& tower, const QuadFormAnalysis& an, Variant v);
CWE cwe_predicted(const FieldTower& tower, const QuadFormAnalysis& an, Variant v);
inline WeightDistribution weight_distribution_predicted(const Code& c) {
  return weight_distribution_predicted(c.tower(), c.analysis(), c.variant());
}
inline CWE cwe_predicted(const Code& c) { return cwe_predicted(c.tower(), c.analysis(), c.variant()); }

/// Sums multiplicities by Hamming weight (length - k_0).
WeightDistribution marginalize(const CWE& cwe, std::uint64_t length);
BigInt total(const WeightDistribution& wd);
BigInt total(const CWE& cwe);
/// Smallest nonzero weight; 0 for the zero code.
std::uint64_t min_distance(const WeightDistribution& wd);

/// Applies perm to nonzero symbol positions: new[perm[i]] = old[i], perm[0] = 0.
CWE relabel(const CWE& cwe, const std::vector<std::size_t>& perm);
/// Permutation of nonzero symbols making a and b equal, found by exhaustive
/// search over (q-1)! candidates (q - 1 <= 8); nullopt if none exists.
std::optional<std::vector<std::size_t>> find_relabeling(const CWE& a, const CWE& b);
/// Permutation sending position i (1-based) of an ordering whose eta(-omega_i)
/// values are `pattern` onto a position of fq's canonical ordering with the
/// same value; nullopt when the value counts differ.
std::optional<std::vector<std::size_t>> relabeling_for_eta_pattern(const Field& fq, const std::vector<int>& pattern,
                                                                   bool negate = true);

struct GriesmerVerdict {
  BigInt bound;  // sum_{i<k} ceil(d / q^i)
  bool meets = false;
  BigInt slack;  // n - bound
};
GriesmerVerdict griesmer_check(const BigInt& n, unsigned k, const BigInt& d, std::uint64_t q);

enum class Minimality { MinimalByAB, Inconclusive };
std::string to_string(Minimality m);
/// w_min * q > w_max * (q - 1) over nonzero weights.
Minimality ab_minimality(const WeightDistribution& wd, std::uint64_t q);

}  // namespace qfcodes
