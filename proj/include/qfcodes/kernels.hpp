#pragma once

// Enumeration kernels. Each has an OpenMP path and a serial path that must
// produce identical results; the serial path is the reference.

#include "qfcodes/code.hpp"
#include "qfcodes/subspace.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qfcodes::kernels {

std::vector<Composition> compositions_serial(const Code& code, EnumMode mode);
std::vector<Composition> compositions_parallel(const Code& code, EnumMode mode);

/// One bitset per message: bit j set iff coordinate j of its codeword is zero.
class ZeroSets {
 public:
  ZeroSets(std::uint64_t rows, std::uint64_t bits);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t bits() const { return bits_; }
  std::uint64_t words() const { return words_; }
  void set(std::uint64_t row, std::uint64_t bit) { data_[row * words_ + bit / 64] |= std::uint64_t{1} << (bit % 64); }
  bool test(std::uint64_t row, std::uint64_t bit) const {
    return (data_[row * words_ + bit / 64] >> (bit % 64)) & 1u;
  }
  const std::uint64_t* row(std::uint64_t r) const { return data_.data() + r * words_; }

 private:
  std::uint64_t rows_, bits_, words_;
  std::vector<std::uint64_t> data_;
};

/// Zero sets of every codeword of the code, rows indexed by message index.
ZeroSets code_zero_sets(const Code& code, bool parallel);

struct SubspaceBest {
  std::uint64_t defect = 0;  // common zeros of the subspace
  std::uint64_t index = 0;   // smallest enumerator index attaining it
  std::uint64_t visited = 0;
};

/// Maximizes |intersection of basis zero sets| over every subspace of the enumerator.
/// Basis rows map to zero-set rows through SubspaceEnumerator::row_indices.
SubspaceBest best_subspace(const ZeroSets& zs, const SubspaceEnumerator& subspaces, bool parallel);

/// Reference path: `defect(index)` is evaluated for every subspace in order.
SubspaceBest best_subspace_serial(const SubspaceEnumerator& subspaces,
                                  const std::function<std::uint64_t(std::uint64_t)>& defect);

}  // namespace qfcodes::kernels
