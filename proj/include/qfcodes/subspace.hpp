#pragma once

// Canonical enumeration of r-dimensional subspaces of F^n by reduced
// row-echelon bases. Order: pivot-column sets lexicographically, then free
// entries as base-|F| digits with the first free slot most significant.
// Random access by global index makes the stream partitionable.

#include "qfcodes/bigint.hpp"
#include "qfcodes/linalg.hpp"

#include <cstdint>
#include <vector>

namespace qfcodes {

/// [n choose r]_q.
BigInt gaussian_binomial(std::uint64_t q, unsigned n, unsigned r);

/// Pivot columns strictly increasing, pivots equal to 1, zeros elsewhere in pivot columns.
bool is_rref(const Matrix& rows);

class SubspaceEnumerator {
 public:
  SubspaceEnumerator(std::uint64_t field_size, unsigned n, unsigned r);

  std::uint64_t field_size() const { return q_; }
  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  const BigInt& count() const { return count_; }
  /// count() as a machine integer; throws std::overflow_error when it does not fit.
  std::uint64_t size() const;

  Matrix at(std::uint64_t index) const;
  /// Writes sum_j row[j] * q^j for each of the r basis rows of at(index).
  void row_indices(std::uint64_t index, std::uint64_t* out) const;

 private:
  struct Slot {
    unsigned row;
    unsigned col;
  };
  struct Block {
    std::vector<unsigned> pivots;
    std::vector<Slot> slots;
    std::uint64_t start = 0;
    std::uint64_t count = 0;
  };
  const Block& block_of(std::uint64_t index) const;

  std::uint64_t q_;
  unsigned n_, r_;
  BigInt count_;
  std::vector<Block> blocks_;
  std::vector<std::uint64_t> powers_;  // q^j, j < n
};

}  // namespace qfcodes
