#include "qfcodes/subspace.hpp"

#include "qfcodes/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qfcodes {

BigInt gaussian_binomial(std::uint64_t q, unsigned n, unsigned r) {
  if (r > n) return 0;
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < r; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

bool is_rref(const Matrix& rows) {
  long prev = -1;
  std::vector<std::size_t> pivots;
  for (const auto& row : rows) {
    auto it = std::find_if(row.begin(), row.end(), [](Index v) { return v != 0; });
    if (it == row.end()) return false;
    long col = long(it - row.begin());
    if (col <= prev || *it != 1) return false;
    prev = col;
    pivots.push_back(std::size_t(col));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j && rows[j][pivots[i]] != 0) return false;
  return true;
}

SubspaceEnumerator::SubspaceEnumerator(std::uint64_t field_size, unsigned n, unsigned r)
    : q_(field_size), n_(n), r_(r) {
  if (r > n) throw ParameterError("subspace dimension exceeds ambient dimension");
  if (field_size < 2) throw ParameterError("field size must be at least 2");
  count_ = gaussian_binomial(q_, n_, r_);
  if (count_ > std::numeric_limits<std::uint64_t>::max())
    throw ResourceError("subspace enumeration index overflow", count_.str(), std::numeric_limits<std::uint64_t>::max());
  powers_.resize(n_);
  std::uint64_t pw = 1;
  for (unsigned j = 0; j < n_; ++j, pw *= q_) powers_[j] = pw;

  std::vector<unsigned> piv(r_);
  for (unsigned i = 0; i < r_; ++i) piv[i] = i;
  std::uint64_t start = 0;
  while (true) {
    Block b;
    b.pivots = piv;
    for (unsigned i = 0; i < r_; ++i)
      for (unsigned c = piv[i] + 1; c < n_; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) b.slots.push_back({i, c});
    b.start = start;
    b.count = static_cast<std::uint64_t>(ipow(q_, unsigned(b.slots.size())));
    start += b.count;
    blocks_.push_back(std::move(b));
    // next combination in lexicographic order
    int i = int(r_) - 1;
    while (i >= 0 && piv[i] == n_ - r_ + unsigned(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned j = unsigned(i) + 1; j < r_; ++j) piv[j] = piv[j - 1] + 1;
  }
  if (BigInt(start) != count_) throw std::logic_error("subspace block sizes disagree with the Gaussian binomial");
}

std::uint64_t SubspaceEnumerator::size() const { return static_cast<std::uint64_t>(count_); }

const SubspaceEnumerator::Block& SubspaceEnumerator::block_of(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("subspace index out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t v, const Block& b) { return v < b.start; });
  return *(it - 1);
}

Matrix SubspaceEnumerator::at(std::uint64_t index) const {
  const Block& b = block_of(index);
  Matrix rows(r_, std::vector<Index>(n_, 0));
  for (unsigned i = 0; i < r_; ++i) rows[i][b.pivots[i]] = 1;
  std::uint64_t off = index - b.start;
  for (std::size_t s = b.slots.size(); s-- > 0;) {
    rows[b.slots[s].row][b.slots[s].col] = Index(off % q_);
    off /= q_;
  }
  return rows;
}

void SubspaceEnumerator::row_indices(std::uint64_t index, std::uint64_t* out) const {
  const Block& b = block_of(index);
  for (unsigned i = 0; i < r_; ++i) out[i] = powers_[b.pivots[i]];
  std::uint64_t off = index - b.start;
  for (std::size_t s = b.slots.size(); s-- > 0;) {
    out[b.slots[s].row] += (off % q_) * powers_[b.slots[s].col];
    off /= q_;
  }
}

}  // namespace qfcodes
