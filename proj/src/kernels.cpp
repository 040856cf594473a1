#include "qfcodes/kernels.hpp"

#include <omp.h>

#include <bit>

namespace qfcodes::kernels {

std::vector<Composition> compositions_serial(const Code& code, EnumMode mode) {
  std::vector<Composition> out(code.message_count());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = code.composition(code.decode(i), mode);
  return out;
}

std::vector<Composition> compositions_parallel(const Code& code, EnumMode mode) {
  std::vector<Composition> out(code.message_count());
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) out[i] = code.composition(code.decode(std::uint64_t(i)), mode);
  return out;
}

ZeroSets::ZeroSets(std::uint64_t rows, std::uint64_t bits)
    : rows_(rows), bits_(bits), words_((bits + 63) / 64), data_(rows * words_, 0) {}

ZeroSets code_zero_sets(const Code& code, bool parallel) {
  ZeroSets zs(code.message_count(), code.length());
  const auto& pts = code.points();
  const auto n = static_cast<std::int64_t>(code.message_count());
  // Rows are disjoint word ranges, so parallel writes never share a word.
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const Message m = code.decode(std::uint64_t(i));
    for (std::uint64_t j = 0; j < pts.size(); ++j)
      if (code.symbol(m, pts[j].first, pts[j].second) == 0) zs.set(std::uint64_t(i), j);
  }
  return zs;
}

namespace {

std::uint64_t common_zeros(const ZeroSets& zs, const std::uint64_t* rows, unsigned r) {
  if (r == 0) return zs.bits();
  std::uint64_t total = 0;
  const std::uint64_t* first = zs.row(rows[0]);
  for (std::uint64_t w = 0; w < zs.words(); ++w) {
    std::uint64_t acc = first[w];
    for (unsigned k = 1; k < r && acc; ++k) acc &= zs.row(rows[k])[w];
    total += std::uint64_t(std::popcount(acc));
  }
  return total;
}

bool better(std::uint64_t d, std::uint64_t idx, const SubspaceBest& cur) {
  return d > cur.defect || (d == cur.defect && idx < cur.index);
}

}  // namespace

SubspaceBest best_subspace(const ZeroSets& zs, const SubspaceEnumerator& subspaces, bool parallel) {
  const std::uint64_t count = subspaces.size();
  const unsigned r = subspaces.r();
  SubspaceBest best{0, count, count};
#pragma omp parallel if (parallel)
  {
    SubspaceBest local{0, count, 0};
    std::vector<std::uint64_t> rows(r);
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < std::int64_t(count); ++s) {
      subspaces.row_indices(std::uint64_t(s), rows.data());
      const std::uint64_t d = common_zeros(zs, rows.data(), r);
      if (better(d, std::uint64_t(s), local)) local = {d, std::uint64_t(s), 0};
    }
#pragma omp critical(qfcodes_best_subspace)
    if (local.index < count && better(local.defect, local.index, best)) best = {local.defect, local.index, count};
  }
  return best;
}

SubspaceBest best_subspace_serial(const SubspaceEnumerator& subspaces,
                                  const std::function<std::uint64_t(std::uint64_t)>& defect) {
  const std::uint64_t count = subspaces.size();
  SubspaceBest best{0, count, count};
  for (std::uint64_t s = 0; s < count; ++s) {
    const std::uint64_t d = defect(s);
    if (better(d, s, best)) best = {d, s, count};
  }
  return best;
}

}  // namespace qfcodes::kernels
