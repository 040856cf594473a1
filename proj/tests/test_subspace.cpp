#include "qfcodes/errors.hpp"
#include "qfcodes/subspace.hpp"

#include "naive_field.hpp"

#include <doctest.h>

#include <set>

using namespace qfcodes;

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(gaussian_binomial(3, 2, 1) == 4);
  CHECK(gaussian_binomial(5, 3, 3) == 1);
  CHECK(gaussian_binomial(3, 6, 3) == 33880);
  CHECK(gaussian_binomial(3, 2, 3) == 0);
  // independent oracle: distinct spans counted as sets of vectors
  CHECK(gaussian_binomial(3, 4, 2) == oracle::count_subspaces_by_spans(3, 4, 2));
  CHECK(gaussian_binomial(5, 3, 2) == oracle::count_subspaces_by_spans(5, 3, 2));
}

TEST_CASE("enumeration yields distinct canonical bases") {
  for (auto [q, n, r] : std::vector<std::array<unsigned, 3>>{{3, 4, 2}, {3, 4, 0}, {3, 4, 4}, {5, 3, 1}, {3, 5, 3}}) {
    const SubspaceEnumerator e(q, n, r);
    REQUIRE(BigInt(e.size()) == gaussian_binomial(q, n, r));
    std::set<Matrix> seen;
    std::vector<std::uint64_t> idx(r);
    for (std::uint64_t s = 0; s < e.size(); ++s) {
      const Matrix b = e.at(s);
      CHECK(b.size() == r);
      CHECK(is_rref(b));
      seen.insert(b);
      e.row_indices(s, idx.data());
      for (unsigned i = 0; i < r; ++i) {
        std::uint64_t v = 0, pw = 1;
        for (unsigned j = 0; j < n; ++j, pw *= q) v += b[i][j] * pw;
        CHECK(v == idx[i]);
      }
    }
    CHECK(seen.size() == e.size());
  }
}

TEST_CASE("enumeration order starts with the leading pivots") {
  const SubspaceEnumerator e(3, 4, 4);
  CHECK(e.at(0) == Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const SubspaceEnumerator f(3, 2, 1);
  CHECK(f.at(0) == Matrix{{1, 0}});
  CHECK(f.at(1) == Matrix{{1, 1}});
  CHECK(f.at(2) == Matrix{{1, 2}});
  CHECK(f.at(3) == Matrix{{0, 1}});
}

TEST_CASE("rref predicate and argument errors") {
  CHECK(is_rref(Matrix{{1, 0, 2}, {0, 1, 1}}));
  CHECK_FALSE(is_rref(Matrix{{1, 1, 0}, {0, 1, 0}}));
  CHECK_FALSE(is_rref(Matrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_rref(Matrix{{2, 0}}));
  CHECK_THROWS_AS(SubspaceEnumerator(3, 2, 3), ParameterError);
  CHECK_THROWS_AS(SubspaceEnumerator(3, 2, 1).at(4), std::out_of_range);
}
