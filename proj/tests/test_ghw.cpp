#include "qfcodes/config.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/ghw.hpp"

#include "random_forms.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qfcodes;

namespace {

void check_all_subspaces(const Code& code, bool with_audit) {
  for (unsigned r = 1; r <= code.dimension(); ++r) {
    const SubspaceEnumerator e(code.q(), code.dimension(), r);
    for (std::uint64_t s = 0; s < e.size(); ++s) {
      const Matrix H = e.at(s);
      const std::uint64_t direct = support_defect(code, H);
      REQUIRE(BigInt(direct) == support_defect_closed(code, H));
      if (with_audit && s % 7 == 0) REQUIRE(direct == support_defect_audit(code, H));
    }
  }
}

}  // namespace

TEST_CASE("support defect: direct = closed = character sum on small towers") {
  std::mt19937_64 rng(99);
  for (auto [p, m, m1, m2] : std::vector<std::array<unsigned, 4>>{{3, 1, 2, 1}, {3, 1, 3, 1}, {5, 1, 2, 1}, {3, 1, 2, 2}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    for (int trial = 0; trial < 2; ++trial) {
      const auto Q = testutil::random_form(t, rng);
      REQUIRE(Q);
      for (Variant v : {Variant::Homogeneous, Variant::Affine}) check_all_subspaces(Code(*Q, v), true);
    }
  }
}

TEST_CASE("documented support-defect values") {
  const ExperimentConfig cfg = preset("example-3.1");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Homogeneous);
  // span{(0, b0)}: hyperplane minus the origin
  CHECK(support_defect(code, Matrix{{0, 1, 0, 0}}) == 729 - 1);
  // span{(1, 0)}: t = q - 1 branch, 567 - 1 by the independent oracle count
  CHECK(support_defect(code, Matrix{{1, 0, 0, 0}}) == 566);
  CHECK(support_defect_closed(code, Matrix{{1, 0, 0, 0}}) == 566);
  const ExperimentConfig c6 = preset("example-3.6");
  const Code affine(QuadForm(c6.tower, c6.form), Variant::Affine);
  const SubspaceEnumerator whole(3, 6, 6);
  CHECK(support_defect(affine, whole.at(0)) == 0);
}

TEST_CASE("odd rank: support defect is constant over subspaces") {
  const ExperimentConfig cfg = preset("example-3.6");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Homogeneous);
  REQUIRE(code.analysis().rank % 2 == 1);
  for (unsigned r = 1; r <= code.dimension(); ++r) {
    const SubspaceEnumerator e(3, code.dimension(), r);
    const std::uint64_t expect = to_u64(ipow(3, code.tower().M() - r)) - 1;
    for (std::uint64_t s = 0; s < e.size(); s += 3) REQUIRE(support_defect(code, e.at(s)) == expect);
  }
}

TEST_CASE("GHW methods agree and r = 1 gives the minimum distance") {
  std::mt19937_64 rng(5);
  for (auto [p, m, m1, m2] : std::vector<std::array<unsigned, 4>>{{3, 1, 2, 1}, {3, 1, 3, 2}, {5, 1, 2, 1}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    const auto Q = testutil::random_form(t, rng);
    REQUIRE(Q);
    for (Variant v : {Variant::Homogeneous, Variant::Affine}) {
      const Code code(*Q, v);
      const std::uint64_t dmin = min_distance(weight_distribution_brute(code));
      std::uint64_t prev = 0;
      for (unsigned r = 1; r <= code.dimension(); ++r) {
        const GhwResult par = ghw_brute(code, r, GhwMethod::ZeroSets);
        const GhwResult ser = ghw_brute(code, r, GhwMethod::ZeroSetsSerial);
        const GhwResult dir = ghw_brute(code, r, GhwMethod::Direct);
        CHECK(par.d == ser.d);
        CHECK(par.d == dir.d);
        CHECK(par.witness == ser.witness);
        CHECK(par.witness == dir.witness);
        CHECK(BigInt(par.d) == ghw_closed(code, r));
        CHECK(support_defect(code, par.witness) == par.defect);
        CHECK(par.d > prev);
        prev = par.d;
        if (r == 1) CHECK(par.d == dmin);
      }
      // d_k is the support of the whole code; isotropic points with y = 0 are dead coordinates
      std::vector<bool> live(code.length(), false);
      for (unsigned j = 0; j < code.dimension(); ++j) {
        std::vector<Index> row(code.dimension(), 0);
        row[j] = 1;
        const auto word = code.codeword(code.from_row(row));
        for (std::size_t i = 0; i < word.size(); ++i) live[i] = live[i] || word[i] != 0;
      }
      CHECK(prev == std::uint64_t(std::count(live.begin(), live.end(), true)));
    }
  }
}

TEST_CASE("closed forms at the documented points") {
  const ExperimentConfig c2 = preset("example-3.2");
  const QuadFormAnalysis a2 = analyze(QuadForm(c2.tower, c2.form));
  CHECK(ghw_closed(c2.tower, a2, Variant::Homogeneous, 3) == 3120);
  const ExperimentConfig c4 = preset("example-3.4");
  const QuadFormAnalysis a4 = analyze(QuadForm(c4.tower, c4.form));
  std::vector<BigInt> h;
  for (unsigned r = 1; r <= 4; ++r) h.push_back(ghw_closed(c4.tower, a4, Variant::Homogeneous, r));
  CHECK(h == std::vector<BigInt>{2500, 3000, 3100, 3120});
  const ExperimentConfig c5 = preset("example-3.5");
  const QuadFormAnalysis a5 = analyze(QuadForm(c5.tower, c5.form));
  CHECK(ghw_closed(c5.tower, a5, Variant::Affine, 5) == 6561);
  CHECK(ghw_closed(c5.tower, a5, Variant::Affine, 2) == 5751);
  CHECK_THROWS_AS(ghw_closed(c5.tower, a5, Variant::Affine, 6), ParameterError);
}

TEST_CASE("hierarchy report flags disagreements and budget skips") {
  const ExperimentConfig cfg = preset("example-3.1");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Homogeneous);
  const GhwReport ok = hierarchy(code, 0, {1458, 1944, 2106, 2166});
  CHECK(ok.all_agree());
  CHECK(ok.strictly_increasing());
  const GhwReport bad = hierarchy(code, 0, {1458, 1945});
  CHECK_FALSE(bad.all_agree());
  CHECK_FALSE(bad.rows[1].agree());
  const GhwReport tight = hierarchy(code, 2, {}, 10);
  CHECK(tight.rows.size() == 2);
  CHECK_FALSE(tight.rows[0].brute);
  CHECK_FALSE(tight.rows[0].error.empty());
  CHECK_THROWS_AS(ghw_brute(code, 2, GhwMethod::ZeroSets, 10), ResourceError);
}
