#include "qfcodes/code.hpp"
#include "qfcodes/config.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/kernels.hpp"

#include "naive_field.hpp"
#include "random_forms.hpp"

#include <doctest.h>

using namespace qfcodes;

TEST_CASE("message encoding round trips and rows map to indices") {
  const ExperimentConfig cfg = preset("example-3.6");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Affine);
  CHECK(code.dimension() == 6);
  CHECK(code.message_count() == 729);
  for (std::uint64_t i = 0; i < code.message_count(); ++i) {
    const Message m = code.decode(i);
    REQUIRE(code.encode(m) == i);
  }
  const Message m = code.from_row({1, 2, 0, 0, 1, 2});
  CHECK(m.a == 1);
  CHECK(m.b == 2 + 27);
  CHECK(m.c == 2);
  CHECK_THROWS_AS(code.make_message(1, 0), ParameterError);
  CHECK_THROWS_AS(code.make_message(3, 0, 0), ParameterError);
  CHECK_THROWS_AS(code.from_row({1, 2, 3}), ParameterError);
}

TEST_CASE("points and lengths") {
  const ExperimentConfig cfg = preset("example-3.1");
  const QuadForm Q(cfg.tower, cfg.form);
  const Code h(Q, Variant::Homogeneous), a(Q, Variant::Affine);
  CHECK(h.length() == 2186);
  CHECK(a.length() == 2187);
  CHECK(h.points().size() == 2186);
  CHECK(a.points().front() == std::pair<Index, Index>{0, 0});
  CHECK(h.points().front() == std::pair<Index, Index>{0, 1});
}

TEST_CASE("Example 3.1 weight distribution fixed by the independent oracle") {
  // oracle: naive F_81 x F_27 evaluation of a Tr(x^2) + Tr(b y) gives {0:1, 1458:78, 1620:2}
  const ExperimentConfig cfg = preset("example-3.1");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Homogeneous);
  const WeightDistribution expect{{0, 1}, {1458, 78}, {1620, 2}};
  CHECK(weight_distribution_brute(code) == expect);
  CHECK(weight_distribution_brute(code, EnumMode::Audit) == expect);
  CHECK(weight_distribution_predicted(code) == expect);
}

TEST_CASE("Example 3.6 weight distribution fixed by the independent oracle") {
  // any primitive theta of F_27 is a non-square, so the distribution does not depend on the choice
  const oracle::NaiveField f27(3, 3), f81(3, 4);
  oracle::NaiveField::El theta;
  for (std::uint64_t i = 1; i < f27.size(); ++i) {
    const auto e = f27.element(i);
    if (f27.pow(e, 2) != f27.one() && f27.pow(e, 13) != f27.one()) {
      theta = e;
      break;
    }
  }
  std::vector<int> qv(27);
  for (std::uint64_t x = 0; x < 27; ++x) {
    const auto e = f27.element(x);
    qv[x] = f27.trace(f27.mul(theta, f27.mul(e, e)), 1)[0];
  }
  std::vector<std::vector<int>> tr(81, std::vector<int>(81));
  for (std::uint64_t b = 0; b < 81; ++b)
    for (std::uint64_t y = 0; y < 81; ++y) tr[b][y] = f81.trace(f81.mul(f81.element(b), f81.element(y)), 1)[0];
  WeightDistribution oracle_wd;
  for (int a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 81; ++b)
      for (int c = 0; c < 3; ++c) {
        std::uint64_t w = 0;
        for (std::uint64_t x = 0; x < 27; ++x)
          for (std::uint64_t y = 0; y < 81; ++y) w += (a * qv[x] + tr[b][y] + c) % 3 != 0;
        oracle_wd[w] += 1;
      }
  const WeightDistribution frozen{{0, 1}, {1215, 2}, {1458, 722}, {1701, 2}, {2187, 2}};
  CHECK(oracle_wd == frozen);
  const ExperimentConfig cfg = preset("example-3.6");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Affine);
  CHECK(weight_distribution_brute(code) == frozen);
  CHECK(weight_distribution_predicted(code) == frozen);
}

TEST_CASE("fast, audit, serial and parallel compositions coincide") {
  std::mt19937_64 rng(42);
  for (auto [p, m, m1, m2] : std::vector<std::array<unsigned, 4>>{{3, 1, 2, 2}, {5, 1, 2, 1}, {3, 2, 1, 1}, {3, 1, 3, 2}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    const auto Q = testutil::random_form(t, rng);
    REQUIRE(Q);
    for (Variant v : {Variant::Homogeneous, Variant::Affine}) {
      const Code code(*Q, v);
      const auto fast = kernels::compositions_serial(code, EnumMode::Fast);
      CHECK(fast == kernels::compositions_serial(code, EnumMode::Audit));
      CHECK(fast == kernels::compositions_parallel(code, EnumMode::Fast));
      for (std::uint64_t i = 0; i < code.message_count(); i += 5) {
        const Message msg = code.decode(i);
        const auto cw = code.codeword(msg);
        std::uint64_t zeros = 0;
        for (Index s : cw) zeros += s == 0;
        CHECK(zeros == fast[i][0]);
      }
    }
  }
}

TEST_CASE("predicted tables equal enumeration on random towers") {
  std::mt19937_64 rng(2024);
  for (auto [p, m, m1, m2] : std::vector<std::array<unsigned, 4>>{
           {3, 1, 2, 1}, {3, 1, 3, 1}, {3, 1, 4, 2}, {5, 1, 2, 1}, {5, 1, 3, 1}, {3, 2, 1, 1}, {3, 2, 2, 1}, {7, 1, 2, 1}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    for (int trial = 0; trial < 3; ++trial) {
      const auto Q = testutil::random_form(t, rng);
      REQUIRE(Q);
      for (Variant v : {Variant::Homogeneous, Variant::Affine}) {
        const Code code(*Q, v);
        CAPTURE(p);
        CAPTURE(m1);
        CAPTURE(code.analysis().rank);
        const CWE brute = cwe_brute(code);
        CHECK(brute == cwe_predicted(code));
        CHECK(marginalize(brute, code.length()) == weight_distribution_predicted(code));
        CHECK(total(brute) == code.message_count());
        for (const auto& [k, mult] : brute) {
          std::uint64_t sum = 0;
          for (auto c : k) sum += c;
          CHECK(sum == code.length());
        }
      }
    }
  }
}

TEST_CASE("relabeling") {
  const CWE a{{{1, 2, 0}, 1}, {{0, 1, 2}, 3}};
  const CWE b = relabel(a, {0, 2, 1});
  CHECK(b == CWE{{{1, 0, 2}, 1}, {{0, 2, 1}, 3}});
  const auto perm = find_relabeling(a, b);
  REQUIRE(perm);
  CHECK(relabel(a, *perm) == b);
  CHECK_FALSE(find_relabeling(a, CWE{{{1, 2, 0}, 2}, {{0, 1, 2}, 2}}));
  CHECK_THROWS_AS(relabel(a, {1, 0, 2}), ParameterError);
  // F_5: canonical g = 2, ordering (0, 1, 2, 4, 3); eta(-omega) = (+, -, +, -)
  const FieldPtr f5_ptr = build_tower(5, 1, 1, 1).fq;
  const Field& f5 = *f5_ptr;
  const auto p5 = relabeling_for_eta_pattern(f5, {1, 1, -1, -1});
  REQUIRE(p5);
  CHECK(*p5 == std::vector<std::size_t>{0, 1, 3, 2, 4});
  CHECK_FALSE(relabeling_for_eta_pattern(f5, {1, 1, 1, -1}));
}

TEST_CASE("Griesmer and Ashikhmin-Barg checks") {
  const auto g = griesmer_check(2186, 4, 1458, 3);
  CHECK(g.bound == 1458 + 486 + 162 + 54);
  CHECK_FALSE(g.meets);
  CHECK(g.slack == 2186 - 2160);
  CHECK(griesmer_check(13, 3, 9, 3).meets);  // simplex code [13, 3, 9]_3
  CHECK(ab_minimality({{0, 1}, {1458, 78}, {1620, 2}}, 3) == Minimality::MinimalByAB);
  CHECK(ab_minimality({{0, 1}, {1215, 2}, {2187, 2}}, 3) == Minimality::Inconclusive);
  CHECK(min_distance({{0, 1}, {7, 2}}) == 7);
}

TEST_CASE("odd-rank homogeneous codes meet the Griesmer bound exactly when m1 = 1") {
  std::mt19937_64 rng(31);
  int odd_seen = 0;
  for (auto [p, m, m1, m2] : std::vector<std::array<unsigned, 4>>{
           {3, 1, 1, 2}, {3, 1, 1, 4}, {5, 1, 1, 2}, {3, 2, 1, 2}, {3, 1, 2, 1}, {3, 1, 3, 2}, {5, 1, 3, 1}, {3, 2, 3, 1}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    for (int trial = 0; trial < 6; ++trial) {
      const auto Q = testutil::random_form(t, rng);
      REQUIRE(Q);
      const Code code(*Q, Variant::Homogeneous);
      if (code.analysis().rank % 2 == 0) continue;
      ++odd_seen;
      const auto wd = weight_distribution_brute(code);
      const auto g = griesmer_check(code.length(), code.dimension(), min_distance(wd), code.q());
      CAPTURE(m1);
      CHECK(g.meets == (m1 == 1));
      if (m1 == 1) CHECK(code.analysis().rank == 1);  // rank <= m1, so both readings of the condition agree
    }
  }
  CHECK(odd_seen > 10);
}

TEST_CASE("budget guard") {
  const ExperimentConfig cfg = preset("example-3.1");
  const Code code(QuadForm(cfg.tower, cfg.form), Variant::Homogeneous);
  CHECK_THROWS_AS(all_compositions(code, EnumMode::Fast, true, 1000), ResourceError);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("affine") == Variant::Affine);
  CHECK(to_string(Variant::Homogeneous) == "homogeneous");
  CHECK_THROWS_AS(parse_variant("projective"), ParameterError);
}
