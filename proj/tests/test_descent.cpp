#include "qfcodes/config.hpp"
#include "qfcodes/descent.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/subspace.hpp"

#include "random_forms.hpp"

#include <doctest.h>

#include <limits>

#include <numeric>

using namespace qfcodes;

namespace {

Code x_squared(unsigned p, unsigned m, unsigned m1, unsigned m2, Variant v) {
  return Code(QuadForm(build_tower(p, m, m1, m2), QuadFormSpec{{FrobTerm{1, 0}}, {}, {}}), v);
}

}  // namespace

TEST_CASE("admissibility of N") {
  const FieldTower t9 = build_tower(3, 2, 1, 1);
  CHECK_THROWS_WITH_AS(make_descent(t9, 2), doctest::Contains("gcd(2, 4) = 2"), ParameterError);
  const FieldTower t25 = build_tower(5, 2, 1, 1);
  CHECK_THROWS_WITH_AS(make_descent(t25, 2), doctest::Contains("gcd(2, 6) = 2"), ParameterError);
  CHECK_THROWS_WITH_AS(make_descent(t25, 3), doctest::Contains("does not divide p - 1"), ParameterError);
  const FieldTower t3 = build_tower(3, 1, 1, 1);
  const DescentParams d = make_descent(t3, 1);
  CHECK(d.theta == t3.fq->primitive());
  CHECK(d.L == 2);
  const DescentParams d2 = make_descent(build_tower(3, 1, 2, 1), 2);
  CHECK(d2.L == 1);
  CHECK_THROWS_AS(make_descent(t25, 1, Index(1)), ParameterError);  // theta of order 1
  const FieldTower t27 = build_tower(3, 3, 1, 1);
  CHECK(make_descent(t27, 2).L == 13);  // gcd(2, 13) = 1
  const DescentParams u = make_descent_unchecked(t25, 2);
  CHECK_FALSE(u.admissible);
  CHECK(u.L == 12);
}

TEST_CASE("psi is linear, injective and of constant weight when admissible") {
  for (auto [p, m, N] : std::vector<std::array<unsigned, 3>>{{3, 1, 1}, {3, 1, 2}, {5, 1, 4}, {5, 2, 1}, {3, 2, 1}, {3, 3, 2}, {7, 2, 3}}) {
    CAPTURE(p);
    CAPTURE(m);
    CAPTURE(N);
    const FieldTower t = build_tower(p, m, 1, 1);
    const DescentParams d = make_descent(t, N);
    const Field& fq = *t.fq;
    std::set<std::vector<Index>> images;
    const std::uint64_t expect = (p - 1) * to_u64(ipow(p, m - 1)) / N;
    for (Index g = 0; g < fq.size(); ++g) {
      const auto v = psi(t, d, g);
      images.insert(v);
      if (g) CHECK(psi_weight(t, d, g) == expect);
    }
    CHECK(images.size() == fq.size());
    for (Index a = 0; a < fq.size(); a += 3)
      for (Index b = 0; b < fq.size(); b += 2) {
        const auto va = psi(t, d, a), vb = psi(t, d, b), vs = psi(t, d, fq.add(a, b));
        for (std::size_t i = 0; i < vs.size(); ++i) REQUIRE(vs[i] == t.fp->add(va[i], vb[i]));
      }
  }
}

TEST_CASE("inadmissible (5,2,N=2): psi weights fixed by the independent oracle") {
  // oracle: naive F_25 with theta = g^2 gives weights {8: 12, 12: 12}
  const FieldTower t = build_tower(5, 2, 1, 1);
  const DescentParams d = make_descent_unchecked(t, 2);
  std::map<std::uint64_t, int> hist;
  for (Index g = 1; g < 25; ++g) ++hist[psi_weight(t, d, g)];
  CHECK(hist == std::map<std::uint64_t, int>{{8, 12}, {12, 12}});
  const OrbitVerdict v = orbit_check(t, d);
  CHECK(v.stabilizer == 4);
  CHECK(v.expected_stabilizer == 2);
  CHECK_FALSE(v.transitive());
}

TEST_CASE("stabilizer size (p-1)/N for admissible parameters with p <= 7, m <= 2") {
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned m : {1u, 2u})
      for (unsigned N = 1; N <= p - 1; ++N) {
        const FieldTower t = build_tower(p, m, 1, 1);
        DescentParams d;
        try {
          d = make_descent(t, N);
        } catch (const ParameterError&) {
          continue;
        }
        const OrbitVerdict v = orbit_check(t, d);
        CHECK(v.stabilizer == (p - 1) / N);
        CHECK(v.transitive());
      }
}

TEST_CASE("character identities hold exhaustively for admissible parameters") {
  for (auto [p, m, N] : std::vector<std::array<unsigned, 3>>{{3, 1, 1}, {3, 1, 2}, {5, 2, 1}, {3, 2, 1}, {3, 3, 2}, {5, 1, 2}}) {
    const FieldTower t = build_tower(p, m, 1, 1);
    const DescentParams d = make_descent(t, N);
    for (Index a = 1; a < t.q(); ++a)
      for (Index c = 1; c < t.q(); ++c) {
        const auto v = char_identity_check(t, d, c, a);
        REQUIRE(v.first_ok());
        REQUIRE(v.second_ok());
      }
  }
  const FieldTower t3 = build_tower(3, 1, 1, 1);
  const auto v = char_identity_check(t3, make_descent(t3, 1), 1, 1);
  CHECK(v.first_lhs == CycInt(3, BigInt(-2)));
  CHECK_THROWS_AS(char_identity_check(t3, make_descent(t3, 1), 0, 1), DomainError);
}

TEST_CASE("descended codes: length, rank, weights") {
  std::mt19937_64 rng(8);
  for (auto [p, m, m1, m2, N] : std::vector<std::array<unsigned, 5>>{{5, 2, 1, 1, 1}, {3, 2, 1, 1, 1}, {3, 1, 2, 1, 2}, {3, 2, 2, 1, 1}, {5, 1, 2, 1, 2}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    const auto Q = testutil::random_form(t, rng);
    REQUIRE(Q);
    for (Variant v : {Variant::Homogeneous, Variant::Affine}) {
      const Code code(*Q, v);
      const DescendedCode dc(code, make_descent(t, N));
      CHECK(dc.length() == code.length() * (t.q() - 1) / N);
      CHECK(dc.rank() == m * code.dimension());
      if (code.message_count() * dc.length() > kDefaultBudget) {
        CHECK_THROWS_AS(descended_wd_brute(dc), ResourceError);
        continue;
      }
      const WeightDistribution brute = descended_wd_brute(dc);
      CHECK(brute == descended_wd_predicted(t, code.analysis(), v, N));
      if (code.message_count() * dc.length() < 3'000'000) CHECK(brute == descended_wd_brute(dc, DescentWdMode::Audit));
      const auto zero = dc.codeword(code.decode(0));
      CHECK(std::all_of(zero.begin(), zero.end(), [](Index x) { return x == 0; }));
    }
  }
}

TEST_CASE("descended hierarchies: brute force equals the closed forms") {
  std::mt19937_64 rng(77);
  for (auto [p, m, m1, m2, N] : std::vector<std::array<unsigned, 5>>{{5, 2, 1, 1, 1}, {3, 2, 1, 1, 1}, {3, 1, 2, 1, 2}, {3, 1, 2, 2, 1}, {3, 2, 2, 1, 1}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    for (int trial = 0; trial < 2; ++trial) {
      const auto Q = testutil::random_form(t, rng);
      REQUIRE(Q);
      for (Variant v : {Variant::Homogeneous, Variant::Affine}) {
        const Code code(*Q, v);
        const DescendedCode dc(code, make_descent(t, N));
        const auto zs = descended_zero_sets(dc);
        std::uint64_t prev = 0;
        for (unsigned r = 1; r <= dc.dimension(); ++r) {
          CAPTURE(r);
          CAPTURE(code.analysis().rank);
          CAPTURE(code.analysis().eps);
          CAPTURE(to_string(v));
          const BigInt words = gaussian_binomial(p, dc.dimension(), r) * ((dc.length() + 63) / 64);
          if (words > 200'000'000) continue;
          const GhwResult g = descended_ghw_brute(dc, r, true, std::numeric_limits<std::uint64_t>::max(), &zs);
          CHECK(BigInt(g.d) == descended_ghw_closed(t, code.analysis(), v, N, r));
          CHECK(g.d > prev);
          prev = g.d;
        }
        if (v == Variant::Affine)
          for (unsigned r = m * (m2 + 1) + 1; r <= dc.dimension(); ++r)
            CHECK(BigInt(affine_optimizer(dc, r).d) == descended_ghw_closed(t, code.analysis(), v, N, r));
      }
    }
  }
}

TEST_CASE("theta override leaves the weights unchanged") {
  const Code code = x_squared(5, 2, 1, 1, Variant::Homogeneous);
  const FieldTower& t = code.tower();
  const Index other = t.fq->exp(5);  // another generator: gcd(5, 24) = 1
  const DescendedCode a(code, make_descent(t, 1)), b(code, make_descent(t, 1, other));
  CHECK(descended_wd_brute(a) == descended_wd_brute(b));
}
