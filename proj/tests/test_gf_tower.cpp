#include "qfcodes/errors.hpp"
#include "qfcodes/gf_tower.hpp"

#include "naive_field.hpp"

#include <doctest.h>

#include <random>

using namespace qfcodes;

namespace {

void check_axioms(const Field& f) {
  const Index n = f.size();
  for (Index x = 0; x < n; ++x) {
    CHECK(f.add(x, 0) == x);
    CHECK(f.mul(x, 1) == x);
    CHECK(f.add(x, f.neg(x)) == 0);
    if (x) CHECK(f.mul(x, f.inv(x)) == 1);
    for (Index y = 0; y < n; ++y) {
      REQUIRE(f.add(x, y) == f.add(y, x));
      REQUIRE(f.mul(x, y) == f.mul(y, x));
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Index a = Index(rng() % n), b = Index(rng() % n), c = Index(rng() % n);
    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
  }
}

}  // namespace

TEST_CASE("field axioms hold on tower fields") {
  for (auto [p, m, m1, m2] : std::vector<std::array<unsigned, 4>>{{3, 1, 2, 1}, {5, 2, 1, 1}, {3, 2, 2, 1}, {3, 1, 3, 4}}) {
    const FieldTower t = build_tower(p, m, m1, m2);
    check_axioms(*t.fp);
    check_axioms(*t.fq);
    check_axioms(*t.f1);
    check_axioms(*t.f2);
  }
}

TEST_CASE("pinned moduli are the smallest monic irreducibles") {
  CHECK(build_tower(3, 2, 1, 1).fq->modulus() == Poly{1, 0, 1});
  CHECK(build_tower(5, 2, 1, 1).fq->modulus() == Poly{2, 0, 1});
  // independent oracle: brute-force factor search over F_3 picks the same quartic
  const oracle::NaiveField naive(3, 4);
  const auto f81 = build_tower(3, 1, 4, 1).f1;
  Poly ours = f81->modulus();
  REQUIRE(ours.size() == naive.f.size());
  for (std::size_t i = 0; i < ours.size(); ++i) CHECK(int(ours[i]) == naive.f[i]);
}

TEST_CASE("degree-one levels reuse the field below and equal degrees share a field") {
  const FieldTower t = build_tower(5, 1, 1, 2);
  CHECK(t.fq == t.fp);
  CHECK(t.f1 == t.fq);
  const FieldTower u = build_tower(3, 1, 2, 2);
  CHECK(u.f1 == u.f2);
}

TEST_CASE("subfields embed as leading indices") {
  const FieldTower t = build_tower(3, 2, 2, 1);
  const Field& big = *t.f1;
  const Field& fq = *t.fq;
  for (Index a = 0; a < fq.size(); ++a)
    for (Index b = 0; b < fq.size(); ++b) {
      CHECK(big.add(a, b) == fq.add(a, b));
      CHECK(big.mul(a, b) == fq.mul(a, b));
    }
  CHECK(big.contains(fq));
  CHECK(big.contains(*t.fp));
  CHECK_FALSE(fq.contains(big));
}

TEST_CASE("trace is transitive and lands in the target") {
  const FieldTower t = build_tower(3, 2, 2, 1);
  const Field& big = *t.f1;
  for (Index x = 0; x < big.size(); ++x) {
    const Index tq = big.trace_to(*t.fq, x);
    CHECK(tq < t.fq->size());
    CHECK(t.fq->trace_to(*t.fp, tq) == big.trace_to(*t.fp, x));
  }
  CHECK_THROWS_AS(t.fq->trace_to(big, 1), FieldMismatch);
}

TEST_CASE("trace agrees with the naive oracle on F_81 -> F_3 for x^2") {
  const oracle::NaiveField naive(3, 4);
  const auto f81 = build_tower(3, 1, 4, 1).f1;
  // identical moduli mean identical coordinate vectors
  for (Index x = 0; x < 81; ++x) {
    const auto e = naive.element(x);
    CHECK(Index(naive.trace(naive.mul(e, e), 1)[0]) == f81->trace_to(*f81->base(), f81->mul(x, x)));
  }
}

TEST_CASE("quadratic character is multiplicative") {
  for (const FieldPtr& f : {build_tower(5, 2, 1, 1).fq, build_tower(3, 3, 1, 1).fq, build_tower(7, 1, 1, 1).fq}) {
    for (Index a = 0; a < f->size(); ++a)
      for (Index b = 0; b < f->size(); ++b) REQUIRE(f->quad_char(f->mul(a, b)) == f->quad_char(a) * f->quad_char(b));
    int sum = 0;
    for (Index a = 0; a < f->size(); ++a) sum += f->quad_char(a);
    CHECK(sum == 0);
  }
}

TEST_CASE("canonical primitive, ordering and logs") {
  const FieldTower t = build_tower(3, 2, 1, 1);
  const Field& f = *t.fq;
  CHECK(f.order(f.primitive()) == f.size() - 1);
  const auto ord = f.ordering();
  CHECK(ord[0] == 0);
  for (std::size_t i = 1; i < ord.size(); ++i) {
    CHECK(ord[i] == f.exp(i - 1));
    CHECK(f.position(ord[i]) == i);
  }
  for (Index x = 1; x < f.size(); ++x) CHECK(f.exp(f.log(x)) == x);
}

TEST_CASE("powers with arbitrary-precision and negative exponents") {
  const FieldPtr f_ptr = build_tower(5, 2, 1, 1).fq;
  const Field& f = *f_ptr;
  const Index g = f.primitive();
  CHECK(f.pow(g, BigInt(24)) == 1);
  CHECK(f.pow(g, BigInt(-1)) == f.inv(g));
  CHECK(f.pow(0, BigInt(0)) == 1);
  CHECK(f.pow(g, ipow(BigInt(10), 30)) == f.pow(g, std::uint64_t(ipow(BigInt(10), 30) % 24)));
}

TEST_CASE("error kinds") {
  const FieldPtr f_ptr = build_tower(3, 1, 1, 1).fq;
  const Field& f = *f_ptr;
  CHECK_THROWS_AS(f.inv(0), DomainError);
  CHECK_THROWS_AS(build_tower(9, 1, 1, 1), ParameterError);
  CHECK_THROWS_AS(build_tower(2, 1, 1, 1), ParameterError);
  CHECK_THROWS_AS(build_tower(3, 0, 1, 1), ParameterError);
  CHECK_THROWS_AS(find_irreducible(f, 0), ParameterError);
  const FieldTower t = build_tower(3, 1, 2, 3);
  const Elem a(t.f1, 1), b(t.f2, 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(Field::extension(t.fp, Poly{1, 0, 2}), ParameterError);     // 2x^2 + 1 is not monic
  CHECK_THROWS_AS(Field::extension(t.fp, Poly{2, 0, 1}), ParameterError);     // x^2 - 1 is reducible
}

TEST_CASE("description pins the representation") {
  const auto d = describe(build_tower(5, 2, 1, 1));
  CHECK(d["p"] == 5);
  CHECK(d["q"] == 25);
  CHECK(d["moduli"]["Fq/Fp"] == nlohmann::json::array({2, 0, 1}));
}

TEST_CASE("coefficient round trip") {
  const FieldPtr f_ptr = build_tower(3, 2, 3, 1).f1;
  const Field& f = *f_ptr;
  for (Index x = 0; x < f.size(); x += 7) {
    const auto c = f.coeffs(x);
    CHECK(c.size() == 3);
    CHECK(f.from_coeffs(c) == x);
  }
}
