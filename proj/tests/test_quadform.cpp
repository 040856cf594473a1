#include "qfcodes/config.hpp"
#include "qfcodes/errors.hpp"
#include "qfcodes/quadform.hpp"

#include <doctest.h>

#include <random>

using namespace qfcodes;

TEST_CASE("ranks and discriminant characters of the example forms") {
  struct Expect {
    const char* preset;
    unsigned rank;
    int eps_Q;
    int eps;
  };
  for (const auto& e : {Expect{"example-3.1", 4, -1, -1}, Expect{"example-3.2", 2, -1, -1}, Expect{"example-3.3", 3, -1, -1},
                        Expect{"example-3.4", 1, 1, 1}, Expect{"example-3.5", 4, -1, -1},
                        Expect{"example-3.6", 3, -1, -1}}) {
    CAPTURE(e.preset);
    const ExperimentConfig cfg = preset(e.preset);
    const QuadForm Q(cfg.tower, cfg.form);
    const QuadFormAnalysis an = analyze(Q);
    CHECK(an.rank == e.rank);
    CHECK(an.eps_Q == e.eps_Q);
    CHECK(an.eps == e.eps);
    CHECK(radical(Q).size() == cfg.tower.params.m1 - an.rank);
  }
}

TEST_CASE("derived sign") {
  CHECK(derived_sign(3, 1, 4, -1) == -1);  // (p-1)m r/4 = 2
  CHECK(derived_sign(3, 1, 2, 1) == -1);   // exponent 1
  CHECK(derived_sign(3, 1, 3, 1) == 1);    // odd r uses r+1: exponent 2
  CHECK(derived_sign(5, 1, 2, -1) == -1);  // exponent 2
  CHECK(derived_sign(3, 2, 2, 1) == 1);    // exponent 2
}

TEST_CASE("table and direct evaluation agree, and Q is quadratic") {
  const ExperimentConfig cfg = preset("example-3.5");
  const QuadForm Q(cfg.tower, cfg.form);
  const Field& f1 = *cfg.tower.f1;
  const Field& fq = *cfg.tower.fq;
  for (Index x = 0; x < f1.size(); ++x) REQUIRE(Q.eval(x) == Q.eval_direct(x));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Index x = Index(rng() % f1.size()), y = Index(rng() % f1.size()), a = Index(rng() % fq.size());
    CHECK(Q.eval(f1.mul(a, x)) == fq.mul(fq.mul(a, a), Q.eval(x)));
    // polarization: Q(x+y) - Q(x) - Q(y) = 2 B(x, y)
    CHECK(fq.sub(fq.sub(Q.eval(f1.add(x, y)), Q.eval(x)), Q.eval(y)) == fq.mul(2, Q.bilinear(x, y)));
  }
}

TEST_CASE("rank and discriminant character are basis independent") {
  std::mt19937_64 rng(11);
  for (const char* name : {"example-3.1", "example-3.2", "example-3.4", "example-3.5"}) {
    CAPTURE(name);
    const ExperimentConfig cfg = preset(name);
    const QuadForm Q(cfg.tower, cfg.form);
    const Field& fq = *cfg.tower.fq;
    const QuadFormAnalysis base = analyze(Q);
    const std::size_t n = base.gram.size();
    for (int trial = 0; trial < 20; ++trial) {
      Matrix P;
      do {
        P.assign(n, std::vector<Index>(n));
        for (auto& row : P)
          for (auto& v : row) v = Index(rng() % fq.size());
      } while (rank(fq, P) != n);
      const Matrix G2 = multiply(fq, multiply(fq, P, base.gram), transpose(P));
      const QuadFormAnalysis an = analyze_gram(fq, G2);
      CHECK(an.rank == base.rank);
      CHECK(an.eps_Q == base.eps_Q);
    }
  }
}

TEST_CASE("zero and malformed forms") {
  const FieldTower t = build_tower(3, 1, 2, 1);
  CHECK_THROWS_AS(QuadForm(t, QuadFormSpec{{FrobTerm{0, 0}}, {}, {}}), UnsupportedInput);
  CHECK_THROWS_AS(QuadForm(t, QuadFormSpec{{FrobTerm{1, 5}}, {}, {}}), ParameterError);
  CHECK_THROWS_AS(QuadForm(t, QuadFormSpec{{}, {}, Matrix{{1, 2}, {0, 1}}}), ParameterError);
  const QuadFormAnalysis zero = diagonalize(*t.fq, Matrix{{0, 0}, {0, 0}});
  CHECK(zero.rank == 0);
  CHECK_THROWS_AS(analyze_gram(*t.fq, Matrix{{0, 0}, {0, 0}}), UnsupportedInput);
}

TEST_CASE("off-diagonal Gram matrices diagonalize") {
  const FieldPtr f_ptr = build_tower(5, 1, 1, 1).fq;
  const Field& f = *f_ptr;
  const QuadFormAnalysis an = analyze_gram(f, Matrix{{0, 1}, {1, 0}});  // hyperbolic plane
  CHECK(an.rank == 2);
  CHECK(an.eps_Q == f.quad_char(f.neg(1)));  // determinant class of a hyperbolic plane
}
