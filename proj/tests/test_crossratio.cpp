#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgeom/crossratio.hpp"

#include <random>

using namespace tropgeom;

namespace {

const TropScalar kZero = TropScalar::zero();

TropVector v2(int a, int b) { return TropVector{TropScalar(a), TropScalar(b)}; }

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  Rat rat() {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 6);
    return Rat(num(rng), den(rng));
  }
  TropVector vec() { return TropVector{TropScalar(rat()), TropScalar(rat())}; }
  TropScalar scalar() { return TropScalar(rat()); }
};

}  // namespace

TEST_CASE("brackets are 2x2 tropical determinants") {
  Semiring sr;
  CHECK(bracket2(sr, v2(0, 0), v2(0, 0)).value == TropScalar(0));
  CHECK(bracket2(sr, v2(0, 0), v2(1, 0)).value == TropScalar(1));
  TropVector e1{TropScalar(0), kZero}, e2{kZero, TropScalar(0)};
  CHECK(bracket2(sr, e1, e2).value == TropScalar(0));
  CHECK_THROWS_AS(
      (void)bracket2(sr, TropVector{TropScalar(0)}, v2(0, 0)), TropError);
}

TEST_CASE("cross-ratio of the unit square quadruple") {
  Semiring sr;
  CrossRatioResult r = cross_ratio(sr, v2(0, 0), v2(0, 1), v2(1, 0), v2(1, 1));
  CHECK(r.numer == TropScalar(3));
  CHECK(r.denom == TropScalar(3));
  CHECK(r.value == TropScalar(0));
}

TEST_CASE("self cross-ratio evaluates exactly") {
  Semiring sr;
  TropVector a = v2(1, 2), b = v2(3, 5);
  // [a,a] = a1+a2, [b,b] = b1+b2, [a,b] = [b,a] = max of the cross sums.
  CrossRatioResult r = cross_ratio(sr, a, b, a, b);
  CHECK(r.numer == TropScalar(11));
  CHECK(r.denom == TropScalar(12));
  CHECK(r.value == TropScalar(-1));
}

TEST_CASE("denominator brackets must be units") {
  Semiring sr;
  TropVector a{TropScalar(0), kZero}, d{TropScalar(0), kZero};
  CHECK_THROWS_AS((void)cross_ratio(sr, a, v2(0, 0), v2(0, 0), d), TropError);
}

TEST_CASE("scalar invariance holds exactly") {
  Semiring sr;
  Gen gen(13);
  SUBCASE("random quadruples and scalings") {
    for (int trial = 0; trial < 3000; ++trial) {
      auto ev = check_scalar_invariance(sr, gen.vec(), gen.vec(), gen.vec(),
                                        gen.vec(), gen.scalar(), gen.scalar(),
                                        gen.scalar(), gen.scalar());
      REQUIRE(ev.invariant);
      REQUIRE(ev.original == ev.scaled);
    }
  }
  SUBCASE("named scalings") {
    TropVector a = v2(0, 0), b = v2(0, 1), c = v2(1, 0), d = v2(1, 1);
    CHECK(check_scalar_invariance(sr, a, b, c, d, TropScalar(1), TropScalar(2),
                                  TropScalar(3), TropScalar(4))
              .invariant);
    CHECK(check_scalar_invariance(sr, a, b, c, d, TropScalar(0), TropScalar(0),
                                  TropScalar(0), TropScalar(0))
              .invariant);
    TropScalar t(7);
    CHECK(check_scalar_invariance(sr, a, b, c, d, t, t, t, t).invariant);
  }
}

TEST_CASE("matrix transform") {
  Semiring sr;
  SUBCASE("identity") {
    TropMatrix id(2, 2);
    id.at(0, 0) = TropScalar::one();
    id.at(1, 1) = TropScalar::one();
    TropVector x = v2(3, -2);
    CHECK(matrix_transform(sr, id, x) == x);
  }
  SUBCASE("componentwise max-plus product") {
    TropMatrix m(2, 2);
    m.at(0, 0) = TropScalar(0);
    m.at(0, 1) = TropScalar(0);
    m.at(1, 1) = TropScalar(0);
    CHECK(matrix_transform(sr, m, v2(0, 0)) == v2(0, 0));
  }
  SUBCASE("singular matrices are rejected") {
    TropMatrix flat(2, 2);
    for (auto& e : flat.data) e = TropScalar(0);
    CHECK_THROWS_AS((void)matrix_transform(sr, flat, v2(0, 0)), TropError);
  }
}

TEST_CASE("bracket expansion identity") {
  Semiring sr;
  Gen gen(77);
  std::mt19937_64 zero_picker(5);
  for (int trial = 0; trial < 3000; ++trial) {
    TropMatrix m(2, 2);
    for (auto& e : m.data)
      e = zero_picker() % 6 == 0 ? kZero : TropScalar(gen.rat());
    TropVector a = gen.vec(), b = gen.vec();
    TropScalar lhs = bracket2(sr, mat_vec(sr, m, a), mat_vec(sr, m, b)).value;
    TropScalar rhs = sr.mul(tdet(sr, m), bracket2(sr, a, b).value);
    rhs = sr.add(rhs,
                 sr.mul(sr.mul(m.at(0, 0), m.at(1, 0)), sr.mul(a[0], b[0])));
    rhs = sr.add(rhs,
                 sr.mul(sr.mul(m.at(0, 1), m.at(1, 1)), sr.mul(a[1], b[1])));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("diagonal matrices never change the cross-ratio") {
  Semiring sr;
  Gen gen(31);
  for (int trial = 0; trial < 1000; ++trial) {
    TropScalar t = gen.scalar();
    TropMatrix diag(2, 2);
    diag.at(0, 0) = t;
    diag.at(1, 1) = t;
    TropVector a = gen.vec(), b = gen.vec(), c = gen.vec(), d = gen.vec();
    TropScalar before = cross_ratio(sr, a, b, c, d).value;
    TropScalar after =
        cross_ratio(sr, mat_vec(sr, diag, a), mat_vec(sr, diag, b),
                    mat_vec(sr, diag, c), mat_vec(sr, diag, d))
            .value;
    REQUIRE(before == after);
  }
}

TEST_CASE("non-invariance witness search") {
  Semiring sr;
  SUBCASE("the seeded search finds a verified witness") {
    NoninvarianceWitness w = find_noninvariance_witness(sr, 1, 100000);
    CHECK(w.value_before != w.value_after);
    // Re-verify the witness from scratch.
    CHECK(cross_ratio(sr, w.a, w.b, w.c, w.d).value == w.value_before);
    TropVector ta = mat_vec(sr, w.m, w.a), tb = mat_vec(sr, w.m, w.b),
               tc = mat_vec(sr, w.m, w.c), td = mat_vec(sr, w.m, w.d);
    CHECK(cross_ratio(sr, ta, tb, tc, td).value == w.value_after);
    CHECK_FALSE(is_tropically_singular(sr, w.m));
    CHECK(w.cases_tried >= 1);
  }
  SUBCASE("distinct seeds still verify") {
    NoninvarianceWitness w = find_noninvariance_witness(sr, 99, 100000);
    CHECK(w.value_before != w.value_after);
  }
  SUBCASE("an exhausted budget is an explicit failure") {
    CHECK_THROWS_AS((void)find_noninvariance_witness(sr, 1, 1), TropError);
  }
}
