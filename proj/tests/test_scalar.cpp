#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgeom/scalar.hpp"

#include <random>

using namespace tropgeom;

namespace {

struct ScalarGen {
  std::mt19937_64 rng;
  explicit ScalarGen(std::uint64_t seed) : rng(seed) {}

  Rat rat() {
    std::uniform_int_distribution<int> num(-50, 50), den(1, 8);
    return Rat(num(rng), den(rng));
  }

  TropScalar scalar() {
    if (rng() % 8 == 0) return TropScalar::zero();
    return TropScalar(rat());
  }

  TropScalar finite() { return TropScalar(rat()); }
};

}  // namespace

TEST_CASE("addition is the flavor optimum") {
  Semiring sr;
  CHECK(sr.add(TropScalar(3), TropScalar(5)) == TropScalar(5));
  CHECK(sr.add(TropScalar::zero(), TropScalar(7)) == TropScalar(7));
  CHECK(sr.add(TropScalar(2), TropScalar(2)) == TropScalar(2));

  Semiring min(Flavor::MinPlus);
  CHECK(min.add(TropScalar(3), TropScalar(5)) == TropScalar(3));
  CHECK(min.add(TropScalar::zero(), TropScalar(7)) == TropScalar(7));
}

TEST_CASE("multiplication is classical addition") {
  Semiring sr;
  CHECK(sr.mul(TropScalar(2), TropScalar(3)) == TropScalar(5));
  CHECK(sr.mul(TropScalar::one(), TropScalar(Rat(9, 4))) ==
        TropScalar(Rat(9, 4)));
  CHECK(sr.mul(TropScalar::zero(), TropScalar(7)) == TropScalar::zero());
}

TEST_CASE("division inverts multiplication on units") {
  Semiring sr;
  CHECK(sr.div(TropScalar(5), TropScalar(2)) == TropScalar(3));
  CHECK(sr.div(TropScalar(Rat(7, 3)), TropScalar(Rat(7, 3))) ==
        TropScalar::one());
  CHECK(sr.div(TropScalar::zero(), TropScalar(4)) == TropScalar::zero());
  CHECK_THROWS_AS((void)sr.div(TropScalar(1), TropScalar::zero()), TropError);
}

TEST_CASE("semi-linear condition certificates") {
  Semiring sr;
  SUBCASE("finite summand is the unit") {
    auto w = sr.check_semilinear_condition(TropScalar(0), TropScalar(-3));
    CHECK(w.u_is_unit);
    CHECK(*w.u_inverse == 0);
  }
  SUBCASE("identity on the other side") {
    auto w = sr.check_semilinear_condition(TropScalar::zero(), TropScalar(0));
    CHECK_FALSE(w.u_is_unit);
    CHECK(w.v_is_unit);
    CHECK(*w.v_inverse == 0);
  }
  SUBCASE("both summands can be units") {
    auto w = sr.check_semilinear_condition(TropScalar(0), TropScalar(0));
    CHECK(w.u_is_unit);
    CHECK(w.v_is_unit);
  }
  SUBCASE("precondition is checked") {
    CHECK_THROWS_AS(
        (void)sr.check_semilinear_condition(TropScalar(1), TropScalar(0)),
        TropError);
  }
}

TEST_CASE("semiring axioms hold on random triples") {
  Semiring sr;
  ScalarGen gen(20240501);
  const TropScalar zero = TropScalar::zero();
  const TropScalar one = TropScalar::one();
  for (int i = 0; i < 100000; ++i) {
    TropScalar x = gen.scalar(), y = gen.scalar(), z = gen.scalar();
    REQUIRE(sr.add(sr.add(x, y), z) == sr.add(x, sr.add(y, z)));
    REQUIRE(sr.add(x, y) == sr.add(y, x));
    REQUIRE(sr.mul(sr.mul(x, y), z) == sr.mul(x, sr.mul(y, z)));
    REQUIRE(sr.mul(x, sr.add(y, z)) == sr.add(sr.mul(x, y), sr.mul(x, z)));
    REQUIRE(sr.add(x, zero) == x);
    REQUIRE(sr.mul(x, one) == x);
    REQUIRE(sr.mul(x, zero) == zero);
    REQUIRE(sr.add(x, x) == x);
  }
}

TEST_CASE("cancellation by finite elements") {
  Semiring sr;
  ScalarGen gen(7);
  for (int i = 0; i < 10000; ++i) {
    TropScalar a = gen.finite(), b = gen.scalar(), c = gen.scalar();
    if (sr.mul(a, b) == sr.mul(a, c)) REQUIRE(b == c);
  }
}

TEST_CASE("MinPlus is the MaxPlus dual under negation") {
  Semiring max(Flavor::MaxPlus), min(Flavor::MinPlus);
  ScalarGen gen(99);
  auto negated = [](const TropScalar& s) {
    return s.is_zero() ? s : TropScalar(-s.value());
  };
  for (int i = 0; i < 10000; ++i) {
    TropScalar x = gen.scalar(), y = gen.scalar();
    REQUIRE(negated(min.add(negated(x), negated(y))) == max.add(x, y));
    REQUIRE(negated(min.mul(negated(x), negated(y))) == max.mul(x, y));
  }
}
