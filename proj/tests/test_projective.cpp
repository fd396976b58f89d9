#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgeom/projective.hpp"

#include <random>

using namespace tropgeom;

namespace {

const TropScalar kZero = TropScalar::zero();

TropVector vec(std::initializer_list<int> coords) {
  TropVector v;
  for (int c : coords) v.push_back(TropScalar(c));
  return v;
}

}  // namespace

TEST_CASE("canonical representatives") {
  Semiring sr;
  CHECK(canonicalize(sr, vec({3, 1, 2})).rep() == vec({0, -2, -1}));
  CHECK(canonicalize(sr, vec({0, 0, 0})).rep() == vec({0, 0, 0}));

  TropVector e2{kZero, TropScalar(0), kZero};
  CHECK(canonicalize(sr, e2).rep() == e2);

  CHECK_THROWS_AS((void)canonicalize(sr, TropVector(3, kZero)), TropError);
}

TEST_CASE("projective equality") {
  Semiring sr;
  CHECK(proj_eq(canonicalize(sr, vec({0, 1})), canonicalize(sr, vec({5, 6}))));
  CHECK_FALSE(
      proj_eq(canonicalize(sr, vec({0, 1})), canonicalize(sr, vec({1, 0}))));
  TropVector mixed{TropScalar(0), kZero};
  CHECK_FALSE(
      proj_eq(canonicalize(sr, mixed), canonicalize(sr, vec({0, 0}))));
  CHECK_THROWS_AS((void)proj_eq(canonicalize(sr, vec({0, 1})),
                                canonicalize(sr, vec({0, 1, 2}))),
                  TropError);
}

TEST_CASE("canonicalization is scale invariant and idempotent") {
  Semiring sr;
  std::mt19937_64 rng(9001);
  std::uniform_int_distribution<int> coord(-30, 30);
  for (int trial = 0; trial < 10000; ++trial) {
    TropVector v;
    bool any_finite = false;
    for (int j = 0; j < 4; ++j) {
      if (rng() % 5 == 0) {
        v.push_back(kZero);
      } else {
        v.push_back(TropScalar(Rat(coord(rng), 1 + static_cast<int>(rng() % 4))));
        any_finite = true;
      }
    }
    if (!any_finite) continue;
    ProjPoint p = canonicalize(sr, v);
    TropScalar lambda(coord(rng));
    REQUIRE(canonicalize(sr, vec_scale(sr, lambda, v)) == p);
    REQUIRE(canonicalize(sr, p.rep()) == p);
    // The support pattern is a projective invariant.
    for (std::size_t j = 0; j < v.size(); ++j)
      REQUIRE(v[j].finite() == p.rep()[j].finite());
  }
}

TEST_CASE("MinPlus canonical form pins the smallest coordinate") {
  Semiring min(Flavor::MinPlus);
  CHECK(canonicalize(min, vec({3, 1, 2})).rep() == vec({2, 0, 1}));
  TropVector dual_unit{kZero, TropScalar(0), kZero};
  CHECK(canonicalize(min, dual_unit).rep() == dual_unit);
}
