#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgeom/plane.hpp"

#include <random>
#include <vector>

using namespace tropgeom;

namespace {

PlanePoint pt(const Rat& x, const Rat& y) { return PlanePoint{x, y}; }

TropLine line(const Semiring& sr, int a, int b, int c) {
  return line_from_coeffs(sr, TropScalar(a), TropScalar(b), TropScalar(c));
}

// Every line through two non-coaxial quarter-grid points has its vertex in
// their bounding box, so scanning a quarter-spaced vertex grid around the
// box enumerates all candidate lines.
std::vector<TropLine> grid_lines_through(const Semiring& sr,
                                         const PlanePoint& p,
                                         const PlanePoint& q) {
  Rat xlo = std::min(p.x, q.x) - 1, xhi = std::max(p.x, q.x) + 1;
  Rat ylo = std::min(p.y, q.y) - 1, yhi = std::max(p.y, q.y) + 1;
  const Rat step(1, 4);
  std::vector<TropLine> found;
  for (Rat vx = xlo; vx <= xhi; vx += step) {
    for (Rat vy = ylo; vy <= yhi; vy += step) {
      // line with vertex (vx, vy): coefficients (0, vx - vy, vx)
      TropLine cand(sr, Rat(0), vx - vy, vx);
      if (incidence(sr, p, cand).incident && incidence(sr, q, cand).incident)
        found.push_back(cand);
    }
  }
  return found;
}

}  // namespace

TEST_CASE("line construction and vertex") {
  Semiring sr;
  CHECK(line(sr, 0, 0, 0).vertex() == pt(0, 0));
  CHECK(line(sr, 0, 1, 2).vertex() == pt(2, 1));
  CHECK(line(sr, 1, 1, 1).vertex() == pt(0, 0));
  CHECK(line(sr, 1, 1, 1) == line(sr, 0, 0, 0));
  CHECK_THROWS_AS((void)line_from_coeffs(sr, TropScalar::zero(), TropScalar(0),
                                         TropScalar(0)),
                  TropError);
}

TEST_CASE("incidence classifies rays") {
  Semiring sr;
  TropLine l = line(sr, 0, 0, 0);
  auto at_vertex = incidence(sr, pt(0, 0), l);
  CHECK(at_vertex.incident);
  CHECK(at_vertex.label == RayLabel::Vertex);

  auto left = incidence(sr, pt(-2, 0), l);
  CHECK(left.incident);
  CHECK(left.label == RayLabel::Left);

  auto down = incidence(sr, pt(0, -3), l);
  CHECK(down.incident);
  CHECK(down.label == RayLabel::Down);

  auto diag = incidence(sr, pt(2, 2), l);
  CHECK(diag.incident);
  CHECK(diag.label == RayLabel::Diag);

  CHECK_FALSE(incidence(sr, pt(1, 2), l).incident);
}

TEST_CASE("ray directions dualize with the convention") {
  Semiring max(Flavor::MaxPlus), min(Flavor::MinPlus);
  CHECK(ray_direction(max, RayLabel::Left) == std::pair<int, int>{-1, 0});
  CHECK(ray_direction(max, RayLabel::Down) == std::pair<int, int>{0, -1});
  CHECK(ray_direction(max, RayLabel::Diag) == std::pair<int, int>{1, 1});
  CHECK(ray_direction(min, RayLabel::Left) == std::pair<int, int>{1, 0});
  CHECK(ray_direction(min, RayLabel::Diag) == std::pair<int, int>{-1, -1});
}

TEST_CASE("stable line through two points") {
  Semiring sr;
  SUBCASE("generic pair") {
    TropLine l = stable_line(sr, pt(0, 0), pt(2, 1));
    CHECK(l == line(sr, 1, 2, 2));
    CHECK(l.vertex() == pt(1, 0));
    CHECK(incidence(sr, pt(0, 0), l).incident);
    CHECK(incidence(sr, pt(2, 1), l).incident);
  }
  SUBCASE("coaxial pairs put the vertex on a marked point") {
    CHECK(stable_line(sr, pt(0, 0), pt(1, 1)).vertex() == pt(0, 0));
    CHECK(stable_line(sr, pt(0, 0), pt(-2, 0)).vertex() == pt(0, 0));
    CHECK(stable_line(sr, pt(0, 0), pt(2, 0)).vertex() == pt(2, 0));
    CHECK(stable_line(sr, pt(0, 0), pt(0, 4)).vertex() == pt(0, 4));
    CHECK(stable_line(sr, pt(0, 0), pt(0, -4)).vertex() == pt(0, 0));
  }
  SUBCASE("identical points are rejected") {
    CHECK_THROWS_AS((void)stable_line(sr, pt(1, 2), pt(1, 2)), TropError);
  }
}

TEST_CASE("stable intersection of two lines") {
  Semiring sr;
  SUBCASE("general position") {
    PlanePoint x = stable_intersect(sr, line(sr, 0, 0, 0), line(sr, 0, 1, 2));
    CHECK(x == pt(1, 1));
  }
  SUBCASE("coaxial overlap still lands on both lines") {
    TropLine l1 = line(sr, 0, 0, 0);             // vertex (0,0)
    TropLine l2 = line(sr, 0, 5, 5);             // vertex (5,0)
    PlanePoint x = stable_intersect(sr, l1, l2);
    CHECK(incidence(sr, x, l1).incident);
    CHECK(incidence(sr, x, l2).incident);
  }
  SUBCASE("identical lines are rejected") {
    CHECK_THROWS_AS(
        (void)stable_intersect(sr, line(sr, 0, 0, 0), line(sr, 1, 1, 1)),
        TropError);
  }
}

TEST_CASE("coaxiality of points and lines") {
  Semiring sr;
  CHECK(is_coaxial_points(pt(0, 0), pt(1, 1)));
  CHECK_FALSE(is_coaxial_points(pt(0, 0), pt(2, 1)));
  CHECK(is_coaxial_points(pt(0, 0), pt(3, 0)));
  CHECK_THROWS_AS((void)is_coaxial_points(pt(1, 1), pt(1, 1)), TropError);

  auto with_vertex = [&](const Rat& x, const Rat& y) {
    return TropLine(sr, Rat(0), x - y, x);
  };
  CHECK(is_coaxial_lines(with_vertex(0, 0), with_vertex(1, 1)));
  CHECK_FALSE(is_coaxial_lines(with_vertex(0, 0), with_vertex(2, 1)));
  CHECK(is_coaxial_lines(with_vertex(0, 0), with_vertex(0, -4)));
  CHECK(is_coaxial_lines(with_vertex(0, 0), with_vertex(0, 0)));
}

TEST_CASE("coaxial points admit at least three containing lines") {
  Semiring sr;
  auto check_three = [&](const PlanePoint& p, const PlanePoint& q) {
    auto lines = grid_lines_through(sr, p, q);
    REQUIRE(lines.size() >= 3);
  };
  check_three(pt(0, 0), pt(3, 0));
  check_three(pt(0, 0), pt(0, -2));
  check_three(pt(Rat(1, 2), Rat(1, 2)), pt(2, 2));
}

TEST_CASE("general position") {
  Semiring sr;
  CHECK(general_position(sr, line(sr, 0, 0, 0), line(sr, 0, 1, 2)));
  auto with_vertex = [&](const Rat& x, const Rat& y) {
    return TropLine(sr, Rat(0), x - y, x);
  };
  CHECK_FALSE(general_position(sr, with_vertex(0, 0), with_vertex(3, 0)));
  CHECK(general_position(sr, with_vertex(0, 0), with_vertex(1, -1)));
  CHECK_THROWS_AS(
      (void)general_position(sr, line(sr, 0, 0, 0), line(sr, 2, 2, 2)),
      TropError);
}

TEST_CASE("stable marked lines") {
  Semiring sr;
  SUBCASE("unique line through a non-coaxial pair") {
    TropLine l = stable_line(sr, pt(0, 0), pt(2, 1));
    CHECK(is_stable_marked_line(sr, l, {pt(0, 0), pt(2, 1)}));
  }
  SUBCASE("vertex among the marks") {
    auto l = TropLine(sr, Rat(0), Rat(0), Rat(0));  // vertex (0,0)
    CHECK(is_stable_marked_line(sr, l, {pt(0, 0), pt(2, 2)}));
  }
  SUBCASE("coaxial marks with the vertex elsewhere") {
    auto l = TropLine(sr, Rat(0), Rat(0), Rat(-1));  // vertex (-1,-1)
    CHECK_FALSE(is_stable_marked_line(sr, l, {pt(0, 0), pt(2, 2)}));
  }
  SUBCASE("marks must be incident") {
    auto l = TropLine(sr, Rat(0), Rat(0), Rat(0));
    CHECK_THROWS_AS((void)is_stable_marked_line(sr, l, {pt(0, 0), pt(5, 1)}),
                    TropError);
  }
}

TEST_CASE("random stable lines contain their points") {
  Semiring sr;
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    PlanePoint p = pt(Rat(num(rng), 4), Rat(num(rng), 4));
    PlanePoint q = pt(Rat(num(rng), 4), Rat(num(rng), 4));
    if (p == q) continue;
    TropLine l = stable_line(sr, p, q);
    REQUIRE(incidence(sr, p, l).incident);
    REQUIRE(incidence(sr, q, l).incident);
  }
}

TEST_CASE("random stable intersections lie on both lines") {
  Semiring sr;
  std::mt19937_64 rng(809);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    TropLine l1(sr, Rat(num(rng), 4), Rat(num(rng), 4), Rat(num(rng), 4));
    TropLine l2(sr, Rat(num(rng), 4), Rat(num(rng), 4), Rat(num(rng), 4));
    if (l1 == l2) continue;
    PlanePoint x = stable_intersect(sr, l1, l2);
    REQUIRE(incidence(sr, x, l1).incident);
    REQUIRE(incidence(sr, x, l2).incident);
  }
}

TEST_CASE("non-coaxial pairs have exactly one line, the stable one") {
  Semiring sr;
  std::mt19937_64 rng(810);
  std::uniform_int_distribution<int> num(-12, 12);
  int done = 0;
  while (done < 60) {
    PlanePoint p = pt(Rat(num(rng), 4), Rat(num(rng), 4));
    PlanePoint q = pt(Rat(num(rng), 4), Rat(num(rng), 4));
    if (p == q || is_coaxial_points(p, q)) continue;
    ++done;
    auto lines = grid_lines_through(sr, p, q);
    REQUIRE(lines.size() == 1);
    REQUIRE(lines.front() == stable_line(sr, p, q));
  }
}

TEST_CASE("general position coincides with non-coaxial vertices") {
  Semiring sr;
  std::mt19937_64 rng(812);
  std::uniform_int_distribution<int> num(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    TropLine l1(sr, Rat(num(rng)), Rat(num(rng)), Rat(num(rng)));
    TropLine l2(sr, Rat(num(rng)), Rat(num(rng)), Rat(num(rng)));
    if (l1 == l2) continue;
    REQUIRE(general_position(sr, l1, l2) == !is_coaxial_lines(l1, l2));
    if (general_position(sr, l1, l2)) {
      // The unique common point is the stable intersection.
      PlanePoint x = stable_intersect(sr, l1, l2);
      REQUIRE(incidence(sr, x, l1).incident);
      REQUIRE(incidence(sr, x, l2).incident);
    }
  }
}

TEST_CASE("the intersection and join kernels are dual") {
  Semiring sr;
  std::mt19937_64 rng(811);
  std::uniform_int_distribution<int> num(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    TropLine l1(sr, Rat(num(rng)), Rat(num(rng)), Rat(num(rng)));
    TropLine l2(sr, Rat(num(rng)), Rat(num(rng)), Rat(num(rng)));
    if (l1 == l2) continue;
    // Dual points carry the line coefficients; their stable join read as
    // coefficients is the stable intersection in homogeneous form.
    PlanePoint d1 = pt(l1.a() - l1.c(), l1.b() - l1.c());
    PlanePoint d2 = pt(l2.a() - l2.c(), l2.b() - l2.c());
    if (d1 == d2) continue;
    TropLine joined = stable_line(sr, d1, d2);
    PlanePoint x = stable_intersect(sr, l1, l2);
    TropLine as_line(sr, x.x, x.y, Rat(0));
    REQUIRE(joined == as_line);
  }
}

TEST_CASE("incidence under the MinPlus dual") {
  Semiring min(Flavor::MinPlus);
  TropLine l = line_from_coeffs(min, TropScalar(0), TropScalar(0),
                                TropScalar(0));
  CHECK(l.vertex() == pt(0, 0));
  CHECK(incidence(min, pt(0, 0), l).label == RayLabel::Vertex);
  auto left = incidence(min, pt(2, 0), l);  // mirrored ray
  CHECK(left.incident);
  CHECK(left.label == RayLabel::Left);
  CHECK_FALSE(incidence(min, pt(-1, -2), l).incident);
}
