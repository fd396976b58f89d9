#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgeom/json_io.hpp"

#include <random>

using namespace tropgeom;

namespace {

const TropScalar kZero = TropScalar::zero();

PlanePoint pt(const Rat& x, const Rat& y) { return PlanePoint{x, y}; }

TropLine with_vertex(const Semiring& sr, const Rat& x, const Rat& y) {
  return TropLine(sr, Rat(0), x - y, x);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("5") == Rat(5));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("2.75") == Rat(11, 4));
  CHECK(parse_rational("-0.5") == Rat(-1, 2));
  CHECK(format_rational(Rat(11, 4)) == "11/4");
  CHECK(format_rational(Rat(-8, 2)) == "-4");
  CHECK_THROWS_AS((void)parse_rational("1/0"), TropError);
  CHECK_THROWS_AS((void)parse_rational("abc"), TropError);
  CHECK_THROWS_AS((void)parse_rational(""), TropError);
}

TEST_CASE("fixed decimals round half to even") {
  CHECK(format_decimal_fixed(Rat(1, 3), 6) == "0.333333");
  CHECK(format_decimal_fixed(Rat(1), 6) == "1.000000");
  CHECK(format_decimal_fixed(Rat(1, 2000000), 6) == "0.000000");
  CHECK(format_decimal_fixed(Rat(3, 2000000), 6) == "0.000002");
  CHECK(format_decimal_fixed(Rat(-5, 2000000), 6) == "-0.000002");
  CHECK(format_decimal_fixed(Rat(-7, 2), 0) == "-4");
}

TEST_CASE("scalar JSON encoding is bit-exact and flavor aware") {
  Semiring max(Flavor::MaxPlus), min(Flavor::MinPlus);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-4000, 4000), den(1, 97);
  for (int i = 0; i < 2000; ++i) {
    TropScalar s = rng() % 9 == 0
                       ? kZero
                       : TropScalar(Rat(num(rng), den(rng)));
    REQUIRE(scalar_from_json(max, scalar_to_json(max, s)) == s);
    REQUIRE(scalar_from_json(min, scalar_to_json(min, s)) == s);
  }
  CHECK(scalar_to_json(max, kZero) == "-inf");
  CHECK(scalar_to_json(min, kZero) == "inf");
  CHECK(scalar_from_json(max, Json(7)) == TropScalar(7));
  CHECK_THROWS_AS((void)scalar_from_json(max, Json("inf")), TropError);
  CHECK_THROWS_AS((void)scalar_from_json(min, Json("-inf")), TropError);
  CHECK_THROWS_AS((void)scalar_from_json(max, Json(1.5)), TropError);
}

TEST_CASE("vector and matrix round-trips") {
  Semiring sr;
  TropVector v{TropScalar(Rat(1, 3)), kZero, TropScalar(-7)};
  CHECK(vector_from_json(sr, vector_to_json(sr, v)) == v);

  TropMatrix m(2, 3);
  m.at(0, 0) = TropScalar(5);
  m.at(1, 2) = TropScalar(Rat(-2, 9));
  CHECK(matrix_from_json(sr, matrix_to_json(sr, m)) == m);
  CHECK_THROWS_AS((void)matrix_from_json(sr, Json::parse("[[\"1\"],[\"1\",\"2\"]]")),
                  TropError);
}

TEST_CASE("geometry object round-trips") {
  Semiring sr;
  PlanePoint p = pt(Rat(3, 2), Rat(-7, 5));
  CHECK(point_from_json(point_to_json(p)) == p);

  TropLine line = with_vertex(sr, 2, -1);
  CHECK(line_from_json(sr, line_to_json(sr, line)) == line);
  CHECK(line_to_json(sr, line)["vertex"][0] == "2");

  Pencil pencil =
      make_pencil(sr, with_vertex(sr, 0, 0), {pt(1, 1), pt(-2, 0), pt(0, -3)});
  Pencil back = pencil_from_json(sr, pencil_to_json(sr, pencil));
  CHECK(back.line == pencil.line);
  CHECK(back.points == pencil.points);
  CHECK(back.p == pencil.p);
  CHECK(back.q == pencil.q);
  CHECK(back.r == pencil.r);
}

TEST_CASE("projectivity serialization is replayable") {
  Semiring sr;
  Pencil p1 =
      make_pencil(sr, with_vertex(sr, 0, 0), {pt(-2, 0), pt(0, -2), pt(2, 2)});
  Pencil p2 = make_pencil(sr, with_vertex(sr, 12, 4),
                          {pt(9, 4), pt(12, 2), pt(15, 7)});
  ProjectivityConstruction built = construct_projectivity(
      sr, reduce_pencil(sr, p1), reduce_pencil(sr, p2));
  Json encoded = projectivity_to_json(sr, built.projectivity);
  Projectivity replayed = projectivity_from_json(sr, encoded);
  REQUIRE(replayed.stages.size() == built.projectivity.stages.size());
  for (std::size_t i = 0; i < replayed.stages.size(); ++i) {
    CHECK(replayed.stages[i].center == built.projectivity.stages[i].center);
    CHECK(replayed.stages[i].source.line ==
          built.projectivity.stages[i].source.line);
    CHECK(replayed.stages[i].target.line ==
          built.projectivity.stages[i].target.line);
  }
  // The replayed construction still carries the marks exactly.
  CHECK(marked_image(sr, replayed, pt(-2, 0)) == pt(9, 4));
  CHECK(marked_image(sr, replayed, pt(0, -2)) == pt(12, 2));
  CHECK(marked_image(sr, replayed, pt(2, 2)) == pt(15, 7));
}

TEST_CASE("scene parsing and determinism") {
  const char* text = R"({
    "schema": 1,
    "convention": "max",
    "view": {"xmin": "-4", "xmax": "4", "ymin": "-4", "ymax": "4",
             "ray_extension": "1"},
    "objects": [
      {"type": "line", "a": "0", "b": "0", "c": "0", "label": "L"},
      {"type": "line", "a": "0", "b": "1", "c": "2", "aux": true},
      {"type": "point", "x": "1", "y": "1", "label": "p"},
      {"type": "point", "x": "-2", "y": "0", "aux": true}
    ]
  })";
  Scene scene = scene_from_json(Json::parse(text));
  REQUIRE(scene.objects.size() == 4);
  std::string svg1 = render_svg(scene);
  std::string svg2 = render_svg(scene);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") == 0);
  CHECK(svg1.find("stroke-dasharray") != std::string::npos);

  Scene round = scene_from_json(scene_to_json(scene));
  CHECK(render_svg(round) == svg1);
}

TEST_CASE("scene schema validation") {
  CHECK_THROWS_AS((void)scene_from_json(Json::parse("{\"schema\": 2}")),
                  TropError);
  CHECK_THROWS_AS(
      (void)scene_from_json(Json::parse(
          "{\"view\": {\"xmin\": \"0\", \"xmax\": \"1\", \"ymin\": \"0\", "
          "\"ymax\": \"1\"}, \"objects\": [{\"type\": \"blob\"}]}")),
      TropError);
}

TEST_CASE("empty view is rejected, empty scene renders axes") {
  Scene scene;
  scene.view = {Rat(-2), Rat(2), Rat(-2), Rat(2), Rat(1)};
  std::string svg = render_svg(scene);
  CHECK(svg.find("#dddddd") != std::string::npos);

  Scene degenerate;
  degenerate.view = {Rat(2), Rat(2), Rat(-2), Rat(2), Rat(1)};
  CHECK_THROWS_AS((void)render_svg(degenerate), TropError);
}
