#include "tropgeom/json_io.hpp"

namespace tropgeom {

namespace {

[[noreturn]] void bad(const std::string& what) {
  fail(Errc::ParseError, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const char* zero_literal(const Semiring& sr) {
  return sr.flavor() == Flavor::MaxPlus ? "-inf" : "inf";
}

}  // namespace

Json scalar_to_json(const Semiring& sr, const TropScalar& s) {
  if (s.is_zero()) return zero_literal(sr);
  return format_rational(s.value());
}

TropScalar scalar_from_json(const Semiring& sr, const Json& j) {
  if (j.is_number_integer()) return TropScalar(Rat(j.get<long long>()));
  if (j.is_number_unsigned())
    return TropScalar(Rat(j.get<unsigned long long>()));
  if (j.is_number_float())
    bad("floating point scalars are not accepted; use exact strings");
  if (!j.is_string()) bad("scalar must be a string or integer");
  const std::string& text = j.get_ref<const std::string&>();
  if (text == zero_literal(sr)) return TropScalar::zero();
  if (text == "inf" || text == "-inf" || text == "+inf")
    bad("infinity literal does not match the active convention");
  return TropScalar(parse_rational(text));
}

Json rat_to_json(const Rat& r) { return format_rational(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  if (j.is_number_float())
    bad("floating point values are not accepted; use exact strings");
  if (!j.is_string()) bad("rational must be a string or integer");
  return parse_rational(j.get_ref<const std::string&>());
}

Json vector_to_json(const Semiring& sr, const TropVector& v) {
  Json out = Json::array();
  for (const TropScalar& s : v) out.push_back(scalar_to_json(sr, s));
  return out;
}

TropVector vector_from_json(const Semiring& sr, const Json& j) {
  if (!j.is_array() || j.empty()) bad("vector must be a nonempty array");
  TropVector v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(scalar_from_json(sr, e));
  return v;
}

Json matrix_to_json(const Semiring& sr, const TropMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j)
      row.push_back(scalar_to_json(sr, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

TropMatrix matrix_from_json(const Semiring& sr, const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array");
  std::size_t cols = 0;
  std::vector<TropVector> rows;
  for (const Json& row : j) {
    TropVector r = vector_from_json(sr, row);
    if (cols == 0)
      cols = r.size();
    else if (r.size() != cols)
      bad("matrix rows must have equal length");
    rows.push_back(std::move(r));
  }
  TropMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rows[i][k];
  return m;
}

Json point_to_json(const PlanePoint& p) {
  return Json{{"x", rat_to_json(p.x)}, {"y", rat_to_json(p.y)}};
}

PlanePoint point_from_json(const Json& j) {
  return PlanePoint{rat_from_json(field(j, "x")), rat_from_json(field(j, "y"))};
}

Json line_to_json(const Semiring& sr, const TropLine& line) {
  PlanePoint v = line.vertex();
  return Json{{"a", scalar_to_json(sr, TropScalar(line.a()))},
              {"b", scalar_to_json(sr, TropScalar(line.b()))},
              {"c", scalar_to_json(sr, TropScalar(line.c()))},
              {"vertex", Json::array({rat_to_json(v.x), rat_to_json(v.y)})}};
}

TropLine line_from_json(const Semiring& sr, const Json& j) {
  return line_from_coeffs(sr, scalar_from_json(sr, field(j, "a")),
                          scalar_from_json(sr, field(j, "b")),
                          scalar_from_json(sr, field(j, "c")));
}

Json pencil_to_json(const Semiring& sr, const Pencil& pencil) {
  Json pts = Json::array();
  for (const PlanePoint& p : pencil.points) pts.push_back(point_to_json(p));
  return Json{{"line", line_to_json(sr, pencil.line)},
              {"points", std::move(pts)},
              {"counts",
               Json{{"p", pencil.p}, {"q", pencil.q}, {"r", pencil.r}}}};
}

Pencil pencil_from_json(const Semiring& sr, const Json& j) {
  TropLine line = line_from_json(sr, field(j, "line"));
  std::vector<PlanePoint> pts;
  for (const Json& p : field(j, "points")) pts.push_back(point_from_json(p));
  return make_pencil(sr, line, pts);
}

Json reduced_pencil_to_json(const Semiring& sr, const ReducedPencil& rp) {
  Json out{{"line", line_to_json(sr, rp.line)}};
  if (rp.diag) out["diag"] = point_to_json(*rp.diag);
  if (rp.left) out["left"] = point_to_json(*rp.left);
  if (rp.down) out["down"] = point_to_json(*rp.down);
  return out;
}

ReducedPencil reduced_pencil_from_json(const Semiring& sr, const Json& j) {
  ReducedPencil rp{line_from_json(sr, field(j, "line")), {}, {}, {}};
  if (j.contains("diag")) rp.diag = point_from_json(j.at("diag"));
  if (j.contains("left")) rp.left = point_from_json(j.at("left"));
  if (j.contains("down")) rp.down = point_from_json(j.at("down"));
  // Declared rays must agree with the actual incidence classification.
  auto check = [&](const std::optional<PlanePoint>& pt, RayLabel label) {
    if (!pt) return;
    IncidenceResult inc = incidence(sr, *pt, rp.line);
    if (!inc.incident || inc.label != label)
      fail(Errc::NotIncident, "representative not on its declared ray");
  };
  check(rp.diag, RayLabel::Diag);
  check(rp.left, RayLabel::Left);
  check(rp.down, RayLabel::Down);
  return rp;
}

Json perspectivity_to_json(const Semiring& sr, const Perspectivity& p) {
  return Json{{"center", point_to_json(p.center)},
              {"source", reduced_pencil_to_json(sr, p.source)},
              {"target", reduced_pencil_to_json(sr, p.target)}};
}

Perspectivity perspectivity_from_json(const Semiring& sr, const Json& j) {
  return make_perspectivity(sr, point_from_json(field(j, "center")),
                            reduced_pencil_from_json(sr, field(j, "source")),
                            reduced_pencil_from_json(sr, field(j, "target")));
}

Json projectivity_to_json(const Semiring& sr, const Projectivity& f) {
  Json stages = Json::array();
  for (const Perspectivity& s : f.stages)
    stages.push_back(perspectivity_to_json(sr, s));
  return Json{{"stages", std::move(stages)}};
}

Projectivity projectivity_from_json(const Semiring& sr, const Json& j) {
  Projectivity f;
  for (const Json& s : field(j, "stages"))
    f.stages.push_back(perspectivity_from_json(sr, s));
  if (f.stages.size() < 2)
    bad("a projectivity needs at least two stages");
  for (std::size_t i = 0; i + 1 < f.stages.size(); ++i)
    if (f.stages[i].target.line != f.stages[i + 1].source.line)
      bad("consecutive stages do not chain");
  return f;
}

Json witness_to_json(const Semiring& sr, const NoninvarianceWitness& w) {
  return Json{{"matrix", matrix_to_json(sr, w.m)},
              {"a", vector_to_json(sr, w.a)},
              {"b", vector_to_json(sr, w.b)},
              {"c", vector_to_json(sr, w.c)},
              {"d", vector_to_json(sr, w.d)},
              {"value_before", scalar_to_json(sr, w.value_before)},
              {"value_after", scalar_to_json(sr, w.value_after)},
              {"cases_tried", w.cases_tried}};
}

Json reconstruction_to_json(const Semiring& sr,
                            const ReconstructionReport& report) {
  Json images = Json::array();
  for (const TropVector& v : report.basis_images)
    images.push_back(vector_to_json(sr, v));
  Json gammas = Json::array();
  for (const TropScalar& g : report.gammas)
    gammas.push_back(scalar_to_json(sr, g));
  Json table = Json::array();
  for (const auto& [c, v] : report.mu_table)
    table.push_back(Json::array(
        {scalar_to_json(sr, c), scalar_to_json(sr, v)}));
  Json out{{"first_image", vector_to_json(sr, report.basis_images.at(0))},
           {"basis_images", std::move(images)},
           {"gammas", std::move(gammas)},
           {"mu_table", std::move(table)},
           {"checks",
            Json{{"mu_zero", report.mu_zero_ok},
                 {"mu_one", report.mu_one_ok},
                 {"mu_additive", report.mu_additive_ok},
                 {"mu_multiplicative", report.mu_multiplicative_ok},
                 {"mu_cross_consistent", report.mu_cross_consistent}}}};
  if (report.mu_scale) out["mu_scale"] = rat_to_json(*report.mu_scale);
  return out;
}

Json tp2_report_to_json(const Tp2Report& report) {
  Json perms = Json::array();
  for (const Tp2PermutationResult& r : report.permutations)
    perms.push_back(Json{{"perm", r.perm},
                         {"coaxiality", r.coaxiality_ok},
                         {"reconstruction", r.reconstruction_ok}});
  return Json{{"classes", report.classes},
              {"coaxial_triples", report.coaxial_triples},
              {"permutations", std::move(perms)},
              {"all_pass", report.all_pass}};
}

Flavor flavor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("convention")) return Flavor::MaxPlus;
  const Json& c = j.at("convention");
  if (!c.is_string()) bad("convention must be \"max\" or \"min\"");
  const std::string& s = c.get_ref<const std::string&>();
  if (s == "max") return Flavor::MaxPlus;
  if (s == "min") return Flavor::MinPlus;
  bad("convention must be \"max\" or \"min\"");
}

Scene scene_from_json(const Json& j) {
  if (!j.is_object()) bad("scene must be an object");
  if (j.contains("schema") && j.at("schema") != 1)
    bad("unsupported schema version");
  Scene scene;
  scene.convention = flavor_from_json(j);
  Semiring sr(scene.convention);

  const Json& view = field(j, "view");
  scene.view.xmin = rat_from_json(field(view, "xmin"));
  scene.view.xmax = rat_from_json(field(view, "xmax"));
  scene.view.ymin = rat_from_json(field(view, "ymin"));
  scene.view.ymax = rat_from_json(field(view, "ymax"));
  if (view.contains("ray_extension"))
    scene.view.ray_extension = rat_from_json(view.at("ray_extension"));

  if (j.contains("objects")) {
    for (const Json& obj : j.at("objects")) {
      const Json& type = field(obj, "type");
      if (type == "point") {
        ScenePoint p{point_from_json(obj), obj.value("label", ""),
                     obj.value("aux", false)};
        scene.objects.push_back(std::move(p));
      } else if (type == "line") {
        SceneLine l{line_from_json(sr, obj), obj.value("label", ""),
                    obj.value("aux", false)};
        scene.objects.push_back(std::move(l));
      } else if (type == "pencil") {
        scene.objects.push_back(
            ScenePencil{pencil_from_json(sr, obj), obj.value("label", "")});
      } else if (type == "perspectivity") {
        ScenePerspectivity p{point_from_json(field(obj, "center")),
                             line_from_json(sr, field(obj, "src")),
                             line_from_json(sr, field(obj, "dst")),
                             {}};
        if (obj.contains("points"))
          for (const Json& pt : obj.at("points"))
            p.points.push_back(point_from_json(pt));
        scene.objects.push_back(std::move(p));
      } else if (type == "projectivity") {
        SceneProjectivity p{projectivity_from_json(sr, obj), {}};
        if (obj.contains("points"))
          for (const Json& pt : obj.at("points"))
            p.points.push_back(point_from_json(pt));
        scene.objects.push_back(std::move(p));
      } else if (type == "quadruple") {
        scene.objects.push_back(
            SceneQuadruple{vector_from_json(sr, field(obj, "a")),
                           vector_from_json(sr, field(obj, "b")),
                           vector_from_json(sr, field(obj, "c")),
                           vector_from_json(sr, field(obj, "d"))});
      } else if (type == "matrix") {
        scene.objects.push_back(
            SceneMatrix{matrix_from_json(sr, field(obj, "matrix"))});
      } else {
        bad("unknown object type");
      }
    }
  }
  return scene;
}

Json scene_to_json(const Scene& scene) {
  Semiring sr(scene.convention);
  Json view{{"xmin", rat_to_json(scene.view.xmin)},
            {"xmax", rat_to_json(scene.view.xmax)},
            {"ymin", rat_to_json(scene.view.ymin)},
            {"ymax", rat_to_json(scene.view.ymax)},
            {"ray_extension", rat_to_json(scene.view.ray_extension)}};
  Json objects = Json::array();
  for (const SceneObject& object : scene.objects) {
    Json o;
    if (const auto* p = std::get_if<ScenePoint>(&object)) {
      o = point_to_json(p->at);
      o["type"] = "point";
      if (!p->label.empty()) o["label"] = p->label;
      if (p->aux) o["aux"] = true;
    } else if (const auto* l = std::get_if<SceneLine>(&object)) {
      o = line_to_json(sr, l->line);
      o["type"] = "line";
      if (!l->label.empty()) o["label"] = l->label;
      if (l->aux) o["aux"] = true;
    } else if (const auto* pc = std::get_if<ScenePencil>(&object)) {
      o = pencil_to_json(sr, pc->pencil);
      o["type"] = "pencil";
      if (!pc->label.empty()) o["label"] = pc->label;
    } else if (const auto* ps = std::get_if<ScenePerspectivity>(&object)) {
      o["type"] = "perspectivity";
      o["center"] = point_to_json(ps->center);
      o["src"] = line_to_json(sr, ps->src);
      o["dst"] = line_to_json(sr, ps->dst);
      Json pts = Json::array();
      for (const PlanePoint& pt : ps->points) pts.push_back(point_to_json(pt));
      o["points"] = std::move(pts);
    } else if (const auto* pj = std::get_if<SceneProjectivity>(&object)) {
      o = projectivity_to_json(sr, pj->map);
      o["type"] = "projectivity";
      Json pts = Json::array();
      for (const PlanePoint& pt : pj->points) pts.push_back(point_to_json(pt));
      o["points"] = std::move(pts);
    } else if (const auto* q = std::get_if<SceneQuadruple>(&object)) {
      o["type"] = "quadruple";
      o["a"] = vector_to_json(sr, q->a);
      o["b"] = vector_to_json(sr, q->b);
      o["c"] = vector_to_json(sr, q->c);
      o["d"] = vector_to_json(sr, q->d);
    } else if (const auto* m = std::get_if<SceneMatrix>(&object)) {
      o["type"] = "matrix";
      o["matrix"] = matrix_to_json(sr, m->m);
    }
    objects.push_back(std::move(o));
  }
  return Json{{"schema", 1},
              {"convention",
               scene.convention == Flavor::MaxPlus ? "max" : "min"},
              {"view", std::move(view)},
              {"objects", std::move(objects)}};
}

}  // namespace tropgeom
