#include "tropgeom/svg.hpp"

#include <sstream>

namespace tropgeom {

namespace {

constexpr int kScale = 40;
constexpr unsigned kPlaces = 6;

struct Canvas {
  const SceneView& view;
  const Semiring sr;
  std::ostringstream out;

  Canvas(const SceneView& v, Flavor flavor) : view(v), sr(flavor) {}

  std::string fx(const Rat& x) const {
    return format_decimal_fixed((x - view.xmin) * kScale, kPlaces);
  }
  std::string fy(const Rat& y) const {
    return format_decimal_fixed((view.ymax - y) * kScale, kPlaces);
  }

  void segment(const PlanePoint& a, const PlanePoint& b, bool aux) {
    out << "<line x1=\"" << fx(a.x) << "\" y1=\"" << fy(a.y) << "\" x2=\""
        << fx(b.x) << "\" y2=\"" << fy(b.y) << "\"";
    if (aux)
      out << " stroke=\"#666666\" stroke-width=\"1\" "
             "stroke-dasharray=\"4 3\"";
    else
      out << " stroke=\"#000000\" stroke-width=\"1.5\"";
    out << "/>\n";
  }

  void tropical_line(const TropLine& line, bool aux) {
    PlanePoint v = line.vertex();
    for (RayLabel label : {RayLabel::Left, RayLabel::Down, RayLabel::Diag}) {
      auto [dx, dy] = ray_direction(sr, label);
      Rat reach = 0;
      if (dx != 0) {
        Rat r = dx > 0 ? view.xmax - v.x : v.x - view.xmin;
        if (r > reach) reach = r;
      }
      if (dy != 0) {
        Rat r = dy > 0 ? view.ymax - v.y : v.y - view.ymin;
        if (r > reach) reach = r;
      }
      Rat t = reach + view.ray_extension;
      segment(v, PlanePoint{v.x + t * dx, v.y + t * dy}, aux);
    }
  }

  void point(const PlanePoint& p, const std::string& label, bool aux) {
    out << "<circle cx=\"" << fx(p.x) << "\" cy=\"" << fy(p.y) << "\" r=\""
        << (aux ? "2.5" : "3.5") << "\" fill=\""
        << (aux ? "#666666" : "#000000") << "\"/>\n";
    if (!label.empty()) {
      std::string escaped;
      for (char c : label) {
        switch (c) {
          case '&': escaped += "&amp;"; break;
          case '<': escaped += "&lt;"; break;
          case '>': escaped += "&gt;"; break;
          default: escaped += c;
        }
      }
      out << "<text x=\"" << fx(p.x + Rat(1, 5)) << "\" y=\""
          << fy(p.y + Rat(1, 5))
          << "\" font-family=\"monospace\" font-size=\"12\">" << escaped
          << "</text>\n";
    }
  }
};

struct ObjectRenderer {
  Canvas& canvas;

  void operator()(const ScenePoint& o) const {
    canvas.point(o.at, o.label, o.aux);
  }

  void operator()(const SceneLine& o) const {
    canvas.tropical_line(o.line, o.aux);
    if (!o.label.empty()) canvas.point(o.line.vertex(), o.label, o.aux);
  }

  void operator()(const ScenePencil& o) const {
    canvas.tropical_line(o.pencil.line, false);
    for (const PlanePoint& p : o.pencil.points) canvas.point(p, "", false);
    if (!o.label.empty())
      canvas.point(o.pencil.line.vertex(), o.label, false);
  }

  void operator()(const ScenePerspectivity& o) const {
    canvas.tropical_line(o.src, false);
    canvas.tropical_line(o.dst, false);
    for (const PlanePoint& p : o.points) {
      canvas.tropical_line(stable_line(canvas.sr, o.center, p), true);
      canvas.point(p, "", false);
      canvas.point(perspectivity_apply(canvas.sr, o.center, o.src, o.dst, p),
                   "", false);
    }
    canvas.point(o.center, "P", false);
  }

  void operator()(const SceneProjectivity& o) const {
    if (o.map.stages.empty()) return;
    canvas.tropical_line(o.map.stages.front().source.line, false);
    for (const Perspectivity& stage : o.map.stages)
      canvas.tropical_line(stage.target.line,
                           &stage != &o.map.stages.back());
    for (const PlanePoint& p : o.points) {
      PlanePoint cur = p;
      canvas.point(cur, "", false);
      for (const Perspectivity& stage : o.map.stages) {
        canvas.tropical_line(stable_line(canvas.sr, stage.center, cur), true);
        cur = perspectivity_apply(canvas.sr, stage.center, stage.source.line,
                                  stage.target.line, cur);
        canvas.point(cur, "", false);
      }
    }
    for (const Perspectivity& stage : o.map.stages)
      canvas.point(stage.center, "", false);
  }

  void operator()(const SceneQuadruple&) const {}
  void operator()(const SceneMatrix&) const {}
};

}  // namespace

std::string render_svg(const Scene& scene) {
  const SceneView& view = scene.view;
  if (view.xmin >= view.xmax || view.ymin >= view.ymax)
    fail(Errc::EmptyView, "view box is empty");

  Canvas canvas(view, scene.convention);
  std::string width = format_decimal_fixed((view.xmax - view.xmin) * kScale,
                                           kPlaces);
  std::string height = format_decimal_fixed((view.ymax - view.ymin) * kScale,
                                            kPlaces);
  canvas.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
             << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
             << height << "\">\n";
  canvas.out << "<rect width=\"" << width << "\" height=\"" << height
             << "\" fill=\"#ffffff\"/>\n";

  // Coordinate axes, clipped to the view.
  if (view.xmin <= 0 && 0 <= view.xmax)
    canvas.out << "<line x1=\"" << canvas.fx(0) << "\" y1=\""
               << canvas.fy(view.ymin) << "\" x2=\"" << canvas.fx(0)
               << "\" y2=\"" << canvas.fy(view.ymax)
               << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  if (view.ymin <= 0 && 0 <= view.ymax)
    canvas.out << "<line x1=\"" << canvas.fx(view.xmin) << "\" y1=\""
               << canvas.fy(0) << "\" x2=\"" << canvas.fx(view.xmax)
               << "\" y2=\"" << canvas.fy(0)
               << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

  ObjectRenderer renderer{canvas};
  for (const SceneObject& object : scene.objects)
    std::visit(renderer, object);

  canvas.out << "</svg>\n";
  return canvas.out.str();
}

}  // namespace tropgeom
