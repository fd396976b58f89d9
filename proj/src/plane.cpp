#include "tropgeom/plane.hpp"

#include "tropgeom/linalg.hpp"

#include <algorithm>
#include <optional>

namespace tropgeom {

const char* ray_label_name(RayLabel label) {
  switch (label) {
    case RayLabel::Vertex: return "vertex";
    case RayLabel::Left: return "left";
    case RayLabel::Down: return "down";
    case RayLabel::Diag: return "diag";
  }
  return "?";
}

TropLine::TropLine(const Semiring& sr, const Rat& a, const Rat& b,
                   const Rat& c) {
  TropScalar dom = sr.add(sr.add(TropScalar(a), TropScalar(b)), TropScalar(c));
  a_ = a - dom.value();
  b_ = b - dom.value();
  c_ = c - dom.value();
}

std::pair<int, int> ray_direction(const Semiring& sr, RayLabel label) {
  int s = sr.flavor() == Flavor::MaxPlus ? 1 : -1;
  switch (label) {
    case RayLabel::Left: return {-s, 0};
    case RayLabel::Down: return {0, -s};
    case RayLabel::Diag: return {s, s};
    case RayLabel::Vertex: return {0, 0};
  }
  return {0, 0};
}

TropLine line_from_coeffs(const Semiring& sr, const TropScalar& a,
                          const TropScalar& b, const TropScalar& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    fail(Errc::DegenerateLine, "line coefficients must be finite");
  return TropLine(sr, a.value(), b.value(), c.value());
}

IncidenceResult incidence(const Semiring& sr, const PlanePoint& p,
                          const TropLine& line) {
  TropScalar t1(line.a() + p.x), t2(line.b() + p.y), t3(line.c());
  TropScalar opt = sr.add(sr.add(t1, t2), t3);
  bool h1 = t1 == opt, h2 = t2 == opt, h3 = t3 == opt;
  IncidenceResult r;
  if (h1 + h2 + h3 < 2) return r;
  r.incident = true;
  if (h1 && h2 && h3) r.label = RayLabel::Vertex;
  else if (h2 && h3) r.label = RayLabel::Left;
  else if (h1 && h3) r.label = RayLabel::Down;
  else r.label = RayLabel::Diag;
  return r;
}

TropLine stable_line(const Semiring& sr, const PlanePoint& p,
                     const PlanePoint& q) {
  if (p == q) fail(Errc::IdenticalPoints, "stable line needs distinct points");
  // Cross product of (p.x, p.y, 0) and (q.x, q.y, 0).
  TropScalar a = sr.add(TropScalar(p.y), TropScalar(q.y));
  TropScalar b = sr.add(TropScalar(p.x), TropScalar(q.x));
  TropScalar c = sr.add(TropScalar(p.x + q.y), TropScalar(p.y + q.x));
  return TropLine(sr, a.value(), b.value(), c.value());
}

PlanePoint stable_intersect(const Semiring& sr, const TropLine& l1,
                            const TropLine& l2) {
  if (l1 == l2) fail(Errc::IdenticalLines, "lines coincide projectively");
  TropScalar x1 = sr.add(TropScalar(l1.b() + l2.c()), TropScalar(l2.b() + l1.c()));
  TropScalar x2 = sr.add(TropScalar(l1.a() + l2.c()), TropScalar(l2.a() + l1.c()));
  TropScalar x3 = sr.add(TropScalar(l1.a() + l2.b()), TropScalar(l2.a() + l1.b()));
  return PlanePoint{x1.value() - x3.value(), x2.value() - x3.value()};
}

bool is_coaxial_points(const PlanePoint& p, const PlanePoint& q) {
  if (p == q) fail(Errc::IdenticalPoints, "coaxiality needs distinct points");
  Rat dx = q.x - p.x, dy = q.y - p.y;
  return dx == 0 || dy == 0 || dx == dy;
}

bool is_coaxial_lines(const TropLine& l1, const TropLine& l2) {
  PlanePoint v1 = l1.vertex(), v2 = l2.vertex();
  if (v1 == v2) return true;
  return is_coaxial_points(v1, v2);
}

namespace {

struct Ray {
  PlanePoint origin;
  std::pair<int, int> dir;
};

// Exact intersection of two half lines; reports an infinite overlap through
// the bool, otherwise appends any common point.
bool intersect_rays(const Ray& r1, const Ray& r2,
                    std::vector<PlanePoint>& points) {
  const auto [dx1, dy1] = r1.dir;
  const auto [dx2, dy2] = r2.dir;
  Rat det = Rat(dx1) * dy2 - Rat(dy1) * dx2;
  Rat ox = r2.origin.x - r1.origin.x;
  Rat oy = r2.origin.y - r1.origin.y;
  if (det == 0) {
    // Same primitive direction; collinear iff origin offset is parallel.
    if (ox * dy1 != oy * dx1) return false;
    // Two collinear rays pointing the same way overlap in a full ray.
    return true;
  }
  Rat t = (ox * dy2 - oy * dx2) / det;
  Rat s = (ox * dy1 - oy * dx1) / det;
  if (t >= 0 && s >= 0)
    points.push_back(PlanePoint{r1.origin.x + t * dx1, r1.origin.y + t * dy1});
  return false;
}

std::vector<Ray> rays_of(const Semiring& sr, const TropLine& line) {
  PlanePoint v = line.vertex();
  return {Ray{v, ray_direction(sr, RayLabel::Left)},
          Ray{v, ray_direction(sr, RayLabel::Down)},
          Ray{v, ray_direction(sr, RayLabel::Diag)}};
}

}  // namespace

bool general_position(const Semiring& sr, const TropLine& l1,
                      const TropLine& l2) {
  if (l1 == l2) fail(Errc::IdenticalLines, "lines coincide projectively");
  std::vector<PlanePoint> points;
  for (const Ray& r1 : rays_of(sr, l1))
    for (const Ray& r2 : rays_of(sr, l2))
      if (intersect_rays(r1, r2, points)) return false;
  std::vector<PlanePoint> distinct;
  for (const PlanePoint& p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
      distinct.push_back(p);
  return distinct.size() == 1;
}

bool tropically_collinear(const Semiring& sr, const PlanePoint& p,
                          const PlanePoint& q, const PlanePoint& r) {
  // Rows are the homogenized points (x, y, 0).
  TropMatrix m(3, 3);
  const PlanePoint* pts[3] = {&p, &q, &r};
  for (std::size_t i = 0; i < 3; ++i) {
    m.at(i, 0) = TropScalar(pts[i]->x);
    m.at(i, 1) = TropScalar(pts[i]->y);
    m.at(i, 2) = TropScalar::one();
  }
  return is_tropically_singular(sr, m);
}

std::vector<PlanePoint> intersection_candidates(const Semiring& sr,
                                                const TropLine& l1,
                                                const TropLine& l2) {
  if (l1 == l2) fail(Errc::IdenticalLines, "lines coincide projectively");
  std::vector<PlanePoint> out;
  auto push = [&](const PlanePoint& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (const Ray& r1 : rays_of(sr, l1)) {
    for (const Ray& r2 : rays_of(sr, l2)) {
      const auto [dx1, dy1] = r1.dir;
      const auto [dx2, dy2] = r2.dir;
      Rat det = Rat(dx1) * dy2 - Rat(dy1) * dx2;
      Rat ox = r2.origin.x - r1.origin.x;
      Rat oy = r2.origin.y - r1.origin.y;
      if (det == 0) {
        if (ox * dy1 != oy * dx1) continue;
        // Same-direction collinear rays: the overlap is a ray from the
        // later origin.
        Rat t0 = dx1 != 0 ? ox / dx1 : oy / dy1;
        PlanePoint corner = t0 > 0 ? r2.origin : r1.origin;
        push(corner);
        Rat step = 1;
        for (int e = 0; e < 4; ++e, step *= 2)
          push(PlanePoint{corner.x + step * dx1, corner.y + step * dy1});
      } else {
        Rat t = (ox * dy2 - oy * dx2) / det;
        Rat s = (ox * dy1 - oy * dx1) / det;
        if (t >= 0 && s >= 0)
          push(PlanePoint{r1.origin.x + t * dx1, r1.origin.y + t * dy1});
      }
    }
  }
  return out;
}

bool is_stable_marked_line(const Semiring& sr, const TropLine& line,
                           const std::vector<PlanePoint>& pts) {
  if (pts.size() < 2)
    fail(Errc::PreconditionViolated, "a marked line needs at least two points");
  for (const PlanePoint& p : pts)
    if (!incidence(sr, p, line).incident)
      fail(Errc::NotIncident, "marked point off the line");
  PlanePoint v = line.vertex();
  for (const PlanePoint& p : pts)
    if (p == v) return true;
  // Unique line through the marks iff some pair of them is non-coaxial.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] != pts[j] && !is_coaxial_points(pts[i], pts[j])) return true;
  return false;
}

Rat ray_parameter(const Semiring& sr, const TropLine& line,
                  const PlanePoint& p, RayLabel label) {
  PlanePoint v = line.vertex();
  auto [dx, dy] = ray_direction(sr, label);
  if (dx != 0) return (p.x - v.x) / dx;
  return (p.y - v.y) / dy;
}

PlanePoint point_on_ray(const Semiring& sr, const TropLine& line,
                        RayLabel label, const Rat& t) {
  PlanePoint v = line.vertex();
  auto [dx, dy] = ray_direction(sr, label);
  return PlanePoint{v.x + t * dx, v.y + t * dy};
}

}  // namespace tropgeom
