#include "tropgeom/pencil.hpp"

#include <array>

namespace tropgeom {

Pencil make_pencil(const Semiring& sr, const TropLine& line,
                   const std::vector<PlanePoint>& pts) {
  Pencil pencil{line, {}, 0, 0, 0};
  pencil.points = pts;
  for (const PlanePoint& pt : pts) {
    IncidenceResult inc = incidence(sr, pt, line);
    if (!inc.incident) fail(Errc::NotIncident, "pencil point off the line");
    switch (inc.label) {
      case RayLabel::Vertex:
        fail(Errc::VertexPoint, "pencil points may not sit at the vertex");
      case RayLabel::Diag: ++pencil.p; break;
      case RayLabel::Left: ++pencil.q; break;
      case RayLabel::Down: ++pencil.r; break;
    }
  }
  return pencil;
}

ReducedPencil reduce_pencil(const Semiring& sr, const Pencil& pencil) {
  ReducedPencil reduced{pencil.line, {}, {}, {}};
  auto consider = [&](std::optional<PlanePoint>& slot, const PlanePoint& pt,
                      RayLabel label) {
    if (!slot) {
      slot = pt;
      return;
    }
    // Nearest to the vertex; ties cannot occur on one ray.
    if (ray_parameter(sr, pencil.line, pt, label) <
        ray_parameter(sr, pencil.line, *slot, label))
      slot = pt;
  };
  for (const PlanePoint& pt : pencil.points) {
    RayLabel label = incidence(sr, pt, pencil.line).label;
    switch (label) {
      case RayLabel::Diag: consider(reduced.diag, pt, label); break;
      case RayLabel::Left: consider(reduced.left, pt, label); break;
      case RayLabel::Down: consider(reduced.down, pt, label); break;
      case RayLabel::Vertex: break;  // excluded by make_pencil
    }
  }
  return reduced;
}

bool is_compatible(const Semiring& sr, const Pencil& p1, const Pencil& p2) {
  (void)sr;
  if (is_coaxial_lines(p1.line, p2.line)) return false;
  return p1.p == p2.p && p1.q == p2.q && p1.r == p2.r;
}

Perspectivity make_perspectivity(const Semiring& sr, const PlanePoint& center,
                                 const ReducedPencil& source,
                                 const ReducedPencil& target) {
  if (incidence(sr, center, source.line).incident ||
      incidence(sr, center, target.line).incident)
    fail(Errc::CenterOnLine, "perspectivity center on a pencil line");
  if (is_coaxial_lines(source.line, target.line))
    fail(Errc::PreconditionViolated, "perspectivity lines must be non-coaxial");
  return Perspectivity{center, source, target};
}

PlanePoint perspectivity_apply(const Semiring& sr, const PlanePoint& center,
                               const TropLine& src, const TropLine& dst,
                               const PlanePoint& x) {
  if (!incidence(sr, x, src).incident)
    fail(Errc::NotIncident, "point off the source line");
  if (incidence(sr, center, src).incident ||
      incidence(sr, center, dst).incident)
    fail(Errc::CenterOnLine, "center on a pencil line");
  if (is_coaxial_lines(src, dst))
    fail(Errc::PreconditionViolated, "pencil lines must be non-coaxial");
  return stable_intersect(sr, stable_line(sr, center, x), dst);
}

namespace {

bool off_line(const Semiring& sr, const PlanePoint& pt, const TropLine& line) {
  return !incidence(sr, pt, line).incident;
}

TropLine line_from_vertex(const Semiring& sr, const PlanePoint& v) {
  // vertex (c - a, c - b) with a = 0.
  return TropLine(sr, Rat(0), v.x - v.y, v.x);
}

std::vector<Rat> dyadic_parameters() {
  std::vector<Rat> ts;
  Rat t = 1;
  for (int e = 0; e <= 10; ++e, t *= 2) ts.push_back(t);
  return ts;
}

// Deterministic scan order: growing dyadic parameter, diag/left/down rays.
std::vector<PlanePoint> dyadic_candidates(const Semiring& sr,
                                          const TropLine& line) {
  std::vector<PlanePoint> out;
  for (const Rat& t : dyadic_parameters())
    for (RayLabel label : {RayLabel::Diag, RayLabel::Left, RayLabel::Down})
      out.push_back(point_on_ray(sr, line, label, t));
  return out;
}

std::vector<PlanePoint> reps_of(const ReducedPencil& rp) {
  std::vector<PlanePoint> out;
  if (rp.left) out.push_back(*rp.left);
  if (rp.down) out.push_back(*rp.down);
  if (rp.diag) out.push_back(*rp.diag);
  return out;
}

// Valid marks for the image of x: points of the target line concurrent with
// center and x, i.e. on the join of center and x.
std::vector<PlanePoint> mark_candidates(const Semiring& sr,
                                        const PlanePoint& center,
                                        const PlanePoint& x,
                                        const TropLine& target) {
  TropLine join = stable_line(sr, center, x);
  std::vector<PlanePoint> out;
  for (const PlanePoint& c : intersection_candidates(sr, join, target)) {
    IncidenceResult inc = incidence(sr, c, target);
    if (inc.incident && inc.label != RayLabel::Vertex) out.push_back(c);
  }
  return out;
}

// The three marks of a reduced pencil on `line`, one per ray, none at the
// vertex; empty result when they do not bucket.
std::optional<ReducedPencil> bucket_triple(const Semiring& sr,
                                           const TropLine& line,
                                           const PlanePoint& a,
                                           const PlanePoint& b,
                                           const PlanePoint& c) {
  ReducedPencil rp{line, {}, {}, {}};
  for (const PlanePoint& pt : {a, b, c}) {
    IncidenceResult inc = incidence(sr, pt, line);
    if (!inc.incident || inc.label == RayLabel::Vertex) return std::nullopt;
    std::optional<PlanePoint>* slot = nullptr;
    switch (inc.label) {
      case RayLabel::Diag: slot = &rp.diag; break;
      case RayLabel::Left: slot = &rp.left; break;
      case RayLabel::Down: slot = &rp.down; break;
      case RayLabel::Vertex: return std::nullopt;
    }
    if (slot->has_value()) return std::nullopt;
    *slot = pt;
  }
  return rp;
}

// Every marked pairing must be certified concurrent and unambiguous.
bool stage_pairs_exactly(const Semiring& sr, const Perspectivity& stage,
                         const std::array<PlanePoint, 3>& sources,
                         const std::array<PlanePoint, 3>& targets) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!tropically_collinear(sr, stage.center, sources[i], targets[i]))
      return false;
    // The intended mark must be the only target rep concurrent with the
    // source, or the pairing would be ambiguous.
    for (const PlanePoint& other : reps_of(stage.target)) {
      if (other == targets[i]) continue;
      if (tropically_collinear(sr, stage.center, sources[i], other))
        return false;
    }
  }
  return true;
}

// Vertices on a ray of `line` whose own line passes through `through`:
// candidate middle-line vertices keeping `through` marked.
std::vector<PlanePoint> vertices_on_line_through(const Semiring& sr,
                                                 const TropLine& line,
                                                 const PlanePoint& through) {
  std::vector<PlanePoint> out;
  const PlanePoint v = line.vertex();
  auto push = [&](const PlanePoint& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  for (RayLabel lb : {RayLabel::Diag, RayLabel::Left, RayLabel::Down}) {
    auto [dx1, dy1] = ray_direction(sr, lb);
    for (RayLabel dual : {RayLabel::Diag, RayLabel::Left, RayLabel::Down}) {
      auto [rdx, rdy] = ray_direction(sr, dual);
      int dx2 = -rdx, dy2 = -rdy;  // w sits opposite the ray that hits it
      Rat det = Rat(dx1) * dy2 - Rat(dy1) * dx2;
      Rat ox = through.x - v.x, oy = through.y - v.y;
      if (det == 0) {
        if (ox * dy1 != oy * dx1) continue;
        Rat t0 = dx1 != 0 ? ox / dx1 : oy / dy1;
        for (const Rat& t : dyadic_parameters())
          if (t < t0) push(PlanePoint{v.x + t * dx1, v.y + t * dy1});
        if (t0 > 0)
          push(PlanePoint{v.x + (t0 / 2) * dx1, v.y + (t0 / 2) * dy1});
      } else {
        Rat t = (ox * dy2 - oy * dx2) / det;
        Rat s = (ox * dy1 - oy * dx1) / det;
        if (t >= 0 && s > 0)
          push(PlanePoint{v.x + t * dx1, v.y + t * dy1});
      }
    }
  }
  return out;
}

// Self-correspondence: out through an auxiliary line and back with one
// shared center; the return marks are concurrent by construction. The
// middle vertex rides on a join through the center so one mark can slide
// along the overlap to its own ray.
std::optional<ProjectivityConstruction> try_identity(const Semiring& sr,
                                                     const ReducedPencil& rp,
                                                     std::size_t& to_skip) {
  const TropLine& l1 = rp.line;
  const PlanePoint v = l1.vertex();
  const PlanePoint a = *rp.left, b = *rp.down, c = *rp.diag;
  for (const Rat& t : dyadic_parameters()) {
    PlanePoint center{v.x + t, v.y - t};  // never on l1
    std::vector<PlanePoint> mid_vertices;
    for (const PlanePoint& x : {a, b, c})
      for (const PlanePoint& w :
           dyadic_candidates(sr, stable_line(sr, center, x)))
        mid_vertices.push_back(w);
    for (const PlanePoint& w : mid_vertices) {
      TropLine mid = line_from_vertex(sr, w);
      if (mid == l1 || is_coaxial_lines(l1, mid)) continue;
      if (!off_line(sr, center, mid)) continue;
      std::vector<PlanePoint> ca = mark_candidates(sr, center, a, mid);
      std::vector<PlanePoint> cb = mark_candidates(sr, center, b, mid);
      std::vector<PlanePoint> cc = mark_candidates(sr, center, c, mid);
      for (const PlanePoint& a1 : ca) {
        for (const PlanePoint& b1 : cb) {
          for (const PlanePoint& c1 : cc) {
            auto mid_rp = bucket_triple(sr, mid, a1, b1, c1);
            if (!mid_rp) continue;
            Perspectivity out_stage{center, rp, *mid_rp};
            Perspectivity back_stage{center, *mid_rp, rp};
            std::array<PlanePoint, 3> src{a, b, c}, via{a1, b1, c1};
            if (!stage_pairs_exactly(sr, out_stage, src, via)) continue;
            if (!stage_pairs_exactly(sr, back_stage, via, src)) continue;
            if (to_skip > 0) {
              --to_skip;
              continue;
            }
            return ProjectivityConstruction{
                Projectivity{{out_stage, back_stage}}, center, mid, b1, c1,
                center};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<PlanePoint, PlanePoint>> marked_pairs(
    const Semiring& sr, const Perspectivity& p) {
  std::vector<std::pair<PlanePoint, PlanePoint>> pairs;
  std::vector<PlanePoint> targets = reps_of(p.target);
  for (const PlanePoint& x : reps_of(p.source)) {
    std::optional<PlanePoint> match;
    for (const PlanePoint& y : targets) {
      if (!tropically_collinear(sr, p.center, x, y)) continue;
      if (match)
        fail(Errc::DegenerateConfiguration,
             "marked correspondence is ambiguous");
      match = y;
    }
    if (!match)
      fail(Errc::DegenerateConfiguration,
           "marked point has no concurrent partner");
    pairs.emplace_back(x, *match);
  }
  return pairs;
}

PlanePoint marked_image(const Semiring& sr, const Projectivity& f,
                        const PlanePoint& x) {
  if (f.stages.empty())
    fail(Errc::PreconditionViolated, "projectivity has no stages");
  PlanePoint cur = x;
  for (const Perspectivity& stage : f.stages) {
    bool found = false;
    for (const auto& [src, dst] : marked_pairs(sr, stage)) {
      if (src == cur) {
        cur = dst;
        found = true;
        break;
      }
    }
    if (!found)
      fail(Errc::NotIncident, "point is not marked on the stage source");
  }
  return cur;
}

ProjectivityConstruction construct_projectivity(const Semiring& sr,
                                                const ReducedPencil& rp1,
                                                const ReducedPencil& rp2,
                                                std::size_t center_skip) {
  if (!rp1.complete() || !rp2.complete())
    fail(Errc::Incompatible, "construction needs one point on every ray");
  const TropLine& l1 = rp1.line;
  const TropLine& l2 = rp2.line;
  const PlanePoint a = *rp1.left, b = *rp1.down, c = *rp1.diag;
  const PlanePoint a2 = *rp2.left, b2 = *rp2.down, c2 = *rp2.diag;

  if (l1 == l2) {
    if (a == a2 && b == b2 && c == c2) {
      std::size_t to_skip = center_skip;
      if (auto id = try_identity(sr, rp1, to_skip)) return *id;
      fail(Errc::DegenerateConfiguration,
           "no valid self-correspondence found");
    }
    fail(Errc::Incompatible, "distinct correspondences on one line");
  }
  if (is_coaxial_lines(l1, l2))
    fail(Errc::Incompatible, "pencil lines are coaxial");

  // Candidate middle lines, all through rp2's left rep: the join of that
  // rep with rp1's diag rep first (the classical ruler construction), then the
  // one-parameter families of lines through the rep.
  std::vector<TropLine> base_mids;
  if (c != a2) base_mids.push_back(stable_line(sr, c, a2));
  {
    const int s = sr.flavor() == Flavor::MaxPlus ? 1 : -1;
    for (const Rat& t : dyadic_parameters()) {
      base_mids.push_back(line_from_vertex(sr, PlanePoint{a2.x + s * t, a2.y}));
      base_mids.push_back(line_from_vertex(sr, PlanePoint{a2.x, a2.y + s * t}));
      base_mids.push_back(
          line_from_vertex(sr, PlanePoint{a2.x - s * t, a2.y - s * t}));
    }
  }

  const TropLine join =
      a == a2 ? line_from_vertex(sr, a) : stable_line(sr, a, a2);

  std::size_t to_skip = center_skip;
  for (const PlanePoint& center : dyadic_candidates(sr, join)) {
    if (!off_line(sr, center, l1) || !off_line(sr, center, l2)) continue;
    bool center_succeeded = false;
    // Middle vertices riding on the joins of the other reps keep their
    // marks adjustable along an overlap ray.
    std::vector<TropLine> mids = base_mids;
    for (const PlanePoint& x : {b, c})
      for (const PlanePoint& w :
           vertices_on_line_through(sr, stable_line(sr, center, x), a2))
        mids.push_back(line_from_vertex(sr, w));
    for (const TropLine& mid : mids) {
      if (is_coaxial_lines(l1, mid) || is_coaxial_lines(mid, l2)) continue;
      if (!off_line(sr, center, mid)) continue;
      // Stage 1 carries the left rep onto rp2's left rep, which must be a
      // non-vertex mark of the middle line concurrent through the center.
      IncidenceResult a2_on_mid = incidence(sr, a2, mid);
      if (!a2_on_mid.incident || a2_on_mid.label == RayLabel::Vertex) continue;
      if (!tropically_collinear(sr, center, a, a2)) continue;

      for (const PlanePoint& b1 : mark_candidates(sr, center, b, mid)) {
        for (const PlanePoint& c1 : mark_candidates(sr, center, c, mid)) {
          auto mid_rp = bucket_triple(sr, mid, a2, b1, c1);
          if (!mid_rp) continue;
          Perspectivity stage1{center, rp1, *mid_rp};
          std::array<PlanePoint, 3> s1_src{a, b, c}, s1_dst{a2, b1, c1};
          if (!stage_pairs_exactly(sr, stage1, s1_src, s1_dst)) continue;

          // Stage 2 center: on the joins of the moved pairs where those are
          // determined; otherwise scan a family avoiding the target line.
          std::vector<PlanePoint> second_candidates;
          if (c1 != c2 && b1 != b2) {
            TropLine join_c = stable_line(sr, c1, c2);
            TropLine join_b = stable_line(sr, b1, b2);
            if (join_c == join_b)
              second_candidates = dyadic_candidates(sr, join_c);
            else
              second_candidates = {stable_intersect(sr, join_c, join_b)};
          } else if (c1 != c2) {
            second_candidates =
                dyadic_candidates(sr, stable_line(sr, c1, c2));
          } else if (b1 != b2) {
            second_candidates =
                dyadic_candidates(sr, stable_line(sr, b1, b2));
          } else {
            PlanePoint v2 = l2.vertex();
            for (const Rat& t : dyadic_parameters())
              second_candidates.push_back(PlanePoint{v2.x + t, v2.y - t});
          }
          for (const PlanePoint& second : second_candidates) {
            if (!off_line(sr, second, mid) || !off_line(sr, second, l2))
              continue;
            Perspectivity stage2{second, *mid_rp, rp2};
            std::array<PlanePoint, 3> s2_src{a2, b1, c1}, s2_dst{a2, b2, c2};
            if (!stage_pairs_exactly(sr, stage2, s2_src, s2_dst)) continue;
            if (to_skip > 0) {
              center_succeeded = true;
              break;
            }
            return ProjectivityConstruction{
                Projectivity{{stage1, stage2}}, center, mid, b1, c1, second};
          }
          if (center_succeeded) break;
        }
        if (center_succeeded) break;
      }
      if (center_succeeded) break;
    }
    if (center_succeeded) --to_skip;
  }
  fail(Errc::DegenerateConfiguration,
       "candidate centers exhausted without a valid construction");
}

PlanePoint apply_projectivity(const Semiring& sr, const Projectivity& f,
                              const PlanePoint& x) {
  if (f.stages.empty())
    fail(Errc::PreconditionViolated, "projectivity has no stages");
  PlanePoint cur = x;
  for (const Perspectivity& stage : f.stages)
    cur = perspectivity_apply(sr, stage.center, stage.source.line,
                              stage.target.line, cur);
  return cur;
}

bool projectivities_equivalent(const Semiring& sr, const Projectivity& f,
                               const Projectivity& g, const Pencil& pencil) {
  if (f.stages.empty() || g.stages.empty())
    fail(Errc::PreconditionViolated, "projectivity has no stages");
  if (f.stages.front().source.line != pencil.line ||
      g.stages.front().source.line != pencil.line)
    fail(Errc::NotIncident, "projectivity not defined on the pencil's line");
  if (f.stages.back().target.line != g.stages.back().target.line) return false;
  const TropLine& target = f.stages.back().target.line;
  for (const PlanePoint& pt : pencil.points) {
    PlanePoint im_f = apply_projectivity(sr, f, pt);
    PlanePoint im_g = apply_projectivity(sr, g, pt);
    if (im_f == im_g) continue;
    IncidenceResult rf = incidence(sr, im_f, target);
    IncidenceResult rg = incidence(sr, im_g, target);
    if (!rf.incident || !rg.incident) return false;
    // Distinct images must share a ray, i.e. agree as coaxiality classes.
    if (rf.label == RayLabel::Vertex || rf.label != rg.label) return false;
  }
  return true;
}

}  // namespace tropgeom
