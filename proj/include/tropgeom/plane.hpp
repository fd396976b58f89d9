#pragma once

#include "tropgeom/scalar.hpp"

#include <utility>
#include <vector>

namespace tropgeom {

struct PlanePoint {
  Rat x;
  Rat y;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const PlanePoint& a, const PlanePoint& b) {
    return !(a == b);
  }
};

/// Where a point sits on a tropical line. Each ray is the locus where one
/// pair of the three terms of the line polynomial ties at the optimum; at
/// the vertex all three tie.
enum class RayLabel { Vertex, Left, Down, Diag };

const char* ray_label_name(RayLabel label);

/// A tropical line a*x + b*y + c with finite coefficients: the corner locus
/// of three half rays from the vertex (c-a, c-b). Coefficients are stored
/// canonically (dominant coefficient 0), so equality is projective equality
/// in the dual plane.
class TropLine {
 public:
  TropLine(const Semiring& sr, const Rat& a, const Rat& b, const Rat& c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  PlanePoint vertex() const { return PlanePoint{c_ - a_, c_ - b_}; }

  friend bool operator==(const TropLine& l, const TropLine& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  friend bool operator!=(const TropLine& l, const TropLine& m) {
    return !(l == m);
  }

 private:
  Rat a_, b_, c_;
};

struct IncidenceResult {
  bool incident = false;
  RayLabel label = RayLabel::Vertex;  // meaningful only when incident
};

/// Unit direction of a ray. (-1,0), (0,-1), (1,1) for MaxPlus; the order
/// dual negates them.
std::pair<int, int> ray_direction(const Semiring& sr, RayLabel label);

/// Throws DegenerateLine when a coefficient is the zero element.
TropLine line_from_coeffs(const Semiring& sr, const TropScalar& a,
                          const TropScalar& b, const TropScalar& c);

/// A point lies on the line iff the optimum of the three terms is attained
/// at least twice.
IncidenceResult incidence(const Semiring& sr, const PlanePoint& p,
                          const TropLine& line);

/// The stable line through two distinct points (tropical Cramer: the cross
/// product of the homogenized points). Contains both points; unique when
/// they are not coaxial, and has one of them as vertex when they are.
TropLine stable_line(const Semiring& sr, const PlanePoint& p,
                     const PlanePoint& q);

/// The stable intersection of two distinct lines (dual cross product on the
/// coefficient triples). Lies on both lines; the unique intersection point
/// when the lines are in general position.
PlanePoint stable_intersect(const Semiring& sr, const TropLine& l1,
                            const TropLine& l2);

/// True iff q - p is parallel to an axis direction, i.e. infinitely many
/// tropical lines contain both points.
bool is_coaxial_points(const PlanePoint& p, const PlanePoint& q);

/// Coaxiality of the vertices. Lines with equal vertices are coaxial by
/// convention (they are in fact identical).
bool is_coaxial_lines(const TropLine& l1, const TropLine& l2);

/// True iff the set-theoretic intersection of the two corner loci is a
/// single point, decided by exact ray-overlap analysis.
bool general_position(const Semiring& sr, const TropLine& l1,
                      const TropLine& l2);

/// (L, pts) is stable iff L is the unique line through the pts or one of the
/// pts is the vertex. Requires at least two points, all incident.
bool is_stable_marked_line(const Semiring& sr, const TropLine& line,
                           const std::vector<PlanePoint>& pts);

/// True iff some tropical line contains all three points: the 3x3 matrix of
/// homogenized rows is tropically singular.
bool tropically_collinear(const Semiring& sr, const PlanePoint& p,
                          const PlanePoint& q, const PlanePoint& r);

/// Representative points of the set-theoretic intersection of two distinct
/// lines: every isolated crossing, and for each overlap ray its corner plus
/// a few points along it. Deterministic order.
std::vector<PlanePoint> intersection_candidates(const Semiring& sr,
                                                const TropLine& l1,
                                                const TropLine& l2);

/// Parameter of an incident non-vertex point along its ray (> 0).
Rat ray_parameter(const Semiring& sr, const TropLine& line,
                  const PlanePoint& p, RayLabel label);

/// vertex + t * direction(label); t = 0 gives the vertex.
PlanePoint point_on_ray(const Semiring& sr, const TropLine& line,
                        RayLabel label, const Rat& t);

}  // namespace tropgeom
