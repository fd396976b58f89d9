#pragma once

#include "tropgeom/plane.hpp"

#include <optional>
#include <vector>

namespace tropgeom {

/// A tropical line with marked non-vertex points, bucketed by ray:
/// p on the diagonal ray, q on the left ray, r on the down ray.
struct Pencil {
  TropLine line;
  std::vector<PlanePoint> points;
  std::size_t p = 0;  // diag
  std::size_t q = 0;  // left
  std::size_t r = 0;  // down
};

/// One representative per coaxiality class of a pencil: at most one marked
/// point on each ray.
struct ReducedPencil {
  TropLine line;
  std::optional<PlanePoint> diag;
  std::optional<PlanePoint> left;
  std::optional<PlanePoint> down;

  bool complete() const {
    return diag.has_value() && left.has_value() && down.has_value();
  }
};

/// Point correspondence between two reduced pencils through a center. The
/// marked representatives correspond pairwise: each source rep and its
/// target rep span a tropical line through the center. Unmarked points are
/// carried by the canonical stable maps (see perspectivity_apply).
struct Perspectivity {
  PlanePoint center;
  ReducedPencil source;
  ReducedPencil target;
};

/// A chain of perspectivities; consecutive stages share the middle line.
struct Projectivity {
  std::vector<Perspectivity> stages;
};

Pencil make_pencil(const Semiring& sr, const TropLine& line,
                   const std::vector<PlanePoint>& pts);

/// Picks the representative nearest the vertex on each nonempty ray.
ReducedPencil reduce_pencil(const Semiring& sr, const Pencil& pencil);

/// Non-coaxial lines with componentwise equal ray counts.
bool is_compatible(const Semiring& sr, const Pencil& p1, const Pencil& p2);

/// Validates the perspectivity invariants: center off both lines, lines
/// non-coaxial.
Perspectivity make_perspectivity(const Semiring& sr, const PlanePoint& center,
                                 const ReducedPencil& source,
                                 const ReducedPencil& target);

PlanePoint perspectivity_apply(const Semiring& sr, const PlanePoint& center,
                               const TropLine& src, const TropLine& dst,
                               const PlanePoint& x);

/// The marked correspondence of a perspectivity: each source rep paired with
/// the unique target rep concurrent with it through the center. Throws
/// DegenerateConfiguration when the marks do not pair off bijectively.
std::vector<std::pair<PlanePoint, PlanePoint>> marked_pairs(
    const Semiring& sr, const Perspectivity& p);

/// Follows a marked source point of the first stage through every stage's
/// marked correspondence. Throws NotIncident when x is not a marked point.
PlanePoint marked_image(const Semiring& sr, const Projectivity& f,
                        const PlanePoint& x);

/// Two-stage construction of the projectivity carrying the source triple
/// (left, down, diag) of rp1 onto that of rp2 through marked
/// correspondences. The middle line passes through rp2's left rep, so the
/// first stage pins the left pair; the middle marks of the other two pairs
/// ride concurrency with the stage centers, and every marked pairing is
/// certified by an exact collinearity test before returning.
struct ProjectivityConstruction {
  Projectivity projectivity;
  PlanePoint stage1_center;      // on the line joining the left reps
  TropLine intermediate_line;    // through rp2's left rep
  PlanePoint transported_down;   // middle mark of the down pair
  PlanePoint transported_diag;   // middle mark of the diag pair
  PlanePoint stage2_center;
};

/// `center_skip` skips that many valid stage-1 center candidates, yielding an
/// equivalent but distinct construction. Throws Incompatible or
/// DegenerateConfiguration.
ProjectivityConstruction construct_projectivity(const Semiring& sr,
                                                const ReducedPencil& rp1,
                                                const ReducedPencil& rp2,
                                                std::size_t center_skip = 0);

PlanePoint apply_projectivity(const Semiring& sr, const Projectivity& f,
                              const PlanePoint& x);

/// Classwise agreement: for every marked point of the pencil the two images
/// are equal or lie on the same ray of the common target line.
bool projectivities_equivalent(const Semiring& sr, const Projectivity& f,
                               const Projectivity& g, const Pencil& pencil);

}  // namespace tropgeom
