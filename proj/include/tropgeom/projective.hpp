#pragma once

#include "tropgeom/linalg.hpp"

namespace tropgeom {

/// A point of tropical projective space: the scaling class of a vector with
/// at least one finite coordinate, stored canonically. In the canonical
/// representative the +-dominant finite coordinate is 0 (the largest for
/// MaxPlus, the smallest for MinPlus).
class ProjPoint {
 public:
  ProjPoint(const Semiring& sr, const TropVector& v);

  const TropVector& rep() const { return rep_; }
  std::size_t dim() const { return rep_.size(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) {
    return !(a == b);
  }

 private:
  TropVector rep_;
};

/// Scales v so its dominant finite coordinate becomes 0. Throws ZeroVector
/// when every coordinate is the zero element.
ProjPoint canonicalize(const Semiring& sr, const TropVector& v);

bool proj_eq(const ProjPoint& p, const ProjPoint& q);

}  // namespace tropgeom
