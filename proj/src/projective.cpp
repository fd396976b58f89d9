#include "tropgeom/projective.hpp"

namespace tropgeom {

ProjPoint::ProjPoint(const Semiring& sr, const TropVector& v) {
  TropScalar dominant = TropScalar::zero();
  for (const TropScalar& s : v) dominant = sr.add(dominant, s);
  if (dominant.is_zero())
    fail(Errc::ZeroVector, "no finite coordinate: not a projective point");
  rep_ = vec_scale(sr, sr.div(TropScalar::one(), dominant), v);
}

ProjPoint canonicalize(const Semiring& sr, const TropVector& v) {
  return ProjPoint(sr, v);
}

bool proj_eq(const ProjPoint& p, const ProjPoint& q) {
  if (p.dim() != q.dim())
    fail(Errc::DimensionMismatch, "projective points of different dimension");
  return p == q;
}

}  // namespace tropgeom
