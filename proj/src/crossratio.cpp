#include "tropgeom/crossratio.hpp"

#include <random>

namespace tropgeom {

namespace {

void require_len2(const TropVector& v) {
  if (v.size() != 2) fail(Errc::DimensionMismatch, "2-vector required");
}

}  // namespace

Bracket bracket2(const Semiring& sr, const TropVector& a,
                 const TropVector& b) {
  require_len2(a);
  require_len2(b);
  return Bracket{sr.add(sr.mul(a[0], b[1]), sr.mul(a[1], b[0]))};
}

CrossRatioResult cross_ratio(const Semiring& sr, const TropVector& a,
                             const TropVector& b, const TropVector& c,
                             const TropVector& d) {
  TropScalar ac = bracket2(sr, a, c).value;
  TropScalar bd = bracket2(sr, b, d).value;
  TropScalar ad = bracket2(sr, a, d).value;
  TropScalar bc = bracket2(sr, b, c).value;
  if (ad.is_zero() || bc.is_zero())
    fail(Errc::ZeroDenominator, "denominator bracket is the zero element");
  CrossRatioResult r;
  r.numer = sr.mul(ac, bd);
  r.denom = sr.mul(ad, bc);
  r.value = sr.div(r.numer, r.denom);
  return r;
}

InvarianceEvidence check_scalar_invariance(
    const Semiring& sr, const TropVector& a, const TropVector& b,
    const TropVector& c, const TropVector& d, const TropScalar& la,
    const TropScalar& lb, const TropScalar& lc, const TropScalar& ld) {
  InvarianceEvidence ev;
  ev.original = cross_ratio(sr, a, b, c, d).value;
  ev.scaled = cross_ratio(sr, vec_scale(sr, la, a), vec_scale(sr, lb, b),
                          vec_scale(sr, lc, c), vec_scale(sr, ld, d))
                  .value;
  ev.invariant = ev.original == ev.scaled;
  return ev;
}

TropVector matrix_transform(const Semiring& sr, const TropMatrix& m,
                            const TropVector& v) {
  if (m.rows != 2 || m.cols != 2)
    fail(Errc::DimensionMismatch, "2x2 matrix required");
  if (is_tropically_singular(sr, m))
    fail(Errc::SingularMatrix, "matrix is tropically singular");
  return mat_vec(sr, m, v);
}

NoninvarianceWitness find_noninvariance_witness(const Semiring& sr,
                                                std::uint64_t seed,
                                                std::uint64_t budget) {
  if (budget < 1) fail(Errc::PreconditionViolated, "budget must be positive");
  const TropScalar domain[4] = {TropScalar::zero(), TropScalar(0),
                                TropScalar(1), TropScalar(2)};
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return domain[rng() % 4]; };

  for (std::uint64_t n = 1; n <= budget; ++n) {
    TropMatrix m(2, 2);
    for (TropScalar& e : m.data) e = draw();
    TropVector vecs[4];
    bool vectors_ok = true;
    for (TropVector& v : vecs) {
      v = {draw(), draw()};
      if (is_theta(v)) vectors_ok = false;
    }
    if (!vectors_ok) continue;
    if (is_tropically_singular(sr, m)) continue;

    const TropVector &a = vecs[0], &b = vecs[1], &c = vecs[2], &d = vecs[3];
    TropScalar ad = bracket2(sr, a, d).value;
    TropScalar bc = bracket2(sr, b, c).value;
    if (ad.is_zero() || bc.is_zero()) continue;
    TropVector ta = mat_vec(sr, m, a), tb = mat_vec(sr, m, b),
               tc = mat_vec(sr, m, c), td = mat_vec(sr, m, d);
    TropScalar tad = bracket2(sr, ta, td).value;
    TropScalar tbc = bracket2(sr, tb, tc).value;
    if (tad.is_zero() || tbc.is_zero()) continue;

    TropScalar before = cross_ratio(sr, a, b, c, d).value;
    TropScalar after = cross_ratio(sr, ta, tb, tc, td).value;
    if (before != after) {
      NoninvarianceWitness w{m, a, b, c, d, before, after, n};
      return w;
    }
  }
  fail(Errc::BudgetExhausted, "no witness within the case budget");
}

}  // namespace tropgeom
