#pragma once

#include "tropgeom/linalg.hpp"

#include <cstdint>

namespace tropgeom {

/// tdet of the 2x2 matrix with the two vectors as columns.
struct Bracket {
  TropScalar value;
};

struct CrossRatioResult {
  TropScalar value;  // numer / denom (classical subtraction)
  TropScalar numer;  // [a,c] * [b,d]
  TropScalar denom;  // [a,d] * [b,c]
};

Bracket bracket2(const Semiring& sr, const TropVector& a, const TropVector& b);

/// ([a,c][b,d]) / ([a,d][b,c]); throws ZeroDenominator when a denominator
/// bracket is the zero element.
CrossRatioResult cross_ratio(const Semiring& sr, const TropVector& a,
                             const TropVector& b, const TropVector& c,
                             const TropVector& d);

struct InvarianceEvidence {
  bool invariant = false;
  TropScalar original;
  TropScalar scaled;
};

/// Scales the quadruple by (la, lb, lc, ld) and compares the cross-ratios.
/// Always invariant; returns both values as evidence.
InvarianceEvidence check_scalar_invariance(
    const Semiring& sr, const TropVector& a, const TropVector& b,
    const TropVector& c, const TropVector& d, const TropScalar& la,
    const TropScalar& lb, const TropScalar& lc, const TropScalar& ld);

/// Matrix-vector action, restricted to a tropically nonsingular 2x2 matrix.
TropVector matrix_transform(const Semiring& sr, const TropMatrix& m,
                            const TropVector& v);

struct NoninvarianceWitness {
  TropMatrix m;
  TropVector a, b, c, d;
  TropScalar value_before;
  TropScalar value_after;
  std::uint64_t cases_tried = 0;
};

/// Seeded deterministic search for a quadruple whose cross-ratio changes
/// under a nonsingular matrix. Candidates are drawn from a fixed PRNG stream
/// over entries {zero, 0, 1, 2}; the first verified witness in stream order
/// is returned. Exhausting the budget throws BudgetExhausted.
NoninvarianceWitness find_noninvariance_witness(const Semiring& sr,
                                                std::uint64_t seed,
                                                std::uint64_t budget);

}  // namespace tropgeom
