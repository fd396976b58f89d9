#pragma once

#include "tropgeom/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropgeom {

/// A vector over the tropical semiring. The all-zero vector is the semimodule
/// identity theta.
using TropVector = std::vector<TropScalar>;

struct TropMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<TropScalar> data;  // row-major

  TropMatrix() = default;
  TropMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, TropScalar::zero()) {}

  TropScalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const TropScalar& at(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  TropVector column(std::size_t j) const;
  static TropMatrix from_columns(const std::vector<TropVector>& cols);

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

/// Witness for a span membership query: when member, the coefficients
/// reproduce the query vector exactly. The returned coefficients are always
/// the principal (coordinatewise greatest) candidate.
struct SpanCertificate {
  bool member = false;
  std::vector<TropScalar> coefficients;
};

struct IndependenceResult {
  bool independent = true;
  // Set when dependent: which element lies in the span of the others.
  std::optional<std::size_t> dependent_index;
  SpanCertificate certificate;
};

bool is_theta(const TropVector& v);

TropVector vec_add(const Semiring& sr, const TropVector& x,
                   const TropVector& y);
TropVector vec_scale(const Semiring& sr, const TropScalar& lambda,
                     const TropVector& x);

/// Linear combination of generators with the given coefficients.
TropVector combine(const Semiring& sr, const std::vector<TropVector>& gens,
                   const std::vector<TropScalar>& lambdas);

TropVector mat_vec(const Semiring& sr, const TropMatrix& m,
                   const TropVector& x);

/// Decides x in span(gens) by residuation: the principal solution
/// lambda_i = dual-fold over coordinates j with finite g_i[j] of x[j]/g_i[j]
/// solves the system iff any solution does.
SpanCertificate span_membership(const Semiring& sr, const TropVector& x,
                                const std::vector<TropVector>& gens);

IndependenceResult is_linearly_independent(const Semiring& sr,
                                           const std::vector<TropVector>& s);

/// Extracts a sublist generating the same subsemimodule in which no element
/// lies in the span of the others. Unique up to scaling and order.
std::vector<TropVector> minimal_generating_set(
    const Semiring& sr, const std::vector<TropVector>& gens);

/// Tropical determinant: the +-sum over permutations of the diagonal
/// products. Trusted oracle backend, cost n!.
TropScalar tdet_by_enumeration(const Semiring& sr, const TropMatrix& m);

/// Tropical determinant via an exact assignment solver, O(n^3).
TropScalar tdet_by_assignment(const Semiring& sr, const TropMatrix& m);

/// Production entry point (assignment backend).
TropScalar tdet(const Semiring& sr, const TropMatrix& m);

/// True iff tdet is the semiring zero or the optimum is attained by at least
/// two permutations. Counts optima exactly for n <= 8; beyond that re-solves
/// the assignment with each optimal cell forbidden.
bool is_tropically_singular(const Semiring& sr, const TropMatrix& m);

/// Exactly one finite entry in every row and every column: the invertible
/// elements of the tropical matrix semiring.
bool is_monomial(const TropMatrix& m);

}  // namespace tropgeom
