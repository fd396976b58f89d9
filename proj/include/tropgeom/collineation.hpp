#pragma once

#include "tropgeom/projective.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace tropgeom {

/// Order-preserving semiring automorphism of the tropical semiring that is
/// exactly representable: finite c -> scale * c (classical product) with
/// positive rational scale; the zero element is fixed. scale = 1 is the
/// identity.
class MuAutomorphism {
 public:
  MuAutomorphism() : scale_(1) {}
  explicit MuAutomorphism(Rat scale);

  const Rat& scale() const { return scale_; }
  bool is_identity() const { return scale_ == 1; }

  TropScalar operator()(const TropScalar& c) const {
    if (c.is_zero()) return c;
    return TropScalar(scale_ * c.value());
  }

 private:
  Rat scale_;
};

/// lambda(x) = matrix * mu(x), columns of the matrix being the images of the
/// basis units: additive, and lambda(alpha x) = mu(alpha) lambda(x).
struct SemilinearMap {
  TropMatrix matrix;
  MuAutomorphism mu;

  TropVector apply(const Semiring& sr, const TropVector& x) const;
};

/// A pointwise queryable map between projective spaces. Pure; safe to call
/// concurrently.
class CollineationOracle {
 public:
  using PointMap = std::function<ProjPoint(const ProjPoint&)>;

  CollineationOracle(std::size_t dim_in, std::size_t dim_out, PointMap map)
      : dim_in_(dim_in), dim_out_(dim_out), map_(std::move(map)) {}

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }

  ProjPoint operator()(const ProjPoint& p) const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  PointMap map_;
};

struct SemilinearProbe {
  TropVector x;
  TropVector y;
  TropScalar alpha;
};

using VectorMap = std::function<TropVector(const TropVector&)>;

/// Checks both semi-linearity axioms of f against the claimed mu, exactly,
/// on every probe.
bool is_semilinear(const Semiring& sr, const VectorMap& f,
                   const MuAutomorphism& mu,
                   const std::vector<SemilinearProbe>& probes);
bool is_semilinear(const Semiring& sr, const SemilinearMap& f,
                   const std::vector<SemilinearProbe>& probes);

/// Each triple must satisfy L1 in span{L2, L3} on representatives (else
/// PreconditionViolated); returns whether every image triple does too.
bool preserves_coaxiality(const Semiring& sr, const CollineationOracle& sigma,
                          const std::vector<std::array<ProjPoint, 3>>& triples);

/// [x] -> [lambda(x)]; well defined on classes since scalars pass through
/// lambda as units. Requires a monomial matrix (NotInvertible otherwise).
CollineationOracle induced_collineation(const Semiring& sr,
                                        const SemilinearMap& f);

struct ReconstructionReport {
  std::vector<TropVector> basis_images;  // v'_1 .. v'_n
  std::vector<TropScalar> gammas;        // matching solutions for i >= 2
  std::vector<std::pair<TropScalar, TropScalar>> mu_table;
  std::optional<Rat> mu_scale;  // fitted when all samples agree on one
  bool mu_zero_ok = false;
  bool mu_one_ok = false;
  bool mu_additive_ok = false;
  bool mu_multiplicative_ok = false;
  bool mu_cross_consistent = false;

  bool mu_all_ok() const {
    return mu_zero_ok && mu_one_ok && mu_additive_ok && mu_multiplicative_ok &&
           mu_cross_consistent;
  }

  /// The recovered map (columns = basis images, fitted mu). Throws
  /// NoSolution when no consistent mu was fitted.
  SemilinearMap to_map() const;
};

/// Recovers basis images and the scalar automorphism from a collineation
/// assumed to be induced by some semi-linear map, following the constructive
/// proof: fix a representative for the image of <e_1> (the one arbitrary
/// choice; `first_rep_scale` selects it within its class), then solve the
/// one-parameter matchings sigma<e_1 + e_i> = <v'_1 + gamma_i v'_i> and
/// sigma<e_1 + c e_i> = <v'_1 + mu(c) v'_i>. The zero and one scalars are
/// always sampled. Throws NoSolution (refutation: sigma is not induced by a
/// semi-linear map) or AmbiguousSolution (degenerate probes at every index).
ReconstructionReport reconstruct_semilinear(
    const Semiring& sr, const CollineationOracle& sigma, std::size_t n,
    const std::vector<TropScalar>& scalar_samples,
    const TropScalar& first_rep_scale = TropScalar::one());

struct Tp2PermutationResult {
  std::array<std::size_t, 3> perm;
  bool coaxiality_ok = false;
  bool reconstruction_ok = false;
};

struct Tp2Report {
  std::vector<Tp2PermutationResult> permutations;
  std::size_t classes = 0;
  std::size_t coaxial_triples = 0;
  bool all_pass = false;
};

/// Checks all six coordinate permutations of the projective plane on the
/// exhaustive integer grid [-2,2]^3: coaxiality preservation, and
/// decomposition through reconstruct_semilinear into a monomial map with
/// identity mu.
Tp2Report tp2_automorphism_suite(const Semiring& sr);

}  // namespace tropgeom
