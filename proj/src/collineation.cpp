#include "tropgeom/collineation.hpp"

#include <algorithm>

namespace tropgeom {

MuAutomorphism::MuAutomorphism(Rat scale) : scale_(std::move(scale)) {
  if (scale_ <= 0)
    fail(Errc::PreconditionViolated,
         "automorphism scale must be a positive rational");
}

TropVector SemilinearMap::apply(const Semiring& sr, const TropVector& x) const {
  TropVector twisted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) twisted[i] = mu(x[i]);
  return mat_vec(sr, matrix, twisted);
}

ProjPoint CollineationOracle::operator()(const ProjPoint& p) const {
  if (p.dim() != dim_in_)
    fail(Errc::DimensionMismatch, "oracle input dimension mismatch");
  ProjPoint image = map_(p);
  if (image.dim() != dim_out_)
    fail(Errc::DimensionMismatch, "oracle output dimension mismatch");
  return image;
}

bool is_semilinear(const Semiring& sr, const VectorMap& f,
                   const MuAutomorphism& mu,
                   const std::vector<SemilinearProbe>& probes) {
  for (const SemilinearProbe& probe : probes) {
    if (probe.x.size() != probe.y.size())
      fail(Errc::DimensionMismatch, "probe vectors of different dimension");
    TropVector fx = f(probe.x);
    if (f(vec_add(sr, probe.x, probe.y)) != vec_add(sr, fx, f(probe.y)))
      return false;
    if (f(vec_scale(sr, probe.alpha, probe.x)) !=
        vec_scale(sr, mu(probe.alpha), fx))
      return false;
  }
  return true;
}

bool is_semilinear(const Semiring& sr, const SemilinearMap& f,
                   const std::vector<SemilinearProbe>& probes) {
  return is_semilinear(
      sr, [&](const TropVector& x) { return f.apply(sr, x); }, f.mu, probes);
}

bool preserves_coaxiality(
    const Semiring& sr, const CollineationOracle& sigma,
    const std::vector<std::array<ProjPoint, 3>>& triples) {
  for (const auto& triple : triples)
    if (!span_membership(sr, triple[0].rep(),
                         {triple[1].rep(), triple[2].rep()})
             .member)
      fail(Errc::PreconditionViolated, "probe triple is not coaxial");
  for (const auto& triple : triples) {
    ProjPoint image0 = sigma(triple[0]);
    ProjPoint image1 = sigma(triple[1]);
    ProjPoint image2 = sigma(triple[2]);
    if (!span_membership(sr, image0.rep(), {image1.rep(), image2.rep()})
             .member)
      return false;
  }
  return true;
}

CollineationOracle induced_collineation(const Semiring& sr,
                                        const SemilinearMap& f) {
  if (!is_monomial(f.matrix))
    fail(Errc::NotInvertible,
         "only monomial matrices are invertible over the tropical semiring");
  SemilinearMap map = f;
  Semiring ring = sr;
  return CollineationOracle(
      f.matrix.cols, f.matrix.rows, [map, ring](const ProjPoint& p) {
        return canonicalize(ring, map.apply(ring, p.rep()));
      });
}

namespace {

enum class MatchStatus { Unique, None, Ambiguous };

struct MatchResult {
  MatchStatus status = MatchStatus::None;
  TropScalar gamma;
};

bool supp_subset(const TropVector& a, const TropVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].finite() && !b[i].finite()) return false;
  return true;
}

// Solves class(u + gamma w) = target for gamma. Isolated solutions are
// always among the balanced candidates (u_k - t_k) + (t_j - w_j); an
// unbounded tail of solutions exists exactly when one summand's class equals
// the target and its support contains the other's.
MatchResult match_projective_coefficient(const Semiring& sr,
                                         const TropVector& u,
                                         const TropVector& w,
                                         const ProjPoint& target) {
  const TropVector& t = target.rep();
  if (u.size() != t.size() || w.size() != t.size())
    fail(Errc::DimensionMismatch, "matching vectors of different dimension");

  auto class_matches = [&](const TropScalar& gamma) {
    TropVector m = vec_add(sr, u, vec_scale(sr, gamma, w));
    if (is_theta(m)) return false;
    return canonicalize(sr, m) == target;
  };

  bool u_matches = !is_theta(u) && canonicalize(sr, u) == target;
  bool w_matches = !is_theta(w) && canonicalize(sr, w) == target;
  if ((u_matches && supp_subset(w, u)) || (w_matches && supp_subset(u, w)))
    return {MatchStatus::Ambiguous, {}};

  std::vector<TropScalar> solutions;
  auto consider = [&](const TropScalar& gamma) {
    if (std::find(solutions.begin(), solutions.end(), gamma) !=
        solutions.end())
      return;
    if (class_matches(gamma)) solutions.push_back(gamma);
  };
  consider(TropScalar::zero());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u[k].finite() || !t[k].finite()) continue;
    Rat delta = u[k].value() - t[k].value();
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!w[j].finite() || !t[j].finite()) continue;
      consider(TropScalar(delta + t[j].value() - w[j].value()));
    }
  }
  if (solutions.empty()) return {MatchStatus::None, {}};
  if (solutions.size() > 1) return {MatchStatus::Ambiguous, {}};
  return {MatchStatus::Unique, solutions.front()};
}

TropVector unit_vector(std::size_t n, std::size_t i) {
  TropVector e(n, TropScalar::zero());
  e[i] = TropScalar::one();
  return e;
}

}  // namespace

SemilinearMap ReconstructionReport::to_map() const {
  if (!mu_scale)
    fail(Errc::NoSolution, "no consistent scalar automorphism was fitted");
  return SemilinearMap{TropMatrix::from_columns(basis_images),
                       MuAutomorphism(*mu_scale)};
}

ReconstructionReport reconstruct_semilinear(
    const Semiring& sr, const CollineationOracle& sigma, std::size_t n,
    const std::vector<TropScalar>& scalar_samples,
    const TropScalar& first_rep_scale) {
  if (n < 3)
    fail(Errc::PreconditionViolated, "reconstruction needs dimension >= 3");
  if (sigma.dim_in() != n || sigma.dim_out() != n)
    fail(Errc::DimensionMismatch, "oracle dimensions do not match n");
  if (first_rep_scale.is_zero())
    fail(Errc::PreconditionViolated, "representative scale must be a unit");

  ReconstructionReport report;
  // The image representative of <e_1> is the one arbitrary choice; any
  // other choice shifts the whole result by a global unit.
  const TropVector v1 = vec_scale(
      sr, first_rep_scale, sigma(canonicalize(sr, unit_vector(n, 0))).rep());
  report.basis_images.push_back(v1);

  for (std::size_t i = 1; i < n; ++i) {
    TropVector w = sigma(canonicalize(sr, unit_vector(n, i))).rep();
    ProjPoint target = sigma(canonicalize(
        sr, vec_add(sr, unit_vector(n, 0), unit_vector(n, i))));
    MatchResult m = match_projective_coefficient(sr, v1, w, target);
    if (m.status == MatchStatus::None)
      fail(Errc::NoSolution,
           "sigma<e1+ei> misses the span of the image points: sigma is not "
           "induced by a semi-linear map");
    if (m.status == MatchStatus::Ambiguous)
      fail(Errc::AmbiguousSolution, "basis matching is degenerate");
    if (m.gamma.is_zero())
      fail(Errc::NoSolution, "sigma<e1+ei> equals sigma<e1>: not injective");
    report.gammas.push_back(m.gamma);
    report.basis_images.push_back(vec_scale(sr, m.gamma, w));
  }

  bool cross_ok = true;
  auto probe_mu = [&](const TropScalar& c) -> TropScalar {
    std::optional<TropScalar> value;
    bool none_seen = false;
    for (std::size_t i = 1; i < n; ++i) {
      ProjPoint target = sigma(canonicalize(
          sr, vec_add(sr, unit_vector(n, 0),
                      vec_scale(sr, c, unit_vector(n, i)))));
      MatchResult m =
          match_projective_coefficient(sr, v1, report.basis_images[i], target);
      if (m.status == MatchStatus::Unique) {
        if (value && *value != m.gamma) cross_ok = false;
        value = m.gamma;
      } else if (m.status == MatchStatus::None) {
        none_seen = true;
      }
      // Ambiguous probes fall through to the next index.
    }
    if (!value) {
      if (none_seen)
        fail(Errc::NoSolution, "mu probe has no solution at any index");
      fail(Errc::AmbiguousSolution, "mu probe is degenerate at every index");
    }
    if (none_seen) cross_ok = false;
    return *value;
  };

  std::vector<TropScalar> samples{TropScalar::zero(), TropScalar::one()};
  for (const TropScalar& c : scalar_samples)
    if (std::find(samples.begin(), samples.end(), c) == samples.end())
      samples.push_back(c);

  auto mu_value = [&](const TropScalar& c) -> TropScalar {
    for (const auto& [key, val] : report.mu_table)
      if (key == c) return val;
    TropScalar val = probe_mu(c);
    report.mu_table.emplace_back(c, val);
    return val;
  };

  for (const TropScalar& c : samples) mu_value(c);

  report.mu_zero_ok = mu_value(TropScalar::zero()).is_zero();
  report.mu_one_ok = mu_value(TropScalar::one()) == TropScalar::one();

  report.mu_additive_ok = true;
  report.mu_multiplicative_ok = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const TropScalar &c = samples[i], &d = samples[j];
      if (mu_value(sr.add(c, d)) != sr.add(mu_value(c), mu_value(d)))
        report.mu_additive_ok = false;
      if (mu_value(sr.mul(c, d)) != sr.mul(mu_value(c), mu_value(d)))
        report.mu_multiplicative_ok = false;
    }
  }
  report.mu_cross_consistent = cross_ok;

  // Fit mu(c) = s*c when every tabulated sample agrees on one positive s.
  bool fit_ok = report.mu_zero_ok && report.mu_one_ok;
  std::optional<Rat> s;
  for (const auto& [c, v] : report.mu_table) {
    if (!fit_ok) break;
    if (c.is_zero() || c.value() == 0) continue;
    if (!v.finite()) {
      fit_ok = false;
      break;
    }
    Rat ratio = v.value() / c.value();
    if (ratio <= 0 || (s && *s != ratio)) {
      fit_ok = false;
      break;
    }
    s = ratio;
  }
  if (fit_ok) report.mu_scale = s.value_or(Rat(1));
  return report;
}

Tp2Report tp2_automorphism_suite(const Semiring& sr) {
  constexpr int kRange = 2;
  std::vector<ProjPoint> classes;
  for (int x = -kRange; x <= kRange; ++x)
    for (int y = -kRange; y <= kRange; ++y)
      for (int z = -kRange; z <= kRange; ++z) {
        ProjPoint p = canonicalize(
            sr, TropVector{TropScalar(x), TropScalar(y), TropScalar(z)});
        if (std::find(classes.begin(), classes.end(), p) == classes.end())
          classes.push_back(p);
      }

  std::vector<std::array<ProjPoint, 3>> coaxial;
  for (std::size_t j = 0; j < classes.size(); ++j)
    for (std::size_t k = j + 1; k < classes.size(); ++k) {
      std::vector<TropVector> gens{classes[j].rep(), classes[k].rep()};
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i == j || i == k) continue;
        if (span_membership(sr, classes[i].rep(), gens).member)
          coaxial.push_back({classes[i], classes[j], classes[k]});
      }
    }

  Tp2Report report;
  report.classes = classes.size();
  report.coaxial_triples = coaxial.size();

  std::array<std::size_t, 3> perm{0, 1, 2};
  std::vector<TropScalar> samples{TropScalar(1), TropScalar(2), TropScalar(-1),
                                  TropScalar(Rat(1, 2))};
  report.all_pass = true;
  do {
    SemilinearMap f{TropMatrix(3, 3), MuAutomorphism()};
    for (std::size_t i = 0; i < 3; ++i)
      f.matrix.at(perm[i], i) = TropScalar::one();
    CollineationOracle sigma = induced_collineation(sr, f);

    Tp2PermutationResult result;
    result.perm = perm;
    result.coaxiality_ok = preserves_coaxiality(sr, sigma, coaxial);

    try {
      ReconstructionReport rec = reconstruct_semilinear(sr, sigma, 3, samples);
      bool ok = rec.mu_all_ok() && rec.mu_scale && *rec.mu_scale == 1 &&
                is_monomial(TropMatrix::from_columns(rec.basis_images));
      if (ok) {
        CollineationOracle round = induced_collineation(sr, rec.to_map());
        for (const ProjPoint& p : classes)
          if (!(round(p) == sigma(p))) {
            ok = false;
            break;
          }
      }
      result.reconstruction_ok = ok;
    } catch (const TropError&) {
      result.reconstruction_ok = false;
    }

    report.all_pass =
        report.all_pass && result.coaxiality_ok && result.reconstruction_ok;
    report.permutations.push_back(result);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

}  // namespace tropgeom
