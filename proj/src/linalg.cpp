#include "tropgeom/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace tropgeom {

TropVector TropMatrix::column(std::size_t j) const {
  TropVector c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

TropMatrix TropMatrix::from_columns(const std::vector<TropVector>& cols) {
  if (cols.empty()) fail(Errc::PreconditionViolated, "no columns");
  TropMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows)
      fail(Errc::DimensionMismatch, "ragged column list");
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

bool is_theta(const TropVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const TropScalar& s) { return s.is_zero(); });
}

static void require_same_dim(const TropVector& x, const TropVector& y) {
  if (x.size() != y.size())
    fail(Errc::DimensionMismatch, "vector dimensions differ");
}

TropVector vec_add(const Semiring& sr, const TropVector& x,
                   const TropVector& y) {
  require_same_dim(x, y);
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sr.add(x[i], y[i]);
  return out;
}

TropVector vec_scale(const Semiring& sr, const TropScalar& lambda,
                     const TropVector& x) {
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sr.mul(lambda, x[i]);
  return out;
}

TropVector combine(const Semiring& sr, const std::vector<TropVector>& gens,
                   const std::vector<TropScalar>& lambdas) {
  if (gens.size() != lambdas.size())
    fail(Errc::DimensionMismatch, "one coefficient per generator required");
  if (gens.empty()) fail(Errc::PreconditionViolated, "no generators");
  TropVector acc(gens[0].size(), TropScalar::zero());
  for (std::size_t i = 0; i < gens.size(); ++i)
    acc = vec_add(sr, acc, vec_scale(sr, lambdas[i], gens[i]));
  return acc;
}

TropVector mat_vec(const Semiring& sr, const TropMatrix& m,
                   const TropVector& x) {
  if (m.cols != x.size())
    fail(Errc::DimensionMismatch, "matrix-vector size mismatch");
  TropVector out(m.rows, TropScalar::zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out[i] = sr.add(out[i], sr.mul(m.at(i, j), x[j]));
  return out;
}

namespace {

// Principal coefficients for x against gens; no membership verdict yet.
// A theta generator leaves its coefficient unconstrained; we pick zero.
std::vector<TropScalar> principal_solution(const Semiring& sr,
                                           const TropVector& x,
                                           const std::vector<TropVector>& gens) {
  std::vector<TropScalar> lambdas;
  lambdas.reserve(gens.size());
  for (const TropVector& g : gens) {
    require_same_dim(x, g);
    std::optional<TropScalar> acc;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j].is_zero()) continue;
      TropScalar q = sr.div(x[j], g[j]);
      acc = acc ? sr.dual_add(*acc, q) : q;
    }
    lambdas.push_back(acc.value_or(TropScalar::zero()));
  }
  return lambdas;
}

SpanCertificate membership_allow_empty(const Semiring& sr, const TropVector& x,
                                       const std::vector<TropVector>& gens) {
  SpanCertificate cert;
  if (gens.empty()) {
    // The subsemimodule generated by the empty set is {theta}.
    cert.member = is_theta(x);
    return cert;
  }
  cert.coefficients = principal_solution(sr, x, gens);
  cert.member = combine(sr, gens, cert.coefficients) == x;
  return cert;
}

}  // namespace

SpanCertificate span_membership(const Semiring& sr, const TropVector& x,
                                const std::vector<TropVector>& gens) {
  if (gens.empty()) fail(Errc::PreconditionViolated, "gens must be nonempty");
  return membership_allow_empty(sr, x, gens);
}

IndependenceResult is_linearly_independent(const Semiring& sr,
                                           const std::vector<TropVector>& s) {
  if (s.empty()) fail(Errc::PreconditionViolated, "set must be nonempty");
  for (std::size_t i = 1; i < s.size(); ++i) require_same_dim(s[0], s[i]);
  IndependenceResult result;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<TropVector> others;
    others.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) others.push_back(s[j]);
    SpanCertificate cert = membership_allow_empty(sr, s[i], others);
    if (cert.member) {
      result.independent = false;
      result.dependent_index = i;
      result.certificate = std::move(cert);
      return result;
    }
  }
  return result;
}

std::vector<TropVector> minimal_generating_set(
    const Semiring& sr, const std::vector<TropVector>& gens) {
  if (gens.empty()) fail(Errc::PreconditionViolated, "gens must be nonempty");
  for (std::size_t i = 1; i < gens.size(); ++i)
    require_same_dim(gens[0], gens[i]);
  std::vector<TropVector> kept = gens;
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<TropVector> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      if (membership_allow_empty(sr, kept[i], others).member) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  return kept;
}

namespace {

void require_square(const TropMatrix& m) {
  if (m.rows != m.cols || m.rows == 0)
    fail(Errc::NotSquare, "square matrix with n >= 1 required");
}

// MinPlus reduces to MaxPlus by negating finite entries (order duality);
// keeps the assignment machinery single-flavored.
TropMatrix to_maxplus(const Semiring& sr, const TropMatrix& m) {
  if (sr.flavor() == Flavor::MaxPlus) return m;
  TropMatrix out = m;
  for (TropScalar& s : out.data)
    if (s.finite()) s = TropScalar(-s.value());
  return out;
}

TropScalar from_maxplus(const Semiring& sr, const TropScalar& s) {
  if (sr.flavor() == Flavor::MaxPlus || s.is_zero()) return s;
  return TropScalar(-s.value());
}

struct EnumerationStats {
  TropScalar best;  // zero when every permutation hits a zero entry
  std::size_t optimum_count = 0;
};

// Max-plus diagonal-product optimum over all permutations, with the exact
// number of permutations attaining it.
EnumerationStats enumerate_maxplus(const TropMatrix& m) {
  const std::size_t n = m.rows;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EnumerationStats stats;
  Semiring max_sr(Flavor::MaxPlus);
  do {
    TropScalar sum = TropScalar::one();
    for (std::size_t i = 0; i < n && sum.finite(); ++i)
      sum = max_sr.mul(sum, m.at(i, perm[i]));
    if (sum.is_zero()) continue;
    if (stats.best.is_zero() || sum.value() > stats.best.value()) {
      stats.best = sum;
      stats.optimum_count = 1;
    } else if (sum.value() == stats.best.value()) {
      ++stats.optimum_count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return stats;
}

struct AssignmentResult {
  TropScalar value;                    // zero when no finite matching exists
  std::vector<std::size_t> matching;   // row i -> column matching[i]
};

// Exact O(n^3) Hungarian on rational costs. Maximization is turned into
// minimization by negation; cells to avoid get a penalty large enough that
// any matching through one scores worse than every finite matching.
AssignmentResult solve_assignment_maxplus(
    const TropMatrix& m, const std::optional<std::pair<std::size_t, std::size_t>>&
                             forbidden_cell = std::nullopt) {
  const std::size_t n = m.rows;
  Rat abs_sum = 0;
  for (const TropScalar& s : m.data)
    if (s.finite()) abs_sum += abs(s.value());
  const Rat big = (abs_sum + 1) * Rat(static_cast<int>(n) + 2);
  const Rat inf = big * Rat(static_cast<int>(n) + 2) * 4;

  auto cost = [&](std::size_t i, std::size_t j) -> Rat {
    if (forbidden_cell && forbidden_cell->first == i &&
        forbidden_cell->second == j)
      return big;
    const TropScalar& s = m.at(i, j);
    return s.is_zero() ? big : Rat(-s.value());
  };

  // Potentials-based shortest augmenting path (rows 1..n, cols 1..n).
  std::vector<Rat> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      Rat delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rat cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentResult result;
  result.matching.assign(n, 0);
  Semiring max_sr(Flavor::MaxPlus);
  TropScalar total = TropScalar::one();
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t i = p[j] - 1;
    result.matching[i] = j - 1;
    if (forbidden_cell && forbidden_cell->first == i &&
        forbidden_cell->second == j - 1) {
      total = TropScalar::zero();
      break;
    }
    total = max_sr.mul(total, m.at(i, j - 1));
  }
  result.value = total;
  return result;
}

}  // namespace

TropScalar tdet_by_enumeration(const Semiring& sr, const TropMatrix& m) {
  require_square(m);
  return from_maxplus(sr, enumerate_maxplus(to_maxplus(sr, m)).best);
}

TropScalar tdet_by_assignment(const Semiring& sr, const TropMatrix& m) {
  require_square(m);
  return from_maxplus(sr, solve_assignment_maxplus(to_maxplus(sr, m)).value);
}

TropScalar tdet(const Semiring& sr, const TropMatrix& m) {
  return tdet_by_assignment(sr, m);
}

bool is_tropically_singular(const Semiring& sr, const TropMatrix& m) {
  require_square(m);
  const TropMatrix mx = to_maxplus(sr, m);
  if (m.rows <= 8) {
    EnumerationStats stats = enumerate_maxplus(mx);
    return stats.best.is_zero() || stats.optimum_count >= 2;
  }
  AssignmentResult base = solve_assignment_maxplus(mx);
  if (base.value.is_zero()) return true;
  // A second optimal permutation must avoid at least one cell of the first,
  // so the optimum is attained twice iff some single-cell ban keeps it.
  for (std::size_t i = 0; i < m.rows; ++i) {
    AssignmentResult banned = solve_assignment_maxplus(
        mx, std::make_pair(i, base.matching[i]));
    if (banned.value == base.value) return true;
  }
  return false;
}

bool is_monomial(const TropMatrix& m) {
  if (m.rows != m.cols || m.rows == 0) return false;
  std::vector<std::size_t> row_count(m.rows, 0), col_count(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j).finite()) {
        ++row_count[i];
        ++col_count[j];
      }
  auto is_one = [](std::size_t c) { return c == 1; };
  return std::all_of(row_count.begin(), row_count.end(), is_one) &&
         std::all_of(col_count.begin(), col_count.end(), is_one);
}

}  // namespace tropgeom
