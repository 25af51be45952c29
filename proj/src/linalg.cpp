#include "relkit/linalg.hpp"

#include "relkit/errors.hpp"

namespace relkit {

Rref rref(const RatMatrix& m) {
  std::vector<RatVector> a = m.rows();
  const std::size_t ncols = m.ncols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return Rref{RatMatrix(std::move(a), ncols), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  const Rref e = rref(m);
  const std::size_t n = m.ncols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> row_basis(const RatMatrix& m) { return rref(m).reduced.rows(); }

std::optional<LinearSolution> solve_linear_system(const RatMatrix& E, const RatVector& d) {
  require_dim(d.size(), E.nrows(), "right-hand side");
  const std::size_t n = E.ncols();
  RatMatrix aug(n + 1);
  for (std::size_t i = 0; i < E.nrows(); ++i) {
    RatVector r = E.row(i);
    r.push_back(d[i]);
    aug.append_row(std::move(r));
  }
  const Rref e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.particular = zeros(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    sol.nullspace_basis.push_back(std::move(v));
  }
  return sol;
}

RatVector project_onto_span(const RatVector& v, const std::vector<RatVector>& basis) {
  if (basis.empty()) return zeros(v.size());
  // Normal equations G c = B^T v with Gram matrix G.
  const std::size_t k = basis.size();
  RatMatrix gram(k, k);
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], v);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  const auto sol = solve_linear_system(gram, rhs);
  if (!sol || !sol->nullspace_basis.empty()) throw InputError("projection basis is not linearly independent");
  RatVector out = zeros(v.size());
  for (std::size_t i = 0; i < k; ++i) out = out + sol->particular[i] * basis[i];
  return out;
}

bool in_span(const RatVector& v, const std::vector<RatVector>& basis) {
  if (basis.empty()) return is_zero(v);
  RatMatrix m(basis, v.size());
  const std::size_t r0 = rank(m);
  m.append_row(v);
  return rank(m) == r0;
}

}  // namespace relkit
