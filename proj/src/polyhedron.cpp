#include "relkit/polyhedron.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "relkit/errors.hpp"
#include "relkit/linalg.hpp"
#include "relkit/lp.hpp"

namespace relkit {

HPolyhedron::HPolyhedron(RatMatrix A_, RatVector b_, RatMatrix E_, RatVector d_, std::size_t dim_)
    : A(std::move(A_)), b(std::move(b_)), E(std::move(E_)), d(std::move(d_)), dim(dim_) {
  validate();
}

HPolyhedron HPolyhedron::empty_set(std::size_t n) {
  HPolyhedron P(n);
  P.add_le(zeros(n), Rational(-1));
  return P;
}

HPolyhedron HPolyhedron::point(const RatVector& p) {
  HPolyhedron P(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) P.add_eq(unit_vector(p.size(), i), p[i]);
  return P;
}

HPolyhedron HPolyhedron::box(const RatVector& lo, const RatVector& hi) {
  require_dim(hi.size(), lo.size(), "box upper bounds");
  const std::size_t n = lo.size();
  HPolyhedron P(n);
  for (std::size_t i = 0; i < n; ++i) {
    P.add_le(-unit_vector(n, i), -lo[i]);
    P.add_le(unit_vector(n, i), hi[i]);
  }
  return P;
}

void HPolyhedron::add_le(RatVector row, Rational rhs) {
  A.append_row(std::move(row));
  b.push_back(std::move(rhs));
}

void HPolyhedron::add_eq(RatVector row, Rational rhs) {
  E.append_row(std::move(row));
  d.push_back(std::move(rhs));
}

void HPolyhedron::validate() const {
  require_dim(A.ncols(), dim, "inequality matrix width");
  require_dim(E.ncols(), dim, "equality matrix width");
  require_dim(b.size(), A.nrows(), "b");
  require_dim(d.size(), E.nrows(), "d");
}

bool AffineFlat::contains(const RatVector& x) const {
  require_dim(x.size(), dim, "point");
  return in_span(x - basepoint, directions);
}

bool AffineFlat::is_linear_subspace() const { return contains(zeros(dim)); }

HPolyhedron AffineFlat::as_polyhedron() const {
  HPolyhedron P(dim);
  const auto normals = directions.empty() ? RatMatrix::identity(dim).rows()
                                          : nullspace(RatMatrix(directions, dim));
  for (const auto& nv : normals) P.add_eq(nv, dot(nv, basepoint));
  return P;
}

namespace {

LPProblem feasibility_problem(const HPolyhedron& P) {
  LPProblem lp;
  lp.objective = zeros(P.dim);
  lp.A = P.A;
  lp.b = P.b;
  lp.E = P.E;
  lp.d = P.d;
  return lp;
}

// Adds `row` to an echelon basis if it is independent of it.
bool extend_basis(std::vector<RatVector>& basis, std::vector<std::size_t>& pivots, RatVector row) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational f = row[pivots[k]];
    if (sgn(f) != 0) row = row - f * basis[k];
  }
  std::size_t p = 0;
  while (p < row.size() && sgn(row[p]) == 0) ++p;
  if (p == row.size()) return false;
  row = (1 / row[p]) * row;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational f = basis[k][p];
    if (sgn(f) != 0) basis[k] = basis[k] - f * row;
  }
  basis.push_back(std::move(row));
  pivots.push_back(p);
  return true;
}

struct DDRay {
  RatVector u;
  std::vector<std::size_t> active;  // processed rows with G_i u = 0, sorted
};

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

// Extreme rays of the pointed cone {u : G u <= 0}; G has full column rank.
std::vector<RatVector> double_description(const RatMatrix& G) {
  const std::size_t rho = G.ncols();
  if (rho == 0) return {};

  std::vector<std::size_t> initial;
  {
    std::vector<RatVector> basis;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < G.nrows() && initial.size() < rho; ++i) {
      if (extend_basis(basis, piv, G.row(i))) initial.push_back(i);
    }
  }
  if (initial.size() != rho) throw std::logic_error("double description: matrix lacks full column rank");

  // Rays of the simplicial cone {G_S u <= 0}: G_S u_j = -e_j.
  std::vector<DDRay> rays;
  {
    RatMatrix GS(rho);
    for (auto i : initial) GS.append_row(G.row(i));
    for (std::size_t j = 0; j < rho; ++j) {
      auto sol = solve_linear_system(GS, -unit_vector(rho, j));
      DDRay r{primitive(sol->particular), {}};
      for (std::size_t k = 0; k < rho; ++k)
        if (k != j) r.active.push_back(initial[k]);
      std::sort(r.active.begin(), r.active.end());
      rays.push_back(std::move(r));
    }
  }

  std::vector<bool> in_initial(G.nrows(), false);
  for (auto i : initial) in_initial[i] = true;

  auto adjacent = [&](const DDRay& a, const DDRay& b) {
    std::vector<std::size_t> common;
    std::set_intersection(a.active.begin(), a.active.end(), b.active.begin(), b.active.end(),
                          std::back_inserter(common));
    if (rho < 2 || common.size() + 2 < rho) return false;
    RatMatrix sub(rho);
    for (auto i : common) sub.append_row(G.row(i));
    return rank(sub) == rho - 2;
  };

  for (std::size_t h = 0; h < G.nrows(); ++h) {
    if (in_initial[h]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(G.row(h), rays[r].u);
      const int s = sgn(val[r]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    std::vector<DDRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(val[r]) > 0) continue;
      DDRay kept = rays[r];
      if (sgn(val[r]) == 0) insert_sorted(kept.active, h);
      next.push_back(std::move(kept));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        if (!adjacent(rays[p], rays[q])) continue;
        DDRay fresh;
        fresh.u = primitive(val[p] * rays[q].u - val[q] * rays[p].u);
        std::set_intersection(rays[p].active.begin(), rays[p].active.end(), rays[q].active.begin(),
                              rays[q].active.end(), std::back_inserter(fresh.active));
        insert_sorted(fresh.active, h);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.u));
  return out;
}

RatVector combine(const std::vector<RatVector>& basis, const RatVector& coeffs, std::size_t dim) {
  RatVector y = zeros(dim);
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (sgn(coeffs[c]) != 0) y = y + coeffs[c] * basis[c];
  return y;
}

// Sign-normalizes a lineality direction: primitive, first nonzero positive.
RatVector normalize_line(const RatVector& v) {
  RatVector p = primitive(v);
  for (const auto& x : p) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0) p = -p;
    break;
  }
  return p;
}

void sort_unique(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

RatVector head(const RatVector& v, std::size_t n) { return RatVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }

}  // namespace

ConeGenerators cone_generators(const RatMatrix& ineq, const RatMatrix& eq) {
  const std::size_t D = ineq.ncols();
  require_dim(eq.ncols(), D, "equality block width");

  const std::vector<RatVector> N = eq.empty() ? RatMatrix::identity(D).rows() : nullspace(eq);
  const std::size_t k = N.size();
  if (k == 0) return {};

  RatMatrix Mz(ineq.nrows(), k);
  for (std::size_t i = 0; i < ineq.nrows(); ++i)
    for (std::size_t c = 0; c < k; ++c) Mz(i, c) = dot(ineq.row(i), N[c]);

  const std::vector<RatVector> lineality_z = nullspace(Mz);
  const std::vector<RatVector> W = row_basis(Mz);
  const std::size_t rho = W.size();

  RatMatrix G(ineq.nrows(), rho);
  for (std::size_t i = 0; i < ineq.nrows(); ++i)
    for (std::size_t c = 0; c < rho; ++c) G(i, c) = dot(Mz.row(i), W[c]);

  ConeGenerators out;
  for (const auto& u : double_description(G)) {
    out.extreme_rays.push_back(primitive(combine(N, combine(W, u, k), D)));
  }
  for (const auto& l : lineality_z) out.lineality.push_back(normalize_line(combine(N, l, D)));
  return out;
}

bool contains(const HPolyhedron& P, const RatVector& x) {
  require_dim(x.size(), P.dim, "point");
  for (std::size_t i = 0; i < P.A.nrows(); ++i)
    if (dot(P.A.row(i), x) > P.b[i]) return false;
  for (std::size_t i = 0; i < P.E.nrows(); ++i)
    if (dot(P.E.row(i), x) != P.d[i]) return false;
  return true;
}

bool in_recession_cone(const HPolyhedron& P, const RatVector& r) {
  require_dim(r.size(), P.dim, "direction");
  for (std::size_t i = 0; i < P.A.nrows(); ++i)
    if (sgn(dot(P.A.row(i), r)) > 0) return false;
  for (std::size_t i = 0; i < P.E.nrows(); ++i)
    if (sgn(dot(P.E.row(i), r)) != 0) return false;
  return true;
}

bool contains(const VPolyhedron& V, const RatVector& x) {
  require_dim(x.size(), V.dim, "point");
  if (V.points.empty()) return false;
  const std::size_t np = V.points.size(), nr = V.rays.size();
  LPProblem lp = LPProblem::feasibility(np + nr);
  for (std::size_t k = 0; k < V.dim; ++k) {
    RatVector row(np + nr);
    for (std::size_t i = 0; i < np; ++i) row[i] = V.points[i][k];
    for (std::size_t j = 0; j < nr; ++j) row[np + j] = V.rays[j][k];
    lp.add_eq(std::move(row), x[k]);
  }
  RatVector ones(np + nr);
  for (std::size_t i = 0; i < np; ++i) ones[i] = 1;
  lp.add_eq(std::move(ones), Rational(1));
  for (std::size_t i = 0; i < np + nr; ++i) lp.add_le(-unit_vector(np + nr, i), Rational(0));
  return !lp_solve(lp).infeasible();
}

bool cone_contains(const PolyCone& C, const RatVector& x) {
  require_dim(x.size(), C.dim, "vector");
  const std::size_t g = C.generators.size();
  if (g == 0) return is_zero(x);
  LPProblem lp = LPProblem::feasibility(g);
  for (std::size_t k = 0; k < C.dim; ++k) {
    RatVector row(g);
    for (std::size_t i = 0; i < g; ++i) row[i] = C.generators[i][k];
    lp.add_eq(std::move(row), x[k]);
  }
  for (std::size_t i = 0; i < g; ++i) lp.add_le(-unit_vector(g, i), Rational(0));
  return !lp_solve(lp).infeasible();
}

std::optional<RatVector> find_point(const HPolyhedron& P) {
  P.validate();
  const LPOutcome out = lp_solve(feasibility_problem(P));
  if (out.infeasible()) return std::nullopt;
  return out.as_optimal().point;
}

bool is_empty(const HPolyhedron& P) { return !find_point(P).has_value(); }

std::vector<bool> implicit_rows(const HPolyhedron& P) {
  const auto w = find_point(P);
  if (!w) throw PreconditionError("implicit equalities of an empty polyhedron");
  const std::size_t m = P.A.nrows();
  std::vector<bool> implicit(m, true);
  std::vector<bool> decided(m, false);
  auto mark_slack = [&](const RatVector& x) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!decided[i] && dot(P.A.row(i), x) < P.b[i]) {
        implicit[i] = false;
        decided[i] = true;
      }
    }
  };
  mark_slack(*w);
  for (std::size_t i = 0; i < m; ++i) {
    if (decided[i]) continue;
    LPProblem lp = feasibility_problem(P);
    lp.objective = P.A.row(i);
    lp.sense = Sense::minimize;
    const LPOutcome out = lp_solve(lp);
    if (out.unbounded()) {
      mark_slack(out.as_unbounded().point + out.as_unbounded().ray);
    } else {
      mark_slack(out.as_optimal().point);
    }
    decided[i] = true;
  }
  return implicit;
}

AffineFlat affine_hull(const HPolyhedron& P) {
  P.validate();
  if (is_empty(P)) throw PreconditionError("affine hull of an empty polyhedron");
  const auto implicit = implicit_rows(P);
  RatMatrix Eall = P.E;
  RatVector dall = P.d;
  for (std::size_t i = 0; i < P.A.nrows(); ++i) {
    if (!implicit[i]) continue;
    Eall.append_row(P.A.row(i));
    dall.push_back(P.b[i]);
  }
  auto sol = solve_linear_system(Eall, dall);
  if (!sol) throw std::logic_error("affine hull: implicit equality system inconsistent");
  return AffineFlat{std::move(sol->particular), std::move(sol->nullspace_basis), P.dim};
}

std::size_t dimension(const HPolyhedron& P) { return affine_hull(P).flat_dim(); }

VPolyhedron h_to_v(const HPolyhedron& P) {
  P.validate();
  const std::size_t n = P.dim;
  // Homogenization {(x, t) : A x - b t <= 0, E x - d t = 0, t >= 0}.
  RatMatrix ineq(n + 1), eq(n + 1);
  for (std::size_t i = 0; i < P.A.nrows(); ++i) ineq.append_row(concat(P.A.row(i), {-P.b[i]}));
  ineq.append_row(concat(zeros(n), {Rational(-1)}));
  for (std::size_t i = 0; i < P.E.nrows(); ++i) eq.append_row(concat(P.E.row(i), {-P.d[i]}));

  const ConeGenerators cg = cone_generators(ineq, eq);
  VPolyhedron V;
  V.dim = n;
  for (const auto& y : cg.extreme_rays) {
    const Rational& t = y[n];
    if (sgn(t) > 0)
      V.points.push_back((1 / t) * head(y, n));
    else
      V.rays.push_back(primitive(head(y, n)));
  }
  for (const auto& l : cg.lineality) {
    const RatVector r = normalize_line(head(l, n));
    V.rays.push_back(r);
    V.rays.push_back(-r);
  }
  if (V.points.empty()) {
    V.rays.clear();
    return V;
  }
  sort_unique(V.points);
  sort_unique(V.rays);
  return V;
}

HPolyhedron v_to_h(const VPolyhedron& V) {
  const std::size_t n = V.dim;
  for (const auto& p : V.points) require_dim(p.size(), n, "generator point");
  for (const auto& r : V.rays) require_dim(r.size(), n, "generator ray");
  if (V.points.empty()) return HPolyhedron::empty_set(n);

  // Valid inequalities a.x <= c correspond to h = (a, -c) in the polar of
  // cone{(p, 1), (r, 0)}.
  RatMatrix gens(n + 1);
  for (const auto& p : V.points) gens.append_row(concat(p, {Rational(1)}));
  for (const auto& r : V.rays) gens.append_row(concat(r, {Rational(0)}));
  const ConeGenerators polar = cone_generators(gens, RatMatrix(n + 1));

  HPolyhedron H(n);
  const Rref eqs = rref(RatMatrix(polar.lineality, n + 1));
  for (std::size_t r = 0; r < eqs.reduced.nrows(); ++r) {
    const RatVector& h = eqs.reduced.row(r);
    H.add_eq(head(h, n), -h[n]);
  }
  std::vector<RatVector> rows;
  for (RatVector h : polar.extreme_rays) {
    for (std::size_t r = 0; r < eqs.reduced.nrows(); ++r) {
      const Rational f = h[eqs.pivots[r]];
      if (sgn(f) != 0) h = h - f * eqs.reduced.row(r);
    }
    if (is_zero(head(h, n))) continue;
    rows.push_back(primitive(h));
  }
  std::set<RatVector> seen;
  for (const auto& h : rows) {
    if (!seen.insert(h).second) continue;
    H.add_le(head(h, n), -h[n]);
  }
  return H;
}

bool generators_within(const VPolyhedron& V, const HPolyhedron& P) {
  require_dim(V.dim, P.dim, "ambient dimension");
  for (const auto& p : V.points)
    if (!contains(P, p)) return false;
  if (V.points.empty()) return true;
  for (const auto& r : V.rays)
    if (!in_recession_cone(P, r)) return false;
  return true;
}

bool same_set(const HPolyhedron& P, const HPolyhedron& Q) {
  return generators_within(h_to_v(P), Q) && generators_within(h_to_v(Q), P);
}

VPolyhedron linear_image(const RatMatrix& M, const VPolyhedron& V) {
  require_dim(M.ncols(), V.dim, "linear map input dimension");
  VPolyhedron out;
  out.dim = M.nrows();
  if (V.points.empty()) return out;
  for (const auto& p : V.points) out.points.push_back(M * p);
  for (const auto& r : V.rays) {
    RatVector mr = M * r;
    if (!is_zero(mr)) out.rays.push_back(primitive(mr));
  }
  sort_unique(out.points);
  sort_unique(out.rays);
  return out;
}

HPolyhedron linear_image(const RatMatrix& M, const HPolyhedron& P) {
  require_dim(M.ncols(), P.dim, "linear map input dimension");
  return v_to_h(linear_image(M, h_to_v(P)));
}

VPolyhedron minkowski_diff(const VPolyhedron& V1, const VPolyhedron& V2) {
  require_dim(V2.dim, V1.dim, "ambient dimension");
  VPolyhedron out;
  out.dim = V1.dim;
  if (V1.points.empty() || V2.points.empty()) return out;
  for (const auto& p : V1.points)
    for (const auto& q : V2.points) out.points.push_back(p - q);
  for (const auto& r : V1.rays)
    if (!is_zero(r)) out.rays.push_back(primitive(r));
  for (const auto& r : V2.rays)
    if (!is_zero(r)) out.rays.push_back(primitive(-r));
  sort_unique(out.points);
  sort_unique(out.rays);
  return out;
}

HPolyhedron minkowski_diff(const HPolyhedron& P1, const HPolyhedron& P2) {
  require_dim(P2.dim, P1.dim, "ambient dimension");
  return v_to_h(minkowski_diff(h_to_v(P1), h_to_v(P2)));
}

HPolyhedron product(const HPolyhedron& P1, const HPolyhedron& P2) {
  P1.validate();
  P2.validate();
  const std::size_t n1 = P1.dim, n2 = P2.dim;
  HPolyhedron P(n1 + n2);
  for (std::size_t i = 0; i < P1.A.nrows(); ++i) P.add_le(concat(P1.A.row(i), zeros(n2)), P1.b[i]);
  for (std::size_t i = 0; i < P2.A.nrows(); ++i) P.add_le(concat(zeros(n1), P2.A.row(i)), P2.b[i]);
  for (std::size_t i = 0; i < P1.E.nrows(); ++i) P.add_eq(concat(P1.E.row(i), zeros(n2)), P1.d[i]);
  for (std::size_t i = 0; i < P2.E.nrows(); ++i) P.add_eq(concat(zeros(n1), P2.E.row(i)), P2.d[i]);
  return P;
}

HPolyhedron canonicalize(const HPolyhedron& P) {
  P.validate();
  HPolyhedron out(P.dim);
  std::set<RatVector> seen;
  for (std::size_t i = 0; i < P.A.nrows(); ++i) {
    if (is_zero(P.A.row(i))) {
      if (sgn(P.b[i]) >= 0) continue;
      return HPolyhedron::empty_set(P.dim);
    }
    const RatVector h = primitive(concat(P.A.row(i), {-P.b[i]}));
    if (!seen.insert(h).second) continue;
    out.add_le(head(h, P.dim), -h[P.dim]);
  }
  for (std::size_t i = 0; i < P.E.nrows(); ++i) {
    if (is_zero(P.E.row(i)) && sgn(P.d[i]) == 0) continue;
    out.add_eq(P.E.row(i), P.d[i]);
  }
  return out;
}

}  // namespace relkit
