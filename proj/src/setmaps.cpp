#include "relkit/setmaps.hpp"

#include <set>

#include "relkit/errors.hpp"
#include "relkit/lp.hpp"

namespace relkit {

void PolyhedralMap::validate() const {
  graph.validate();
  require_dim(graph.dim, m + n, "graph dimension");
}

void PLConvexFunction::validate() const {
  domain.validate();
  if (pieces.empty()) throw InputError("piecewise-linear function needs at least one piece");
  for (const auto& p : pieces) require_dim(p.slope.size(), domain.dim, "piece slope");
}

Rational PLConvexFunction::operator()(const RatVector& x) const {
  require_dim(x.size(), domain.dim, "point");
  Rational best = dot(pieces.at(0).slope, x) + pieces[0].intercept;
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    Rational v = dot(pieces[k].slope, x) + pieces[k].intercept;
    if (v > best) best = std::move(v);
  }
  return best;
}

HPolyhedron map_domain(const PolyhedralMap& F) {
  F.validate();
  RatMatrix proj(F.m, F.m + F.n);
  for (std::size_t i = 0; i < F.m; ++i) proj(i, i) = 1;
  return linear_image(proj, F.graph);
}

HPolyhedron image_at(const PolyhedralMap& F, const RatVector& x) {
  F.validate();
  require_dim(x.size(), F.m, "domain point");
  const HPolyhedron& G = F.graph;
  HPolyhedron S(F.n);
  auto split = [&](const RatVector& row, const Rational& rhs) {
    Rational r = rhs;
    for (std::size_t j = 0; j < F.m; ++j) r -= row[j] * x[j];
    return std::make_pair(RatVector(row.begin() + static_cast<std::ptrdiff_t>(F.m), row.end()), r);
  };
  for (std::size_t i = 0; i < G.A.nrows(); ++i) {
    auto [row, rhs] = split(G.A.row(i), G.b[i]);
    S.add_le(std::move(row), std::move(rhs));
  }
  for (std::size_t i = 0; i < G.E.nrows(); ++i) {
    auto [row, rhs] = split(G.E.row(i), G.d[i]);
    S.add_eq(std::move(row), std::move(rhs));
  }
  return S;
}

MapContext prepare_map(const PolyhedralMap& F) {
  F.validate();
  MapContext ctx{F, prepare(F.graph), prepare(map_domain(F))};
  if (!ctx.graph.empty()) ctx.quasi_reg_graph = quasi_regularity_report(ctx.graph).verdict;
  if (!ctx.domain.empty()) ctx.quasi_reg_dom = quasi_regularity_report(ctx.domain).verdict;
  return ctx;
}

GraphRIReport graph_ri_check(const PolyhedralMap& F, const RatVector& x, const RatVector& y) {
  return graph_ri_check(prepare_map(F), x, y);
}

GraphRIReport graph_ri_check(const MapContext& ctx, const RatVector& x, const RatVector& y) {
  require_dim(x.size(), ctx.map.m, "domain point");
  require_dim(y.size(), ctx.map.n, "range point");
  GraphRIReport rep;
  rep.x = x;
  rep.y = y;
  rep.quasi_reg_graph = ctx.quasi_reg_graph;
  rep.quasi_reg_dom = ctx.quasi_reg_dom;
  rep.lhs = ri_membership(ctx.graph, concat(x, y)).member;
  // ri of an empty slice is empty.
  if (ri_membership(ctx.domain, x).member) {
    const HPolyhedron slice = image_at(ctx.map, x);
    if (contains(slice, y)) rep.rhs = ri_membership(prepare(slice), y).member;
  }
  return rep;
}

std::vector<RatVector> graph_samples(const MapContext& ctx, const SamplingPolicy& policy) {
  return sample_points(ctx.graph, policy);
}

HPolyhedron epi_polyhedron(const PLConvexFunction& f) {
  f.validate();
  if (is_empty(f.domain)) throw PreconditionError("function is not proper: empty domain");
  const std::size_t m = f.dim();
  const HPolyhedron& D = f.domain;
  HPolyhedron epi(m + 1);
  for (std::size_t i = 0; i < D.A.nrows(); ++i) epi.add_le(concat(D.A.row(i), {Rational(0)}), D.b[i]);
  for (const auto& p : f.pieces) epi.add_le(concat(p.slope, {Rational(-1)}), -p.intercept);
  for (std::size_t i = 0; i < D.E.nrows(); ++i) epi.add_eq(concat(D.E.row(i), {Rational(0)}), D.d[i]);
  return epi;
}

FunctionContext prepare_function(const PLConvexFunction& f) {
  return FunctionContext{f, prepare(epi_polyhedron(f)), prepare(f.domain)};
}

EpiRelintReport epi_relint_report(const PLConvexFunction& f, const RatVector& x, const Rational& lambda) {
  return epi_relint_report(prepare_function(f), x, lambda);
}

EpiRelintReport epi_relint_report(const FunctionContext& ctx, const RatVector& x, const Rational& lambda) {
  require_dim(x.size(), ctx.f.dim(), "point");
  EpiRelintReport rep;
  rep.x = x;
  rep.lambda = lambda;
  rep.affine_instance = ctx.f.pieces.size() == 1;

  const MembershipReport epi = characterization_suite(ctx.epi, concat(x, {lambda}));
  const MembershipReport dom = characterization_suite(ctx.domain, x);
  const bool above = dom.in_set && lambda > ctx.f(x);
  rep.lhs_ri = epi.ri_def;
  rep.rhs_ri = dom.ri_def && above;
  rep.lhs_iri = epi.cone_subspace;
  rep.rhs_iri = dom.cone_subspace && above;
  rep.lhs_qri = epi.closed_cone_subspace;
  rep.rhs_qri = dom.closed_cone_subspace && above;
  return rep;
}

EpiQuasiRegularityReport epi_quasireg_implies_dom(const PLConvexFunction& f) {
  const FunctionContext ctx = prepare_function(f);
  return EpiQuasiRegularityReport{quasi_regularity_report(ctx.epi, "epi"),
                                  quasi_regularity_report(ctx.domain, "dom")};
}

CommutationReport linear_image_ri_commutes(const RatMatrix& A, const HPolyhedron& P) {
  require_dim(A.ncols(), P.dim, "linear map input dimension");
  const PreparedPolyhedron src = prepare(P);
  if (src.empty()) throw PreconditionError("linear image of an empty set");
  const PreparedPolyhedron img = prepare(v_to_h(linear_image(A, src.v)));

  CommutationReport rep;
  const RatVector c = ri_point(src);
  std::set<RatVector> seen;
  auto add_sample = [&](RatVector p) {
    if (seen.insert(p).second) rep.forward_samples.push_back(std::move(p));
  };
  add_sample(c);
  for (const auto& v : src.v.points) add_sample(Rational(1, 2) * (c + v));
  rep.forward_ok = true;
  for (const auto& p : rep.forward_samples) {
    if (!ri_membership(src, p).member || !ri_membership(img, A * p).member) {
      rep.forward_ok = false;
      break;
    }
  }

  // Pull q back: max t s.t. A x = q, x in P, t below every free slack.
  rep.image_point = ri_point(img);
  const std::size_t n = P.dim;
  LPProblem lp = LPProblem::feasibility(n + 1);
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < P.A.nrows(); ++i)
    lp.add_le(concat(P.A.row(i), {Rational(src.implicit[i] ? 0 : 1)}), P.b[i]);
  for (std::size_t i = 0; i < P.E.nrows(); ++i) lp.add_eq(concat(P.E.row(i), {Rational(0)}), P.d[i]);
  for (std::size_t k = 0; k < A.nrows(); ++k) lp.add_eq(concat(A.row(k), {Rational(0)}), rep.image_point[k]);
  lp.add_le(unit_vector(n + 1, n), Rational(1));
  const LPOutcome out = lp_solve(lp);
  if (out.optimal()) {
    const RatVector& z = out.as_optimal().point;
    RatVector x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    const bool strict = sgn(z[n]) > 0 || free_rows(src).empty();
    if (strict && ri_membership(src, x).member && A * x == rep.image_point) {
      rep.preimage = std::move(x);
      rep.backward_ok = true;
    }
  }
  return rep;
}

DifferenceReport set_difference_ri_commutes(const HPolyhedron& P1, const HPolyhedron& P2) {
  require_dim(P2.dim, P1.dim, "ambient dimension");
  const std::size_t n = P1.dim;
  RatMatrix A(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    A(i, i) = 1;
    A(i, n + i) = -1;
  }
  DifferenceReport rep{linear_image_ri_commutes(A, product(P1, P2)), std::nullopt, std::nullopt};
  if (rep.commutation.preimage) {
    const RatVector& z = *rep.commutation.preimage;
    rep.part1 = RatVector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    rep.part2 = RatVector(z.begin() + static_cast<std::ptrdiff_t>(n), z.end());
  }
  return rep;
}

}  // namespace relkit
