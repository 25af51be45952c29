#include "relkit/relint.hpp"

#include "relkit/errors.hpp"
#include "relkit/linalg.hpp"
#include "relkit/lp.hpp"

namespace relkit {

PreparedPolyhedron prepare(const HPolyhedron& P) {
  P.validate();
  PreparedPolyhedron out{P, h_to_v(P), {}};
  if (!out.v.empty()) out.implicit = implicit_rows(P);
  return out;
}

std::vector<std::size_t> free_rows(const PreparedPolyhedron& P) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < P.implicit.size(); ++i)
    if (!P.implicit[i]) rows.push_back(i);
  return rows;
}

namespace {

void require_member(const HPolyhedron& P, const RatVector& x, const char* what) {
  require_dim(x.size(), P.dim, "point");
  if (!contains(P, x)) throw NotInSetError(std::string(what) + ": point " + to_string(x) + " is not in the set");
}

AffineFlat flat_of(const PreparedPolyhedron& P) {
  RatMatrix E = P.h.E;
  RatVector d = P.h.d;
  for (std::size_t i = 0; i < P.implicit.size(); ++i) {
    if (!P.implicit[i]) continue;
    E.append_row(P.h.A.row(i));
    d.push_back(P.h.b[i]);
  }
  auto sol = solve_linear_system(E, d);
  if (!sol) throw std::logic_error("implicit equality system inconsistent");
  return AffineFlat{std::move(sol->particular), std::move(sol->nullspace_basis), P.h.dim};
}

}  // namespace

RiResult ri_membership(const HPolyhedron& P, const RatVector& x) {
  require_dim(x.size(), P.dim, "point");
  if (!contains(P, x)) return ri_membership(PreparedPolyhedron{P, {}, {}}, x);
  return ri_membership(prepare(P), x);
}

RiResult ri_membership(const PreparedPolyhedron& P, const RatVector& x) {
  const HPolyhedron& H = P.h;
  require_dim(x.size(), H.dim, "point");
  for (std::size_t i = 0; i < H.A.nrows(); ++i) {
    if (dot(H.A.row(i), x) > H.b[i]) return {false, RiWitness{RiWitness::Kind::violated_inequality, i}};
  }
  for (std::size_t i = 0; i < H.E.nrows(); ++i) {
    if (dot(H.E.row(i), x) != H.d[i]) return {false, RiWitness{RiWitness::Kind::violated_equality, i}};
  }
  for (std::size_t i = 0; i < H.A.nrows(); ++i) {
    if (!P.implicit[i] && dot(H.A.row(i), x) == H.b[i])
      return {false, RiWitness{RiWitness::Kind::active_inequality, i}};
  }
  return {true, std::nullopt};
}

RatVector ri_point(const HPolyhedron& P) { return ri_point(prepare(P)); }

RatVector ri_point(const PreparedPolyhedron& P) {
  if (P.empty()) throw PreconditionError("ri_point of an empty polyhedron");
  const HPolyhedron& H = P.h;
  const std::size_t n = H.dim;
  LPProblem lp = LPProblem::feasibility(n + 1);
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < H.A.nrows(); ++i) {
    lp.add_le(concat(H.A.row(i), {Rational(P.implicit[i] ? 0 : 1)}), H.b[i]);
  }
  for (std::size_t i = 0; i < H.E.nrows(); ++i) lp.add_eq(concat(H.E.row(i), {Rational(0)}), H.d[i]);
  lp.add_le(unit_vector(n + 1, n), Rational(1));
  const LPOutcome out = lp_solve(lp);
  if (!out.optimal()) throw std::logic_error("slack LP for ri_point did not reach an optimum");
  const RatVector& z = out.as_optimal().point;
  if (sgn(z[n]) <= 0 && !free_rows(P).empty())
    throw std::logic_error("slack LP optimum is not positive on a nonempty polyhedron");
  return RatVector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
}

PolyCone conic_hull_at(const HPolyhedron& P, const RatVector& x) {
  require_member(P, x, "conic hull");
  return conic_hull_at(prepare(P), x);
}

PolyCone conic_hull_at(const PreparedPolyhedron& P, const RatVector& x) {
  require_member(P.h, x, "conic hull");
  PolyCone C;
  C.dim = P.h.dim;
  for (const auto& v : P.v.points) {
    RatVector g = v - x;
    if (!is_zero(g)) C.generators.push_back(std::move(g));
  }
  for (const auto& r : P.v.rays) C.generators.push_back(r);
  return C;
}

SubspaceResult is_subspace(const PolyCone& C) {
  for (const auto& g : C.generators) {
    if (!cone_contains(C, -g)) return {false, g};
  }
  return {true, std::nullopt};
}

PolyCone closure(const PolyCone& C) { return C; }

bool is_subspace_by_facets(const PolyCone& C) {
  VPolyhedron V;
  V.dim = C.dim;
  V.points.push_back(zeros(C.dim));
  V.rays = C.generators;
  const HPolyhedron H = v_to_h(V);
  if (H.A.nrows() == 0) return true;
  for (bool imp : implicit_rows(H))
    if (!imp) return false;
  return true;
}

PolyCone normal_cone(const HPolyhedron& P, const RatVector& x) {
  require_member(P, x, "normal cone");
  return normal_cone(prepare(P), x);
}

PolyCone normal_cone(const PreparedPolyhedron& P, const RatVector& x) {
  const HPolyhedron& H = P.h;
  require_member(H, x, "normal cone");
  PolyCone N;
  N.dim = H.dim;
  auto push = [&](const RatVector& g) {
    if (!is_zero(g)) N.generators.push_back(g);
  };
  for (std::size_t i = 0; i < H.A.nrows(); ++i) {
    if (P.implicit[i]) {
      push(H.A.row(i));
      push(-H.A.row(i));
    } else if (dot(H.A.row(i), x) == H.b[i]) {
      push(H.A.row(i));
    }
  }
  for (std::size_t i = 0; i < H.E.nrows(); ++i) {
    push(H.E.row(i));
    push(-H.E.row(i));
  }
  return N;
}

std::optional<Prolongation> prolongation_test(const HPolyhedron& P, const RatVector& xbar,
                                              const RatVector& x) {
  return prolongation_test(prepare(P), xbar, x);
}

std::optional<Prolongation> prolongation_test(const PreparedPolyhedron& P, const RatVector& xbar,
                                              const RatVector& x) {
  const HPolyhedron& H = P.h;
  require_member(H, xbar, "prolongation base point");
  require_member(H, x, "prolongation start point");
  if (x == xbar) throw PreconditionError("prolongation needs two distinct points");

  // u = xbar + s (xbar - x), maximize s in (0, 1].
  const RatVector dir = xbar - x;
  LPProblem lp = LPProblem::feasibility(1);
  lp.objective[0] = 1;
  for (std::size_t i = 0; i < H.A.nrows(); ++i) lp.add_le({dot(H.A.row(i), dir)}, H.b[i] - dot(H.A.row(i), xbar));
  for (std::size_t i = 0; i < H.E.nrows(); ++i) lp.add_eq({dot(H.E.row(i), dir)}, H.d[i] - dot(H.E.row(i), xbar));
  lp.add_le({Rational(1)}, Rational(1));
  lp.add_le({Rational(-1)}, Rational(0));
  const LPOutcome out = lp_solve(lp);
  if (!out.optimal()) throw std::logic_error("prolongation LP must be feasible and bounded");
  const Rational s = out.as_optimal().value;
  if (sgn(s) <= 0) return std::nullopt;
  return Prolongation{xbar + s * dir, s / (1 + s)};
}

bool MembershipReport::all_agree() const {
  return ri_def == prolongation && ri_def == cone_subspace && ri_def == closed_cone_subspace &&
         ri_def == normal_cone_subspace;
}

bool MembershipReport::chain_holds() const {
  return (!ri_def || cone_subspace) && (!cone_subspace || closed_cone_subspace) &&
         (!closed_cone_subspace || normal_cone_subspace);
}

MembershipReport characterization_suite(const HPolyhedron& P, const RatVector& x, std::string set_id) {
  return characterization_suite(prepare(P), x, std::move(set_id));
}

MembershipReport characterization_suite(const PreparedPolyhedron& P, const RatVector& x,
                                        std::string set_id) {
  require_dim(x.size(), P.h.dim, "point");
  MembershipReport rep;
  rep.point = x;
  rep.set_id = std::move(set_id);
  rep.in_set = contains(P.h, x);
  if (!rep.in_set) {
    rep.ri_witness = ri_membership(P, x).witness;
    return rep;
  }

  const RiResult ri = ri_membership(P, x);
  rep.ri_def = ri.member;
  rep.ri_witness = ri.witness;

  // Every point of P is a convex combination of generator points plus a
  // conic combination of rays, so the prolongation quantifier reduces to
  // the generator points and x + r for each ray r.
  std::vector<RatVector> targets;
  for (const auto& v : P.v.points)
    if (v != x) targets.push_back(v);
  for (const auto& r : P.v.rays) targets.push_back(x + r);
  rep.prolongation = true;
  for (const auto& target : targets) {
    auto pr = prolongation_test(P, x, target);
    if (!pr) {
      rep.prolongation = false;
      rep.prolongation_endpoints.clear();
      break;
    }
    rep.prolongation_endpoints.push_back(std::move(pr->u));
  }

  const PolyCone cone = conic_hull_at(P, x);
  rep.cone_subspace = is_subspace(cone).subspace;
  rep.closed_cone_subspace = is_subspace_by_facets(closure(cone));

  const SubspaceResult ns = is_subspace(normal_cone(P, x));
  rep.normal_cone_subspace = ns.subspace;
  rep.violating_functional = ns.offending;
  return rep;
}

bool QuasiRegularityReport::consistent() const {
  return verdict || !(cond_finite_dim || cond_int_nonempty || cond_ri_nonempty);
}

QuasiRegularityReport quasi_regularity_report(const HPolyhedron& P, std::string set_id) {
  return quasi_regularity_report(prepare(P), std::move(set_id));
}

QuasiRegularityReport quasi_regularity_report(const PreparedPolyhedron& P, std::string set_id) {
  if (P.empty()) throw PreconditionError("quasi-regularity of an empty set");
  QuasiRegularityReport rep;
  rep.set_id = std::move(set_id);
  rep.cond_finite_dim = true;
  rep.cond_int_nonempty = flat_of(P).flat_dim() == P.h.dim;
  const RatVector c = ri_point(P);
  rep.cond_ri_nonempty = ri_membership(P, c).member;
  rep.verdict = rep.cond_finite_dim || rep.cond_int_nonempty || rep.cond_ri_nonempty;

  std::vector<RatVector> samples = P.v.points;
  samples.push_back(c);
  rep.sampled_equality_check = true;
  for (const auto& s : samples) {
    const PolyCone cone = conic_hull_at(P, s);
    if (is_subspace(cone).subspace != is_subspace_by_facets(closure(cone))) {
      rep.sampled_equality_check = false;
      break;
    }
  }
  return rep;
}

}  // namespace relkit
