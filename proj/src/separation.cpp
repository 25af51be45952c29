#include "relkit/separation.hpp"

#include <functional>

#include "relkit/errors.hpp"
#include "relkit/linalg.hpp"
#include "relkit/lp.hpp"

namespace relkit {

namespace {

void require_nonempty(const PreparedPolyhedron& P, const char* what) {
  if (P.empty()) throw PreconditionError(std::string(what) + " is empty");
}

using Membership = std::function<bool(const RatVector&)>;

bool verify_core(const SeparationCertificate& cert, const VPolyhedron& V1, const VPolyhedron& V2,
                 const Membership& in1, const Membership& in2) {
  const std::size_t n = V1.dim;
  if (V2.dim != n || cert.functional.size() != n) return false;
  if (cert.strict_witness_1.size() != n || cert.strict_witness_2.size() != n) return false;
  if (!cert.sup1 || !cert.inf2 || *cert.sup1 > *cert.inf2) return false;
  if (V1.empty() || V2.empty()) return false;
  const RatVector& f = cert.functional;
  for (const auto& p : V1.points)
    if (dot(f, p) > *cert.sup1) return false;
  for (const auto& r : V1.rays)
    if (sgn(dot(f, r)) > 0) return false;
  for (const auto& p : V2.points)
    if (dot(f, p) < *cert.inf2) return false;
  for (const auto& r : V2.rays)
    if (sgn(dot(f, r)) < 0) return false;
  if (!in1(cert.strict_witness_1) || !in2(cert.strict_witness_2)) return false;
  return dot(f, cert.strict_witness_1) < dot(f, cert.strict_witness_2);
}

// Index of the generator point minimizing (sign = +1) or maximizing
// (sign = -1) <f, p>; first occurrence wins.
std::size_t extreme_index(const std::vector<RatVector>& pts, const RatVector& f, int sign) {
  std::size_t best = 0;
  Rational best_val = sign * dot(f, pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Rational v = sign * dot(f, pts[i]);
    if (v < best_val) {
      best = i;
      best_val = std::move(v);
    }
  }
  return best;
}

}  // namespace

std::optional<RatVector> common_relative_interior_point(const PreparedPolyhedron& P1,
                                                        const PreparedPolyhedron& P2) {
  require_dim(P2.h.dim, P1.h.dim, "ambient dimension");
  if (P1.empty() || P2.empty()) return std::nullopt;
  const std::size_t n = P1.h.dim;
  LPProblem lp = LPProblem::feasibility(n + 1);
  lp.objective[n] = 1;
  for (const PreparedPolyhedron* P : {&P1, &P2}) {
    const HPolyhedron& H = P->h;
    for (std::size_t i = 0; i < H.A.nrows(); ++i)
      lp.add_le(concat(H.A.row(i), {Rational(P->implicit[i] ? 0 : 1)}), H.b[i]);
    for (std::size_t i = 0; i < H.E.nrows(); ++i) lp.add_eq(concat(H.E.row(i), {Rational(0)}), H.d[i]);
  }
  lp.add_le(unit_vector(n + 1, n), Rational(1));
  const LPOutcome out = lp_solve(lp);
  if (out.infeasible()) return std::nullopt;
  const RatVector& z = out.as_optimal().point;
  if (sgn(z[n]) <= 0) return std::nullopt;
  return RatVector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
}

SeparationResult properly_separate(const HPolyhedron& P1, const HPolyhedron& P2) {
  require_dim(P2.dim, P1.dim, "ambient dimension");
  return properly_separate(prepare(P1), prepare(P2));
}

SeparationResult properly_separate(const PreparedPolyhedron& P1, const PreparedPolyhedron& P2) {
  require_dim(P2.h.dim, P1.h.dim, "ambient dimension");
  require_nonempty(P1, "first set");
  require_nonempty(P2, "second set");
  const std::size_t n = P1.h.dim;
  const VPolyhedron D = minkowski_diff(P1.v, P2.v);

  std::vector<RatVector> gens;
  for (const auto& g : D.points)
    if (!is_zero(g)) gens.push_back(g);
  for (const auto& g : D.rays) gens.push_back(g);

  LPProblem lp = LPProblem::feasibility(n);
  for (const auto& g : gens) {
    lp.objective = lp.objective - g;
    lp.add_le(g, Rational(0));
  }
  for (std::size_t k = 0; k < n; ++k) {
    lp.add_le(unit_vector(n, k), Rational(1));
    lp.add_le(-unit_vector(n, k), Rational(1));
  }
  const LPOutcome out = lp_solve(lp);
  if (!out.optimal()) throw std::logic_error("separation LP must have an optimum");

  if (sgn(out.as_optimal().value) > 0) {
    SeparationCertificate cert;
    cert.functional = out.as_optimal().point;
    const RatVector& f = cert.functional;
    const auto& pts1 = P1.v.points;
    const auto& pts2 = P2.v.points;
    const std::size_t lo1 = extreme_index(pts1, f, +1);
    const std::size_t hi1 = extreme_index(pts1, f, -1);
    const std::size_t lo2 = extreme_index(pts2, f, +1);
    const std::size_t hi2 = extreme_index(pts2, f, -1);
    cert.sup1 = dot(f, pts1[hi1]);
    cert.inf2 = dot(f, pts2[lo2]);
    cert.strict_witness_1 = pts1[lo1];
    cert.strict_witness_2 = pts2[hi2];
    if (!(dot(f, pts1[lo1]) < dot(f, pts2[hi2]))) {
      // Every point pair is level; strictness comes from a ray.
      bool found = false;
      for (const auto& r : P1.v.rays) {
        if (sgn(dot(f, r)) < 0) {
          cert.strict_witness_1 = pts1[lo1] + r;
          found = true;
          break;
        }
      }
      if (!found) {
        for (const auto& r : P2.v.rays) {
          if (sgn(dot(f, r)) > 0) {
            cert.strict_witness_2 = pts2[hi2] + r;
            found = true;
            break;
          }
        }
      }
      if (!found) throw std::logic_error("positive separation optimum without a strict generator");
    }
    return SeparationResult{std::move(cert)};
  }

  auto common = common_relative_interior_point(P1, P2);
  if (!common) throw std::logic_error("no proper separation and no common relative interior point");
  return SeparationResult{DisjointnessWitness{std::move(*common)}};
}

bool verify_separation(const SeparationCertificate& cert, const HPolyhedron& P1, const HPolyhedron& P2) {
  if (P1.dim != P2.dim) return false;
  return verify_core(
      cert, h_to_v(P1), h_to_v(P2), [&](const RatVector& x) { return x.size() == P1.dim && contains(P1, x); },
      [&](const RatVector& x) { return x.size() == P2.dim && contains(P2, x); });
}

bool verify_separation(const SeparationCertificate& cert, const VPolyhedron& V1, const VPolyhedron& V2) {
  return verify_core(
      cert, V1, V2, [&](const RatVector& x) { return x.size() == V1.dim && contains(V1, x); },
      [&](const RatVector& x) { return x.size() == V2.dim && contains(V2, x); });
}

bool verify_disjointness_witness(const DisjointnessWitness& w, const HPolyhedron& P1, const HPolyhedron& P2) {
  if (w.common_point.size() != P1.dim || w.common_point.size() != P2.dim) return false;
  return ri_membership(P1, w.common_point).member && ri_membership(P2, w.common_point).member;
}

QriSeparationReport qri_nonmembership_via_separation(const HPolyhedron& P, const RatVector& x) {
  return qri_nonmembership_via_separation(prepare(P), x);
}

QriSeparationReport qri_nonmembership_via_separation(const PreparedPolyhedron& P, const RatVector& x) {
  require_dim(x.size(), P.h.dim, "point");
  const PreparedPolyhedron S = prepare(HPolyhedron::point(x));
  const SeparationResult res = properly_separate(S, P);
  QriSeparationReport rep;
  rep.outside_qri = res.separated();
  if (res.separated()) rep.certificate = res.certificate();
  if (contains(P.h, x)) rep.normal_cone_subspace = is_subspace(normal_cone(P, x)).subspace;
  return rep;
}

RatVector strict_separate_in_flat(const AffineFlat& L, const HPolyhedron& P, const RatVector& x) {
  require_dim(L.dim, P.dim, "flat dimension");
  require_dim(x.size(), P.dim, "point");
  if (!L.is_linear_subspace()) throw PreconditionError("flat must be a linear subspace");
  if (!L.contains(x)) throw PreconditionError("point is not in the subspace");
  const VPolyhedron V = h_to_v(P);
  for (const auto& p : V.points)
    if (!L.contains(p)) throw PreconditionError("set is not contained in the subspace");
  for (const auto& r : V.rays)
    if (!in_span(r, L.directions)) throw PreconditionError("set is not contained in the subspace");
  if (contains(P, x)) throw PreconditionError("point lies in the set");
  if (V.empty()) {
    if (L.directions.empty()) throw PreconditionError("zero subspace admits no nonzero functional");
    return primitive(L.directions.front());
  }

  const std::size_t n = P.dim;
  // max delta  s.t. <v, p - x> + delta <= 0, <v, r> <= 0, -1 <= v_k <= 1.
  LPProblem lp = LPProblem::feasibility(n + 1);
  lp.objective[n] = 1;
  for (const auto& p : V.points) lp.add_le(concat(p - x, {Rational(1)}), Rational(0));
  for (const auto& r : V.rays) lp.add_le(concat(r, {Rational(0)}), Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    lp.add_le(unit_vector(n + 1, k), Rational(1));
    lp.add_le(-unit_vector(n + 1, k), Rational(1));
  }
  const LPOutcome out = lp_solve(lp);
  if (!out.optimal() || sgn(out.as_optimal().value) <= 0)
    throw std::logic_error("margin LP found no strict separator for a point outside a closed set");
  const RatVector& z = out.as_optimal().point;
  const RatVector v(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
  // Values on L are preserved by the orthogonal projection onto L.
  return primitive(project_onto_span(v, L.directions));
}

bool verify_strict_in_flat(const AffineFlat& L, const HPolyhedron& P, const RatVector& x, const RatVector& u) {
  if (u.size() != P.dim || is_zero(u) || !in_span(u, L.directions)) return false;
  const VPolyhedron V = h_to_v(P);
  for (const auto& r : V.rays)
    if (sgn(dot(u, r)) > 0) return false;
  const Rational ux = dot(u, x);
  for (const auto& p : V.points)
    if (!(dot(u, p) < ux)) return false;
  return true;
}

SeparationEquivalenceReport separation_iff_ri_disjoint(const HPolyhedron& P1, const HPolyhedron& P2) {
  require_dim(P2.dim, P1.dim, "ambient dimension");
  return separation_iff_ri_disjoint(prepare(P1), prepare(P2));
}

SeparationEquivalenceReport separation_iff_ri_disjoint(const PreparedPolyhedron& P1,
                                                       const PreparedPolyhedron& P2) {
  SeparationEquivalenceReport rep{.separation = properly_separate(P1, P2)};
  rep.separated = rep.separation.separated();
  const auto common = common_relative_interior_point(P1, P2);
  rep.ri_disjoint = !common.has_value();
  rep.qri_disjoint = rep.ri_disjoint;
  if (rep.separated) {
    rep.certificate_valid = verify_core(
        rep.separation.certificate(), P1.v, P2.v, [&](const RatVector& x) { return contains(P1.h, x); },
        [&](const RatVector& x) { return contains(P2.h, x); });
  } else {
    const RatVector& c = rep.separation.witness().common_point;
    rep.certificate_valid = ri_membership(P1, c).member && ri_membership(P2, c).member;
  }
  return rep;
}

}  // namespace relkit
