#ifndef RELKIT_RELINT_HPP
#define RELKIT_RELINT_HPP

#include <optional>
#include <string>
#include <vector>

#include "relkit/polyhedron.hpp"

namespace relkit {

/// A polyhedron together with its generator form and implicit-equality
/// rows, computed once and shared by the interior predicates below.
struct PreparedPolyhedron {
  HPolyhedron h;
  VPolyhedron v;
  std::vector<bool> implicit;  // per inequality row; empty when h is empty

  bool empty() const { return v.empty(); }
};

PreparedPolyhedron prepare(const HPolyhedron& P);

/// Why a point failed the relative-interior test.
struct RiWitness {
  enum class Kind { violated_inequality, violated_equality, active_inequality };
  Kind kind;
  std::size_t row;
};

struct RiResult {
  bool member = false;
  std::optional<RiWitness> witness;  // set iff !member
};

/// x in ri(P) iff x in P and every non-implicit inequality is strict at x.
/// For an empty P the answer is false. Throws InputError on dimension
/// mismatch.
RiResult ri_membership(const HPolyhedron& P, const RatVector& x);
RiResult ri_membership(const PreparedPolyhedron& P, const RatVector& x);

/// A point of ri(P) from the slack LP
///   max t  s.t.  a_i x + t <= b_i (i non-implicit), t <= 1, x in P.
/// Throws PreconditionError on empty P.
RatVector ri_point(const HPolyhedron& P);
RatVector ri_point(const PreparedPolyhedron& P);

/// cone(P - x). Throws NotInSetError when x is not in P.
PolyCone conic_hull_at(const HPolyhedron& P, const RatVector& x);
PolyCone conic_hull_at(const PreparedPolyhedron& P, const RatVector& x);

struct SubspaceResult {
  bool subspace = false;
  /// A generator g with -g outside the cone, when not a subspace.
  std::optional<RatVector> offending;
};

/// A cone is a subspace iff -g lies in it for every generator g.
SubspaceResult is_subspace(const PolyCone& C);

/// Closure of a polyhedral cone: the same generator set (polyhedral cones
/// are closed).
PolyCone closure(const PolyCone& C);

/// Independent route for closed cones: a cone is a linear subspace iff its
/// inequality description has no non-implicit row.
bool is_subspace_by_facets(const PolyCone& C);

/// N(x; P), generated by the active non-implicit normals plus both signs of
/// every implicit inequality and every equality row. Throws NotInSetError.
PolyCone normal_cone(const HPolyhedron& P, const RatVector& x);
PolyCone normal_cone(const PreparedPolyhedron& P, const RatVector& x);

struct Prolongation {
  RatVector u;  // endpoint beyond `xbar`
  Rational t;   // xbar = t x + (1 - t) u, 0 < t < 1
};

/// Looks for u in P with xbar strictly inside (x, u). Throws
/// PreconditionError unless x, xbar are distinct members of P.
std::optional<Prolongation> prolongation_test(const HPolyhedron& P, const RatVector& xbar,
                                              const RatVector& x);
std::optional<Prolongation> prolongation_test(const PreparedPolyhedron& P, const RatVector& xbar,
                                              const RatVector& x);

/// Five independently computed interior predicates at one point.
struct MembershipReport {
  RatVector point;
  std::string set_id;
  bool in_set = false;
  bool ri_def = false;                // strict non-implicit inequalities
  bool prolongation = false;          // every x in P extends through point
  bool cone_subspace = false;         // cone(P - point) is a subspace
  bool closed_cone_subspace = false;  // closure of that cone is a subspace
  bool normal_cone_subspace = false;  // N(point; P) is a subspace
  /// The cone and its closure are the same object for polyhedra, so the
  /// agreement of the two cone predicates is structural.
  bool cone_closure_structural = true;

  std::optional<RiWitness> ri_witness;
  std::vector<RatVector> prolongation_endpoints;
  std::optional<RatVector> violating_functional;  // n in N with -n not in N

  bool all_agree() const;
  /// ri <= iri <= qri, pointwise.
  bool chain_holds() const;
};

MembershipReport characterization_suite(const HPolyhedron& P, const RatVector& x,
                                        std::string set_id = {});
MembershipReport characterization_suite(const PreparedPolyhedron& P, const RatVector& x,
                                        std::string set_id = {});

struct QuasiRegularityReport {
  std::string set_id;
  bool cond_finite_dim = true;
  bool cond_int_nonempty = false;
  bool cond_ri_nonempty = false;
  bool verdict = false;
  bool sampled_equality_check = false;

  /// verdict is forced by any sufficient condition.
  bool consistent() const;
};

/// Throws PreconditionError on empty P.
QuasiRegularityReport quasi_regularity_report(const HPolyhedron& P, std::string set_id = {});
QuasiRegularityReport quasi_regularity_report(const PreparedPolyhedron& P, std::string set_id = {});

/// Non-implicit inequality rows.
std::vector<std::size_t> free_rows(const PreparedPolyhedron& P);

}  // namespace relkit

#endif  // RELKIT_RELINT_HPP
