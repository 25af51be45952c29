#ifndef RELKIT_SETMAPS_HPP
#define RELKIT_SETMAPS_HPP

#include <optional>
#include <vector>

#include "relkit/polyhedron.hpp"
#include "relkit/relint.hpp"
#include "relkit/sampling.hpp"

namespace relkit {

/// Set-valued map F : R^m => R^n given by its polyhedral graph in R^(m+n).
struct PolyhedralMap {
  HPolyhedron graph;
  std::size_t m = 0;
  std::size_t n = 0;

  void validate() const;
};

struct AffinePiece {
  RatVector slope;
  Rational intercept;
};

/// f(x) = max_k (slope_k . x + intercept_k) on a polyhedral domain.
struct PLConvexFunction {
  std::vector<AffinePiece> pieces;
  HPolyhedron domain;

  std::size_t dim() const { return domain.dim; }
  /// Throws InputError when there are no pieces or slopes mismatch the
  /// domain dimension.
  void validate() const;
  /// Max of the pieces; the caller decides whether x is in the domain.
  Rational operator()(const RatVector& x) const;
};

/// dom F, by projecting the graph onto its first m coordinates. An empty
/// graph gives the empty domain.
HPolyhedron map_domain(const PolyhedralMap& F);

/// F(x) = {y : (x, y) in gph F}; empty when x is outside dom F.
HPolyhedron image_at(const PolyhedralMap& F, const RatVector& x);

struct GraphRIReport {
  RatVector x;
  RatVector y;
  bool lhs = false;  // (x, y) in ri(gph F)
  bool rhs = false;  // x in ri(dom F) and y in ri(F(x))
  bool quasi_reg_graph = false;
  bool quasi_reg_dom = false;

  bool equality_holds() const { return lhs == rhs; }
  /// Quasi-regular graph licenses lhs => rhs.
  bool graph_inclusion_holds() const { return !quasi_reg_graph || !lhs || rhs; }
  /// Quasi-regular domain licenses rhs => lhs.
  bool domain_inclusion_holds() const { return !quasi_reg_dom || !rhs || lhs; }
  bool holds() const { return equality_holds() && graph_inclusion_holds() && domain_inclusion_holds(); }
};

/// Both sides of the graph formula at one point. The map's domain and the
/// prepared graph are computed once per map by `MapContext`.
struct MapContext {
  PolyhedralMap map;
  PreparedPolyhedron graph;
  PreparedPolyhedron domain;
  bool quasi_reg_graph = false;
  bool quasi_reg_dom = false;
};

MapContext prepare_map(const PolyhedralMap& F);
GraphRIReport graph_ri_check(const PolyhedralMap& F, const RatVector& x, const RatVector& y);
GraphRIReport graph_ri_check(const MapContext& ctx, const RatVector& x, const RatVector& y);

/// {(x, a) : x in domain, a >= slope_k . x + intercept_k for all k}.
/// Throws PreconditionError on an empty domain.
HPolyhedron epi_polyhedron(const PLConvexFunction& f);

struct EpiRelintReport {
  RatVector x;
  Rational lambda;
  // ri: (x, lambda) in ri(epi f)  vs  x in ri(dom f) and lambda > f(x)
  bool lhs_ri = false, rhs_ri = false;
  // iri: conic-hull subspace predicate on both sides
  bool lhs_iri = false, rhs_iri = false;
  // qri: closed conic-hull subspace predicate on both sides
  bool lhs_qri = false, rhs_qri = false;
  /// The function has a single affine piece.
  bool affine_instance = false;

  bool holds() const { return lhs_ri == rhs_ri && lhs_iri == rhs_iri && lhs_qri == rhs_qri; }
};

struct FunctionContext {
  PLConvexFunction f;
  PreparedPolyhedron epi;
  PreparedPolyhedron domain;
};

FunctionContext prepare_function(const PLConvexFunction& f);
EpiRelintReport epi_relint_report(const PLConvexFunction& f, const RatVector& x, const Rational& lambda);
EpiRelintReport epi_relint_report(const FunctionContext& ctx, const RatVector& x, const Rational& lambda);

struct EpiQuasiRegularityReport {
  QuasiRegularityReport epi;
  QuasiRegularityReport domain;

  /// Only the direction epi quasi-regular => dom quasi-regular is checked.
  bool implication_holds() const { return !epi.verdict || domain.verdict; }
};

EpiQuasiRegularityReport epi_quasireg_implies_dom(const PLConvexFunction& f);

struct CommutationReport {
  /// Forward samples p in ri(P) with their images tested in ri(A(P)).
  std::vector<RatVector> forward_samples;
  bool forward_ok = false;
  /// q = ri_point(A(P)) and a preimage strictly inside P.
  RatVector image_point;
  std::optional<RatVector> preimage;
  bool backward_ok = false;

  bool holds() const { return forward_ok && backward_ok; }
};

/// Checks A(ri P) = ri(A P) in both directions. Throws PreconditionError on
/// empty P, InputError on dimension mismatch.
CommutationReport linear_image_ri_commutes(const RatMatrix& A, const HPolyhedron& P);

struct DifferenceReport {
  CommutationReport commutation;  // for (x, y) -> x - y on P1 x P2
  /// Decomposition of the image point into parts from ri(P1) and ri(P2).
  std::optional<RatVector> part1;
  std::optional<RatVector> part2;

  bool holds() const { return commutation.holds(); }
};

DifferenceReport set_difference_ri_commutes(const HPolyhedron& P1, const HPolyhedron& P2);

/// Points to test the graph formula at: graph samples under `policy`.
std::vector<RatVector> graph_samples(const MapContext& ctx, const SamplingPolicy& policy = {});

}  // namespace relkit

#endif  // RELKIT_SETMAPS_HPP
