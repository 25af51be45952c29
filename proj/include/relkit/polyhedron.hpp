#ifndef RELKIT_POLYHEDRON_HPP
#define RELKIT_POLYHEDRON_HPP

#include <optional>
#include <vector>

#include "relkit/rational.hpp"

namespace relkit {

/// {x in R^dim : A x <= b, E x = d}. Redundant rows are allowed and kept.
struct HPolyhedron {
  RatMatrix A;
  RatVector b;
  RatMatrix E;
  RatVector d;
  std::size_t dim = 0;

  HPolyhedron() = default;
  explicit HPolyhedron(std::size_t n) : A(n), E(n), dim(n) {}
  HPolyhedron(RatMatrix A, RatVector b, RatMatrix E, RatVector d, std::size_t dim);

  static HPolyhedron universe(std::size_t n) { return HPolyhedron(n); }
  /// The infeasible system {0 . x <= -1}.
  static HPolyhedron empty_set(std::size_t n);
  static HPolyhedron point(const RatVector& p);
  /// Axis-aligned box prod [lo_i, hi_i].
  static HPolyhedron box(const RatVector& lo, const RatVector& hi);

  void add_le(RatVector row, Rational rhs);
  void add_eq(RatVector row, Rational rhs);

  /// Throws InputError when the blocks disagree with `dim`.
  void validate() const;

  friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;
};

/// conv(points) + cone(rays). No points means the empty set, whatever the
/// rays. A line is stored as the ray pair {r, -r}.
struct VPolyhedron {
  std::vector<RatVector> points;
  std::vector<RatVector> rays;
  std::size_t dim = 0;

  bool empty() const { return points.empty(); }
  friend bool operator==(const VPolyhedron&, const VPolyhedron&) = default;
};

/// basepoint + span(directions), directions linearly independent.
struct AffineFlat {
  RatVector basepoint;
  std::vector<RatVector> directions;
  std::size_t dim = 0;

  std::size_t flat_dim() const { return directions.size(); }
  bool contains(const RatVector& x) const;
  bool is_linear_subspace() const;
  /// Implicit-equality description {x : E x = d}.
  HPolyhedron as_polyhedron() const;
};

/// cone(generators) = {sum t_i g_i : t_i >= 0}; always contains 0.
struct PolyCone {
  std::vector<RatVector> generators;
  std::size_t dim = 0;
};

/// Extreme rays and a lineality basis of {y : ineq y <= 0, eq y = 0}.
struct ConeGenerators {
  std::vector<RatVector> extreme_rays;
  std::vector<RatVector> lineality;
};

/// Double description with rows inserted in index order; two rays are
/// adjacent iff their common active rows have rank (pointed dim - 2).
ConeGenerators cone_generators(const RatMatrix& ineq, const RatMatrix& eq);

bool contains(const HPolyhedron& P, const RatVector& x);
/// A r <= 0 and E r = 0.
bool in_recession_cone(const HPolyhedron& P, const RatVector& r);
/// Membership by LP: x = sum l_i p_i + sum m_j r_j, l >= 0, sum l = 1, m >= 0.
bool contains(const VPolyhedron& V, const RatVector& x);
bool cone_contains(const PolyCone& C, const RatVector& x);

/// Returns a witness point when nonempty, nullopt when empty.
std::optional<RatVector> find_point(const HPolyhedron& P);
bool is_empty(const HPolyhedron& P);

/// Row i is an implicit equality iff min a_i . x over P equals b_i.
/// Precondition: P nonempty.
std::vector<bool> implicit_rows(const HPolyhedron& P);

/// Throws PreconditionError on empty P.
AffineFlat affine_hull(const HPolyhedron& P);
std::size_t dimension(const HPolyhedron& P);

VPolyhedron h_to_v(const HPolyhedron& P);
HPolyhedron v_to_h(const VPolyhedron& V);

/// Mutual containment via generators of each side.
bool same_set(const HPolyhedron& P, const HPolyhedron& Q);
/// Every generator of V lies in P (points as members, rays as recession
/// directions).
bool generators_within(const VPolyhedron& V, const HPolyhedron& P);

/// Generator form of the image {M x : x in V}.
VPolyhedron linear_image(const RatMatrix& M, const VPolyhedron& V);
HPolyhedron linear_image(const RatMatrix& M, const HPolyhedron& P);

/// Generators of V1 - V2: pairwise point differences, rays of V1 and
/// negated rays of V2.
VPolyhedron minkowski_diff(const VPolyhedron& V1, const VPolyhedron& V2);
HPolyhedron minkowski_diff(const HPolyhedron& P1, const HPolyhedron& P2);

/// Block-diagonal stacking; dim = dim1 + dim2.
HPolyhedron product(const HPolyhedron& P1, const HPolyhedron& P2);

/// Drops duplicate rows (after primitive scaling) and trivially true rows.
/// Never called implicitly by other operations.
HPolyhedron canonicalize(const HPolyhedron& P);

}  // namespace relkit

#endif  // RELKIT_POLYHEDRON_HPP
