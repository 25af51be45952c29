#ifndef RELKIT_SEQSPACE_HPP
#define RELKIT_SEQSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "relkit/rational.hpp"

namespace relkit {

/// x_k = c * q^(k - start) for k >= start, with 0 < q < 1.
struct GeometricTail {
  Rational c;
  Rational q;
  std::size_t start = 1;
};

/// A point of l^2 (and l^1): a rational prefix x_1 .. x_{len} followed by
/// zeros up to the tail start, then an optional geometric tail. Indices are
/// 1-based, as for sequences.
struct HybridSeq {
  std::vector<Rational> prefix;
  std::optional<GeometricTail> tail;

  /// Throws InputError when q is outside (0, 1) or the tail starts inside
  /// the prefix.
  void validate() const;
  bool finite_support() const;
  /// Exact k-th entry, k >= 1.
  Rational at(std::size_t k) const;
  /// First `count` entries as a vector of R^count.
  RatVector truncate(std::size_t count) const;
  HybridSeq scaled(const Rational& t) const;
};

Rational l1_norm(const HybridSeq& x);
Rational l2_norm_squared(const HybridSeq& x);

/// Membership of x in the l^1 unit ball of l^2 and in its intrinsic and
/// quasi-relative interiors:
///   iri = {||x||_1 < 1},
///   qri = ball minus the finitely supported points with ||x||_1 = 1.
struct L1BallClassification {
  bool in_set = false;
  bool in_iri = false;
  bool in_qri = false;
  bool finite_support = false;

  bool chain_holds() const { return (!in_iri || in_qri) && (!in_qri || in_set); }
};

L1BallClassification classify_l1ball(const HybridSeq& x);

struct GapWitness {
  HybridSeq point;
  L1BallClassification classification;
};

/// A point of qri \ iri of the l^1 ball: the unit-norm geometric sequence
/// (1/2, 1/4, 1/8, ...). Its existence shows the ball is not quasi-regular.
GapWitness quasi_regularity_gap_witness();

/// True iff x certifies the gap (in qri but not in iri).
bool is_gap_witness(const HybridSeq& x);

}  // namespace relkit

#endif  // RELKIT_SEQSPACE_HPP
