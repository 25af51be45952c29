#ifndef RELKIT_SEPARATION_HPP
#define RELKIT_SEPARATION_HPP

#include <optional>
#include <variant>

#include "relkit/polyhedron.hpp"
#include "relkit/relint.hpp"

namespace relkit {

/// Evidence that x* properly separates two sets:
///   sup <x*, S1> <= sup1 <= inf2 <= inf <x*, S2>
///   <x*, strict_witness_1> < <x*, strict_witness_2>.
/// A missing bound stands for +inf (sup1) or -inf (inf2); such a
/// certificate never validates.
struct SeparationCertificate {
  RatVector functional;
  std::optional<Rational> sup1;
  std::optional<Rational> inf2;
  RatVector strict_witness_1;
  RatVector strict_witness_2;
};

/// A point of ri(S1) and ri(S2) at once.
struct DisjointnessWitness {
  RatVector common_point;
};

struct SeparationResult {
  std::variant<SeparationCertificate, DisjointnessWitness> value;

  bool separated() const { return std::holds_alternative<SeparationCertificate>(value); }
  const SeparationCertificate& certificate() const { return std::get<SeparationCertificate>(value); }
  const DisjointnessWitness& witness() const { return std::get<DisjointnessWitness>(value); }
};

/// Proper separation through D = P1 - P2 versus {0}:
///   max  sum_g -<x*, g>  over generators g of D
///   s.t. <x*, g> <= 0 for all g,  -1 <= x*_k <= 1.
/// A positive optimum yields a certificate; otherwise the joint slack LP
/// produces a point of ri(P1) and ri(P2). Throws PreconditionError on empty
/// input, InputError on dimension mismatch.
SeparationResult properly_separate(const HPolyhedron& P1, const HPolyhedron& P2);
SeparationResult properly_separate(const PreparedPolyhedron& P1, const PreparedPolyhedron& P2);

/// Checks both certificate inequalities directly against the generators of
/// each set, independent of how the certificate was produced.
bool verify_separation(const SeparationCertificate& cert, const HPolyhedron& P1, const HPolyhedron& P2);
bool verify_separation(const SeparationCertificate& cert, const VPolyhedron& V1, const VPolyhedron& V2);

bool verify_disjointness_witness(const DisjointnessWitness& w, const HPolyhedron& P1,
                                 const HPolyhedron& P2);

/// Joint slack LP: a point strictly inside every non-implicit row of both
/// sets, or nullopt when ri(P1) and ri(P2) do not meet.
std::optional<RatVector> common_relative_interior_point(const PreparedPolyhedron& P1,
                                                        const PreparedPolyhedron& P2);

struct QriSeparationReport {
  bool outside_qri = false;  // {x} and P properly separable
  std::optional<SeparationCertificate> certificate;  // for the pair ({x}, P)
  /// Set when x lies in P: the normal-cone subspace predicate, which must be
  /// the negation of outside_qri.
  std::optional<bool> normal_cone_subspace;

  bool consistent() const { return !normal_cone_subspace || *normal_cone_subspace != outside_qri; }
};

/// x is outside the quasi-relative interior iff {x} and P can be properly
/// separated.
QriSeparationReport qri_nonmembership_via_separation(const HPolyhedron& P, const RatVector& x);
QriSeparationReport qri_nonmembership_via_separation(const PreparedPolyhedron& P, const RatVector& x);

/// Nonzero u in the linear subspace L with sup <u, P> < <u, x>. Strictly
/// separates in the ambient space by a margin LP, then projects the
/// functional onto L. Throws PreconditionError when L is not linear, P is
/// not inside L, x is not in L, or x lies in P.
RatVector strict_separate_in_flat(const AffineFlat& L, const HPolyhedron& P, const RatVector& x);

/// Verifies the output of strict_separate_in_flat exactly.
bool verify_strict_in_flat(const AffineFlat& L, const HPolyhedron& P, const RatVector& x,
                           const RatVector& u);

struct SeparationEquivalenceReport {
  bool separated = false;
  bool ri_disjoint = false;
  /// qri-analogue disjointness; coincides with ri for polyhedra.
  bool qri_disjoint = false;
  bool qri_structural = true;
  bool certificate_valid = false;  // certificate or witness re-validated
  SeparationResult separation;

  bool equivalent() const { return separated == ri_disjoint && separated == qri_disjoint; }
};

SeparationEquivalenceReport separation_iff_ri_disjoint(const HPolyhedron& P1, const HPolyhedron& P2);
SeparationEquivalenceReport separation_iff_ri_disjoint(const PreparedPolyhedron& P1,
                                                       const PreparedPolyhedron& P2);

}  // namespace relkit

#endif  // RELKIT_SEPARATION_HPP
