#ifndef RELKIT_LINALG_HPP
#define RELKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "relkit/rational.hpp"

namespace relkit {

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Rref {
  RatMatrix reduced;                 // zero rows removed
  std::vector<std::size_t> pivots;   // pivots[r] is the pivot column of row r
};

Rref rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Basis of the row space (the nonzero rows of the echelon form).
std::vector<RatVector> row_basis(const RatMatrix& m);

/// Exact parametrization of {x : E x = d} as particular + span(basis).
struct LinearSolution {
  RatVector particular;
  std::vector<RatVector> nullspace_basis;
};

/// Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear_system(const RatMatrix& E, const RatVector& d);

/// Orthogonal projection of v onto span(basis); basis must be linearly
/// independent.
RatVector project_onto_span(const RatVector& v, const std::vector<RatVector>& basis);

bool in_span(const RatVector& v, const std::vector<RatVector>& basis);

}  // namespace relkit

#endif  // RELKIT_LINALG_HPP
