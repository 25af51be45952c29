#ifndef RELKIT_RATIONAL_HPP
#define RELKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace relkit {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (positive denominator, reduced) after each arithmetic operation.
using Rational = mpq_class;

/// Dense vector of exact rationals.
using RatVector = std::vector<Rational>;

/// Row-major dense matrix. `ncols` is stored explicitly so that a matrix
/// with zero rows still knows its width.
class RatMatrix {
public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t ncols) : ncols_(ncols) {}
  RatMatrix(std::size_t nrows, std::size_t ncols);
  /// Throws InputError when some row has length != ncols.
  RatMatrix(std::vector<RatVector> rows, std::size_t ncols);

  static RatMatrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool empty() const { return rows_.empty(); }

  const RatVector& row(std::size_t i) const { return rows_[i]; }
  RatVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<RatVector>& rows() const { return rows_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  /// Throws InputError on length mismatch.
  void append_row(RatVector r);

  RatVector operator*(const RatVector& x) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::vector<RatVector> rows_;
  std::size_t ncols_ = 0;
};

/// Parses "p", "-p", "p/q" (q may carry a sign). Throws InputError with
/// message "zero denominator" or "malformed rational".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p".
std::string to_string(const Rational& r);
std::string to_string(const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Rational& s, const RatVector& v);

RatVector zeros(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& v);
RatVector concat(const RatVector& a, const RatVector& b);

/// Positive rescaling of `v` to the primitive integer vector on the same
/// ray. The zero vector is returned unchanged.
RatVector primitive(const RatVector& v);

}  // namespace relkit

#endif  // RELKIT_RATIONAL_HPP
