#include "relkit/rational.hpp"

#include <cctype>

#include "relkit/errors.hpp"

namespace relkit {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw InputError(std::string("dimension mismatch: ") + what + " has " + std::to_string(got) +
                     ", expected " + std::to_string(want));
  }
}

RatMatrix::RatMatrix(std::size_t nrows, std::size_t ncols)
    : rows_(nrows, RatVector(ncols)), ncols_(ncols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows, std::size_t ncols)
    : rows_(std::move(rows)), ncols_(ncols) {
  for (const auto& r : rows_) require_dim(r.size(), ncols_, "matrix row");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::append_row(RatVector r) {
  require_dim(r.size(), ncols_, "matrix row");
  rows_.push_back(std::move(r));
}

RatVector RatMatrix::operator*(const RatVector& x) const {
  require_dim(x.size(), ncols_, "vector");
  RatVector y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  require_dim(other.nrows(), ncols_, "matrix product inner dimension");
  RatMatrix out(nrows(), other.ncols());
  for (std::size_t i = 0; i < nrows(); ++i) {
    for (std::size_t k = 0; k < ncols_; ++k) {
      if (sgn(rows_[i][k]) == 0) continue;
      for (std::size_t j = 0; j < other.ncols(); ++j) out(i, j) += rows_[i][k] * other(k, j);
    }
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(ncols_, nrows());
  for (std::size_t i = 0; i < nrows(); ++i)
    for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

namespace {

mpz_class parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) throw InputError("malformed rational");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw InputError("malformed rational");
  }
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rational dot(const RatVector& a, const RatVector& b) {
  require_dim(b.size(), a.size(), "dot operand");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_dim(b.size(), a.size(), "vector sum operand");
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_dim(b.size(), a.size(), "vector difference operand");
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RatVector operator-(const RatVector& a) {
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
  return c;
}

RatVector zeros(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector e(n);
  e[i] = 1;
  return e;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RatVector concat(const RatVector& a, const RatVector& b) {
  RatVector c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

RatVector primitive(const RatVector& v) {
  if (is_zero(v)) return v;
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(lcm_den, g);
  scale.canonicalize();
  return scale * v;
}

}  // namespace relkit
