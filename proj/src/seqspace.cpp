#include "relkit/seqspace.hpp"

#include "relkit/errors.hpp"

namespace relkit {

void HybridSeq::validate() const {
  if (!tail) return;
  if (sgn(tail->q) <= 0 || tail->q >= 1) throw InputError("tail ratio q must lie in (0, 1)");
  if (tail->start < prefix.size() + 1) throw InputError("tail start overlaps the prefix");
}

bool HybridSeq::finite_support() const { return !tail || sgn(tail->c) == 0; }

Rational HybridSeq::at(std::size_t k) const {
  if (k == 0) throw InputError("sequence indices start at 1");
  if (k <= prefix.size()) return prefix[k - 1];
  if (!tail || k < tail->start) return 0;
  Rational v = tail->c;
  for (std::size_t i = tail->start; i < k; ++i) v *= tail->q;
  return v;
}

RatVector HybridSeq::truncate(std::size_t count) const {
  RatVector v(count);
  for (std::size_t k = 1; k <= count; ++k) v[k - 1] = at(k);
  return v;
}

HybridSeq HybridSeq::scaled(const Rational& t) const {
  HybridSeq s = *this;
  for (auto& x : s.prefix) x *= t;
  if (s.tail) s.tail->c *= t;
  return s;
}

Rational l1_norm(const HybridSeq& x) {
  x.validate();
  Rational s = 0;
  for (const auto& v : x.prefix) s += abs(v);
  if (x.tail) s += abs(x.tail->c) / (1 - x.tail->q);
  return s;
}

Rational l2_norm_squared(const HybridSeq& x) {
  x.validate();
  Rational s = 0;
  for (const auto& v : x.prefix) s += v * v;
  if (x.tail) s += x.tail->c * x.tail->c / (1 - x.tail->q * x.tail->q);
  return s;
}

L1BallClassification classify_l1ball(const HybridSeq& x) {
  const Rational norm = l1_norm(x);
  L1BallClassification c;
  c.finite_support = x.finite_support();
  c.in_set = norm <= 1;
  c.in_iri = norm < 1;
  c.in_qri = c.in_set && !(norm == 1 && c.finite_support);
  return c;
}

GapWitness quasi_regularity_gap_witness() {
  HybridSeq x;
  x.tail = GeometricTail{Rational(1, 2), Rational(1, 2), 1};
  return GapWitness{x, classify_l1ball(x)};
}

bool is_gap_witness(const HybridSeq& x) {
  const auto c = classify_l1ball(x);
  return c.in_qri && !c.in_iri;
}

}  // namespace relkit
