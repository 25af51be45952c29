#include "relkit/sampling.hpp"

#include <algorithm>
#include <set>

namespace relkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

std::vector<RatVector> sample_points(const PreparedPolyhedron& P, const SamplingPolicy& policy) {
  if (P.empty()) return {};
  std::vector<RatVector> out;
  std::set<RatVector> seen;
  auto push = [&](RatVector x) {
    if (seen.insert(x).second) out.push_back(std::move(x));
  };

  const auto& pts = P.v.points;
  for (const auto& p : pts) push(p);
  std::size_t mids = 0;
  for (std::size_t i = 0; i < pts.size() && mids < policy.max_midpoints; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && mids < policy.max_midpoints; ++j, ++mids) {
      push(Rational(1, 2) * (pts[i] + pts[j]));
    }
  }
  push(ri_point(P));

  SplitMix64 rng(policy.seed);
  for (std::size_t k = 0; k < policy.random_combinations; ++k) {
    RatVector x = zeros(P.h.dim);
    Rational total = 0;
    std::vector<Rational> w(pts.size());
    for (auto& wi : w) {
      wi = static_cast<long>(rng.uniform(0, 9));
      total += wi;
    }
    if (sgn(total) == 0) {
      w[0] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (sgn(w[i]) != 0) x = x + (w[i] / total) * pts[i];
    if (!P.v.rays.empty() && rng.uniform(0, 1) == 1) {
      const auto& r = P.v.rays[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(P.v.rays.size()) - 1))];
      const long num = rng.uniform(1, 5);
      const long den = rng.uniform(1, 3);
      Rational scale(num, den);
      scale.canonicalize();
      x = x + scale * r;
    }
    push(std::move(x));
  }
  return out;
}

}  // namespace relkit
