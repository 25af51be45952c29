#ifndef RELKIT_SAMPLING_HPP
#define RELKIT_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "relkit/relint.hpp"

namespace relkit {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Deterministic sample of points of a nonempty polyhedron: generator
/// points, pairwise midpoints (up to `max_midpoints`), ri_point, and
/// `random_combinations` random rational convex combinations (plus a random
/// ray multiple when the set is unbounded). Duplicates are removed, order
/// is stable. Empty sets yield no samples.
struct SamplingPolicy {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_combinations = 10;
  std::size_t max_midpoints = 64;
};

std::vector<RatVector> sample_points(const PreparedPolyhedron& P, const SamplingPolicy& policy = {});

/// Small portable generator (splitmix64); std distributions are not
/// reproducible across standard libraries.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
  std::uint64_t state_;
};

}  // namespace relkit

#endif  // RELKIT_SAMPLING_HPP
