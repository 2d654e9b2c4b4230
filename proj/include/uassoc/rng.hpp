#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace uassoc {

/// splitmix64 generator.
///
/// Scenario files record this algorithm by name ("splitmix64") so that
/// generated instances reproduce across implementations. The constants below
/// are part of that contract; do not change them.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  /// Derive an independent stream for (seed, stream_id). The seed is remixed
  /// so that distinct streams are not shifted copies of one another.
  static SplitMix64 stream(uint64_t seed, uint64_t stream_id) {
    return SplitMix64(mix(seed ^ mix(0x6a09e667f3bcc909ULL + stream_id)));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Requires n >= 1.
  int next_below(int n) { return static_cast<int>(next_double() * n); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[next_below(i + 1)]);
    return p;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace uassoc
