#ifndef HYPERFIX_COMMON_HPP
#define HYPERFIX_COMMON_HPP

#include <cstdint>
#include <cstdio>
#include <string>

namespace hyperfix {

// Absolute tolerance for geometry predicates (box emptiness, membership).
inline constexpr double kGeomTol = 1e-12;

// Tolerance used when deduplicating orbit points before center calculus.
inline constexpr double kDedupeTol = 1e-12;

// Iteration defaults.
inline constexpr double kDefaultIterTol = 1e-10;
inline constexpr int kDefaultMaxIter = 200;

// Default grid steps for the brute-force oracles.
inline constexpr double kDefaultGridStep = 1e-3;
inline constexpr double kCircleGridStep = 1e-4;

// Slack allowed when auditing sampled inequalities.
inline constexpr double kAuditSlack = 1e-9;

inline constexpr double kTau = 6.283185307179586476925286766559005768;  // 2*pi

// Deterministic, platform-independent generator (splitmix64). The standard
// distributions are implementation-defined, which would break byte-identical
// reports across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

 private:
  std::uint64_t state_;
};

// 17 significant digits: enough to round-trip any double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace hyperfix

#endif
