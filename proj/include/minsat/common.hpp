#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minsat {

/// Thrown when a generator or solver refuses an input that exceeds its
/// configured size guard. The CLI maps this to its own exit code.
class size_guard_error : public std::runtime_error {
 public:
  explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Deterministic 64-bit generator (splitmix64). All randomness in the
/// library and harness flows through instances of this type so that a
/// seed fully determines every output.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  bool coin() { return next() & 1; }
};

}  // namespace minsat
