#pragma once

#include <cstdint>
#include <random>

namespace smoothlab {

// Seeded random source shared by adversaries and learners.
//
// The engine is std::mt19937_64 (bit-exact across standard libraries); the
// derived draws below are implemented here instead of via <random>
// distributions, whose outputs are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform on [lo, hi], inclusive; the full 64-bit range is allowed.
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi);

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform01();

  bool coin() { return (engine_() >> 63) != 0; }

  // Independent generator for a numbered sub-stream of this seed.
  Rng derive(std::uint64_t stream) const { return Rng(seed_, stream); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace smoothlab
