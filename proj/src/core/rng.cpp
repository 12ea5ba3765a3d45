#include "smoothlab/core/rng.hpp"

#include <limits>

namespace smoothlab {

namespace {

__extension__ using u128 = unsigned __int128;

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed),
                       static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(stream >> 32)};
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  auto seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection; unbiased for every bound.
  u128 product = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t Rng::uniform_between(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0 && hi == std::numeric_limits<std::uint64_t>::max()) {
    return engine_();
  }
  return lo + uniform_below(hi - lo + 1);
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace smoothlab
