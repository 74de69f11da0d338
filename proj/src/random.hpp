#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace watset {

// Deterministic sampling on top of mt19937_64. The standard distributions
// are implementation-defined, so seeded results would not be portable
// across toolchains; these explicit constructions are.

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound > 0 ? rng() % bound : 0;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace watset
