#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace sclat {

/// Set of irreducible indices. Bit i stands for the i-th irreducible of a lattice.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxIrreducibles = 64;

namespace bits {

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }

constexpr int count(Mask m) { return std::popcount(m); }

constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

template <class F>
constexpr void for_each(Mask m, F&& f) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

}  // namespace bits
}  // namespace sclat
