#pragma once

// Isomorphism search between finite subscaled lattices: a label-preserving
// order isomorphism of the irreducible posets, optionally required to match
// given pairs of elements and extra per-irreducible colours.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "sclat/lattice.hpp"
#include "sclat/sublattice.hpp"

namespace sclat {

struct IsoConstraints {
  // (a, b) pairs: the isomorphism must send a to b
  std::vector<std::pair<Elem, Elem>> over;
  // optional colours per irreducible (by internal index); must match
  std::vector<long> color_src;
  std::vector<long> color_tgt;
};

namespace detail {

inline std::vector<std::vector<long>> iso_keys(const Lattice& L, const std::vector<Elem>& over_side,
                                               const std::vector<long>& color) {
  std::vector<std::vector<long>> keys(L.num_irreducibles());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto& k = keys[i];
    k.push_back(L.dim_label(i));
    k.push_back(bits::count(L.below(i)));
    k.push_back(bits::count(L.above(i)));
    k.push_back(bits::count(L.covers_of(i)));
    k.push_back(color.empty() ? 0 : color.at(i));
    for (const Elem& e : over_side) k.push_back(bits::has(e.ideal(), i) ? 1 : 0);
  }
  return keys;
}

}  // namespace detail

inline std::optional<LatticeMap> iso(const Lattice& A, const Lattice& B, const IsoConstraints& c = {}) {
  const std::size_t n = A.num_irreducibles();
  if (n != B.num_irreducibles()) return std::nullopt;
  std::vector<Elem> over_a, over_b;
  for (const auto& [a, b] : c.over) {
    A.own(a);
    B.own(b);
    over_a.push_back(a);
    over_b.push_back(b);
  }
  const auto ka = detail::iso_keys(A, over_a, c.color_src);
  const auto kb = detail::iso_keys(B, over_b, c.color_tgt);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  const std::vector<std::size_t> order = A.linear_extension();
  std::vector<int> pi(n, -1);
  Mask used = 0;

  auto fits = [&](std::size_t pos, std::size_t j) {
    const std::size_t i = order[pos];
    if (ka[i] != kb[j]) return false;
    for (std::size_t q = 0; q < pos; ++q) {
      const std::size_t ip = order[q];
      const auto jp = static_cast<std::size_t>(pi[ip]);
      if (bits::has(A.below(i), ip) != bits::has(B.below(j), jp)) return false;
      if (bits::has(B.below(jp), j)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (bits::has(used, j) || !fits(pos, j)) continue;
      pi[order[pos]] = static_cast<int>(j);
      used |= bits::bit(j);
      if (self(self, pos + 1)) return true;
      used &= ~bits::bit(j);
      pi[order[pos]] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  std::vector<Elem> imgs;
  for (std::size_t i = 0; i < n; ++i) imgs.push_back(B.irr(static_cast<std::size_t>(pi[i])));
  return LatticeMap(A, B, std::move(imgs));
}

}  // namespace sclat
