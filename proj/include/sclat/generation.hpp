#pragma once

// Finitely generated substructures and their size bound mu(n, d), enumeration
// of labelled posets up to isomorphism, and prime lattices.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "sclat/lattice.hpp"
#include "sclat/sublattice.hpp"

namespace sclat {

/// mu(n, -1) = 0, mu(n, d) = 2^n + mu(2^(n+1), d - 1).
inline mpz_class mu(unsigned long n, int d) {
  if (d < -1) throw Error(ErrorKind::InvalidInput, "d must be >= -1");
  mpz_class out = 0;
  mpz_class e = n;
  for (int k = d; k >= 0; --k) {
    if (e > 1UL << 34) throw Error(ErrorKind::SizeLimit, "mu value too large to materialise");
    const unsigned long ei = e.get_ui();
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, ei);
    out += p;
    e = p * 2;
  }
  return out;
}

/// count <= mu(n, d), decided without materialising mu when it is huge.
inline bool within_mu(std::uint64_t count, std::uint64_t n, int d) {
  while (true) {
    if (d < 0) return count == 0;
    if (n >= 63) return true;
    const std::uint64_t p = std::uint64_t{1} << n;
    if (count <= p) return true;
    count -= p;
    n = n + 1 >= 63 ? 63 : (std::uint64_t{1} << (n + 1));
    --d;
  }
}

/// Smallest substructure containing gens, 0 and 1: closed under v, ^, - and C^k
/// for k <= d. Checks the finiteness certificate |I(closure)| <= mu(|gens|, sc-dim).
inline SubLattice closure(const Lattice& L, const std::vector<Elem>& gens) {
  for (const Elem& g : gens)
    if (!L.contains(g)) throw Error(ErrorKind::GeneratorNotInLattice, "generator outside the lattice");

  std::unordered_set<Mask> seen;
  std::vector<Elem> members;
  std::deque<Elem> queue;
  auto push = [&](const Elem& e) {
    if (seen.insert(e.ideal()).second) {
      members.push_back(e);
      queue.push_back(e);
    }
  };
  push(L.zero());
  push(L.one());
  for (const Elem& g : gens) push(g);

  while (!queue.empty()) {
    const Elem a = queue.front();
    queue.pop_front();
    for (int k = 0; k <= L.d(); ++k) push(L.c_k(a, k));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem b = members[i];
      push(L.join(a, b));
      push(L.meet(a, b));
      push(L.minus(a, b));
      push(L.minus(b, a));
    }
  }

  SubLattice S(L, members);
  std::set<Mask> distinct;
  for (const Elem& g : gens) distinct.insert(g.ideal());
  const std::size_t n_irr = S.irreducibles().size();
  ensure(within_mu(n_irr, distinct.size(), L.sc_dim(L.one())),
         "closure exceeds the mu(n, d) bound on irreducibles");
  return S;
}

/// Labelled posets with at most max_irr irreducibles and labels in [0, max_label],
/// one representative per isomorphism class. Irreducibles are named v0, v1, ...
/// in nondecreasing label order. The language bound of each lattice is max_label.
inline std::vector<Lattice> enumerate_posets(std::size_t max_irr, int max_label) {
  if (max_irr > 6) throw Error(ErrorKind::SizeLimit, "poset enumeration is limited to 6 irreducibles");
  std::vector<Lattice> out;
  for (std::size_t n = 0; n <= max_irr; ++n) {
    // nondecreasing label sequences
    std::vector<int> labels(n, 0);
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (labels[i] < labels[j]) pairs.emplace_back(i, j);

      // label-preserving permutations
      std::vector<std::vector<std::size_t>> perms;
      {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          bool ok = true;
          for (std::size_t i = 0; i < n && ok; ++i) ok = labels[p[i]] == labels[i];
          if (ok) perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
      }

      std::set<std::uint64_t> codes;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
        std::vector<Mask> below(n, 0);
        for (std::size_t t = 0; t < pairs.size(); ++t)
          if ((s >> t) & 1U) below[pairs[t].second] |= bits::bit(pairs[t].first);
        bool transitive = true;
        for (std::size_t j = 0; j < n && transitive; ++j)
          bits::for_each(below[j], [&](std::size_t i) { transitive = transitive && bits::subset(below[i], below[j]); });
        if (!transitive) continue;
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& p : perms) {
          std::uint64_t code = 0;
          for (std::size_t j = 0; j < n; ++j)
            bits::for_each(below[j], [&](std::size_t i) { code |= std::uint64_t{1} << (p[i] * n + p[j]); });
          best = std::min(best, code);
        }
        if (!codes.insert(best).second) continue;

        IrrPoset P;
        P.d = max_label;
        for (std::size_t j = 0; j < n; ++j) {
          IrrPoset::Node node{"v" + std::to_string(j), labels[j], {}};
          bits::for_each(below[j], [&](std::size_t i) { node.covers.push_back("v" + std::to_string(i)); });
          P.irreducibles.push_back(std::move(node));
        }
        out.push_back(Lattice::from_poset(P));
      }

      // next label sequence
      std::size_t pos = n;
      while (pos > 0 && labels[pos - 1] == max_label) --pos;
      if (pos == 0) break;
      ++labels[pos - 1];
      for (std::size_t i = pos; i < n; ++i) labels[i] = labels[pos - 1];
    }
  }
  return out;
}

/// Lattices with no proper substructure (generated by the empty set), up to
/// isomorphism, with labels <= d and at most max_irr irreducibles.
inline std::vector<Lattice> enumerate_primes(int d, std::size_t max_irr) {
  std::vector<Lattice> out;
  for (const Lattice& L : enumerate_posets(max_irr, d))
    if (closure(L, {}).size() == L.count_elements()) out.push_back(L);
  return out;
}

}  // namespace sclat
