#pragma once

// Seeded generators for the property suites: labelled posets, generator sets,
// finite extensions, splitting instances and injective lattice maps.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sclat/generation.hpp"
#include "sclat/lattice.hpp"
#include "sclat/sublattice.hpp"

namespace sclat::rnd {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Random labels in [0, max_label] and random relations between irreducibles
/// whose labels increase; the order is the transitive closure.
inline IrrPoset random_poset(Rng& rng, std::size_t max_irr, int max_label, double density = 0.4) {
  const auto n = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_irr)));
  std::vector<int> labels(n);
  for (auto& l : labels) l = uniform(rng, 0, max_label);
  IrrPoset P;
  P.d = max_label;
  for (std::size_t j = 0; j < n; ++j) {
    IrrPoset::Node node{"a" + std::to_string(j), labels[j], {}};
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] < labels[j] && coin(rng, density)) node.covers.push_back("a" + std::to_string(i));
    P.irreducibles.push_back(std::move(node));
  }
  return P;
}

inline Lattice random_lattice(Rng& rng, std::size_t max_irr, int max_label, double density = 0.4) {
  return Lattice::from_poset(random_poset(rng, max_irr, max_label, density));
}

/// The same order with every irreducible labelled by its height.
inline Lattice height_labelled(const Lattice& L) {
  IrrPoset P = L.to_poset();
  for (auto& node : P.irreducibles) node.dim = L.height(*L.index_of(node.id));
  return Lattice::from_poset(P);
}

inline Elem random_elem(Rng& rng, const Lattice& L) {
  Mask m = 0;
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i)
    if (coin(rng, 0.35)) m |= bits::bit(i);
  return L.down_closure(m);
}

inline std::vector<Elem> random_gens(Rng& rng, const Lattice& L, int max_gens) {
  std::vector<Elem> out(static_cast<std::size_t>(uniform(rng, 0, max_gens)));
  for (auto& e : out) e = random_elem(rng, L);
  return out;
}

/// A finite extension L0 of the substructure generated by random elements.
struct Extension {
  Lattice lattice;
  SubLattice base;
};

inline Extension random_extension(Rng& rng, std::size_t max_irr, int max_label) {
  Lattice L = random_lattice(rng, max_irr, max_label);
  SubLattice S = closure(L, random_gens(rng, L, 2));
  return {L, S};
}

struct SplitInstance {
  Lattice lattice;
  Elem a, b1, b2;
};

/// A nonzero a with b1 v b2 << a; nullopt when the drawn lattice has none.
inline std::optional<SplitInstance> random_split_instance(Rng& rng, std::size_t max_irr, int max_label) {
  Lattice L = random_lattice(rng, max_irr, max_label);
  const auto els = L.elements();
  std::vector<Elem> nonzero;
  for (const Elem& e : els)
    if (!e.is_zero()) nonzero.push_back(e);
  if (nonzero.empty()) return std::nullopt;
  const Elem a = nonzero[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nonzero.size()) - 1))];
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const Elem& b1 : els)
    for (const Elem& b2 : els)
      if (L.way_below(L.join(b1, b2), a)) pairs.emplace_back(b1, b2);
  if (pairs.empty()) return std::nullopt;
  const auto& [b1, b2] = pairs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pairs.size()) - 1))];
  return SplitInstance{L, a, b1, b2};
}

/// Inclusion of the {v, ^}-closure of random elements, viewed as a lattice in
/// its own right; labels are the parent sc-dimensions when those increase
/// strictly, random increasing labels otherwise.
inline LatticeMap random_lattice_map(Rng& rng, std::size_t max_irr, int max_label) {
  const Lattice T = random_lattice(rng, max_irr, max_label);
  std::vector<Elem> members = random_gens(rng, T, 3);
  if (coin(rng, 0.3))
    for (std::size_t i = 0; i < T.num_irreducibles(); ++i) members.push_back(T.irr(i));
  members.push_back(T.zero());
  members.push_back(T.one());
  for (bool grew = true; grew;) {
    grew = false;
    SubLattice S(T, members);
    for (const Elem& a : S.members())
      for (const Elem& b : S.members())
        for (const Elem& c : {T.join(a, b), T.meet(a, b)})
          if (!S.contains(c)) {
            members.push_back(c);
            grew = true;
          }
  }
  const SubLattice S(T, members);
  const std::vector<Elem> irr = S.irreducibles();
  std::vector<int> labels;
  bool strict = true;
  for (const Elem& e : irr) labels.push_back(T.sc_dim(e));
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (T.lt(irr[i], irr[j]) && labels[i] >= labels[j]) strict = false;
  if (!strict || coin(rng, 0.25)) {
    // height in the sublattice order plus a random bump
    for (std::size_t j = 0; j < irr.size(); ++j) labels[j] = 0;
    for (std::size_t j = 0; j < irr.size(); ++j)
      for (std::size_t i = 0; i < irr.size(); ++i)
        if (T.lt(irr[i], irr[j])) labels[j] = std::max(labels[j], labels[i] + 1);
    for (auto& l : labels) l = std::min(l + uniform(rng, 0, 1), max_label + 1);
    for (std::size_t j = 0; j < irr.size(); ++j)
      for (std::size_t i = 0; i < irr.size(); ++i)
        if (T.lt(irr[i], irr[j]) && labels[i] >= labels[j]) labels[j] = labels[i] + 1;
  }
  return as_lattice(S, labels).inclusion;
}

}  // namespace sclat::rnd
