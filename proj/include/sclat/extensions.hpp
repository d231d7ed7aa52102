#pragma once

// Primitive extensions of finite subscaled lattices and their signatures:
// detection, enumeration, realization, isomorphism over the base, splitting
// extensions and the step-by-step embedding of an extension into a target.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sclat/generation.hpp"
#include "sclat/iso.hpp"
#include "sclat/lattice.hpp"
#include "sclat/sublattice.hpp"

namespace sclat {

/// (g, q, {h1, h2}). h1 and h2 are kept in the order they were produced so that
/// x_j ^ g^- = h_j; equality compares H as a set.
struct Signature {
  Elem g;
  int q = 0;
  Elem h1;
  Elem h2;

  Signature normalized() const {
    Signature s = *this;
    if (s.h2 < s.h1) std::swap(s.h1, s.h2);
    return s;
  }
  friend bool operator==(const Signature& a, const Signature& b) {
    const Signature x = a.normalized(), y = b.normalized();
    return x.g == y.g && x.q == y.q && x.h1 == y.h1 && x.h2 == y.h2;
  }
};

inline Elem predecessor(const SubLattice& S, const Elem& a) { return S.predecessor(a); }
inline Elem predecessor(const Lattice& L, const Elem& a) { return SubLattice::full(L).predecessor(a); }
inline Elem hull(const SubLattice& S, const Elem& x) { return S.hull(x); }

/// Sublattice image of a lattice map.
inline SubLattice image_of(const LatticeMap& f) {
  std::vector<Elem> els;
  for (const Elem& a : f.source().elements()) els.push_back(f(a));
  return SubLattice(f.target(), els);
}

inline Signature map_signature(const Signature& s, const LatticeMap& f) { return {f(s.g), s.q, f(s.h1), f(s.h2)}; }

// --- primitive tuples ------------------------------------------------------

namespace detail {

inline bool primitive_for(const SubLattice& S, const Elem& g, const Elem& x1, const Elem& x2) {
  const Lattice& L = S.parent();
  const int q = L.sc_dim(x1);
  if (x1.is_zero() || x2.is_zero()) return false;
  if (L.sc_dim(x2) != q || !L.is_pure(x1, q) || !L.is_pure(x2, q)) return false;
  const Elem gm = S.predecessor(g);
  if (!S.contains(L.meet(gm, x1)) || !S.contains(L.meet(gm, x2))) return false;
  if (x1 == x2) return L.way_below(L.meet(gm, x1), x1) && L.way_below(x1, g);
  return S.contains(L.meet(x1, x2)) && L.minus(g, x1) == x2 && L.minus(g, x2) == x1;
}

}  // namespace detail

/// (x1, x2) is primitive over S: for some irreducible g of S the three defining
/// conditions hold. Such a g is then the hull of both x1 and x2.
inline bool is_primitive(const SubLattice& S, const Elem& x1, const Elem& x2) {
  const Lattice& L = S.parent();
  L.own(x1);
  L.own(x2);
  for (const Elem& g : S.irreducibles()) {
    if (!detail::primitive_for(S, g, x1, x2)) continue;
    ensure(S.hull(x1) == g && S.hull(x2) == g, "primitive tuple whose hull is not g");
    return true;
  }
  return false;
}

inline Signature signature_of(const SubLattice& S, const Elem& x1, const Elem& x2) {
  if (!is_primitive(S, x1, x2)) throw Error(ErrorKind::NotPrimitive, "tuple is not primitive over the base");
  const Lattice& L = S.parent();
  const Elem g = S.hull(x1);
  const Elem gm = S.predecessor(g);
  return {g, L.sc_dim(x1), L.meet(x1, gm), L.meet(x2, gm)};
}

// --- signatures --------------------------------------------------------------

/// Returns an empty string when s is a signature in S, otherwise the violated condition.
inline std::string signature_defect(const SubLattice& S, const Signature& s) {
  const Lattice& L = S.parent();
  if (!L.contains(s.g) || !L.contains(s.h1) || !L.contains(s.h2)) return "element outside the lattice";
  if (!S.is_irreducible(s.g)) return "g is not an irreducible of the base";
  if (!S.contains(s.h1) || !S.contains(s.h2)) return "h outside the base";
  const int p = L.sc_dim(s.g);
  if (s.q < 0 || s.q > p) return "q out of range";
  const Elem h = L.join(s.h1, s.h2);
  if (!L.lt(h, s.g)) return "h1 v h2 is not below g";
  if (L.sc_dim(h) >= s.q) return "sc-dim(h1 v h2) >= q";
  if (s.q < p && s.h1 != s.h2) return "q < sc-dim g but h1 != h2";
  if (s.q == p && h != S.predecessor(s.g)) return "q = sc-dim g but h1 v h2 != g^-";
  return {};
}

inline bool is_signature(const SubLattice& S, const Signature& s) { return signature_defect(S, s).empty(); }

/// Every signature in S, by g (canonical order), then q, then H.
inline std::vector<Signature> enumerate_signatures(const SubLattice& S) {
  const Lattice& L = S.parent();
  std::vector<Signature> out;
  const auto& mem = S.members();
  for (const Elem& g : S.irreducibles()) {
    const int p = L.sc_dim(g);
    for (int q = 0; q <= p; ++q)
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i; j < mem.size(); ++j) {
          Signature s{g, q, mem[i], mem[j]};
          if (is_signature(S, s)) out.push_back(s);
        }
  }
  return out;
}

inline std::vector<Signature> enumerate_signatures(const Lattice& L) {
  return enumerate_signatures(SubLattice::full(L));
}

// --- realization -------------------------------------------------------------

struct Realization {
  Lattice lattice;
  Elem x1;
  Elem x2;
  LatticeMap embedding;  // base -> lattice
};

struct RealizeNames {
  std::string x1 = "x1";
  std::string x2 = "x2";
};

namespace detail {

inline std::string fresh_name(const Lattice& L, std::string name, const std::vector<std::string>& taken = {}) {
  auto used = [&](const std::string& s) {
    return L.index_of(s).has_value() || std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  while (used(name)) name += "'";
  return name;
}

// Ids of the irreducibles in an ideal.
inline std::vector<std::string> ids_in(const Lattice& L, Mask m) {
  std::vector<std::string> out;
  bits::for_each(m, [&](std::size_t i) { out.push_back(L.id(i)); });
  return out;
}

}  // namespace detail

/// Builds a primitive extension of L0 with signature s. When q = sc-dim g, g is
/// replaced by two incomparable irreducibles x1, x2 with b < x_j iff b <= h_j and
/// x_j < b iff g <= b. When q < sc-dim g, g is kept and one irreducible x of
/// dimension q is added with b < x iff b <= h1 and x < b iff g <= b.
inline Realization realize(const Lattice& L0, const Signature& s, const RealizeNames& names = {}) {
  const SubLattice base = SubLattice::full(L0);
  if (auto why = signature_defect(base, s); !why.empty()) throw Error(ErrorKind::InvalidSignature, why);

  const std::size_t gi = L0.components(s.g).front();
  const int p = L0.dim_label(gi);
  const bool split = s.q == p;
  const std::string n1 = detail::fresh_name(L0, names.x1);
  const std::string n2 = detail::fresh_name(L0, names.x2, {n1});

  IrrPoset P;
  P.d = L0.d();
  for (std::size_t b = 0; b < L0.num_irreducibles(); ++b) {
    if (split && b == gi) continue;
    Mask below = L0.below(b);
    if (split) below &= ~bits::bit(gi);
    IrrPoset::Node node{L0.id(b), L0.dim_label(b), detail::ids_in(L0, below)};
    if (bits::has(L0.down(b), gi)) {
      node.covers.push_back(n1);
      if (split) node.covers.push_back(n2);
    }
    P.irreducibles.push_back(std::move(node));
  }
  P.irreducibles.push_back({n1, s.q, detail::ids_in(L0, s.h1.ideal())});
  if (split) P.irreducibles.push_back({n2, s.q, detail::ids_in(L0, s.h2.ideal())});
  Lattice L1 = Lattice::from_poset(P);

  std::vector<Elem> imgs;
  for (std::size_t b = 0; b < L0.num_irreducibles(); ++b)
    imgs.push_back(split && b == gi ? L1.elem({n1, n2}) : L1.irr(L0.id(b)));
  LatticeMap phi(L0, L1, std::move(imgs));
  const Elem x1 = L1.irr(n1);
  const Elem x2 = split ? L1.irr(n2) : x1;

  const Report rep = check_embedding(phi);
  ensure(rep.all_pass(), "realization: base does not embed");
  const SubLattice image = image_of(phi);
  ensure(is_primitive(image, x1, x2), "realization: tuple is not primitive");
  ensure(signature_of(image, x1, x2) == map_signature(s, phi), "realization: signature differs");
  std::vector<Elem> gens = image.members();
  gens.push_back(x1);
  ensure(closure(L1, gens).size() == L1.count_elements(), "realization: tuple does not generate the extension");
  return {L1, x1, x2, phi};
}

// --- isomorphism over the base ---------------------------------------------

/// The primitive tuple generating L over the sublattice S, if L is a primitive
/// extension of S. The new irreducibles are those of L outside S.
inline std::optional<std::pair<Elem, Elem>> generating_tuple(const SubLattice& S) {
  const Lattice& L = S.parent();
  std::vector<Elem> fresh;
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i)
    if (!S.contains(L.irr(i))) fresh.push_back(L.irr(i));
  std::pair<Elem, Elem> t;
  if (fresh.size() == 1)
    t = {fresh[0], fresh[0]};
  else if (fresh.size() == 2)
    t = {fresh[0], fresh[1]};
  else
    return std::nullopt;
  if (!is_primitive(S, t.first, t.second)) return std::nullopt;
  std::vector<Elem> gens = S.members();
  gens.push_back(t.first);
  if (closure(L, gens).size() != L.count_elements()) return std::nullopt;
  return t;
}

/// Given primitive extensions e1: L0 -> L and e2: L0 -> L' of the same base,
/// returns an isomorphism L -> L' restricting to e2 o e1^-1 on the base when the
/// signatures agree, and nothing otherwise.
inline std::optional<LatticeMap> iso_over_base(const LatticeMap& e1, const LatticeMap& e2) {
  if (!(e1.source() == e2.source()))
    throw Error(ErrorKind::NotPrimitiveExtension, "extensions of different bases");
  const Lattice& L0 = e1.source();
  const SubLattice S1 = image_of(e1), S2 = image_of(e2);
  const auto t1 = generating_tuple(S1);
  const auto t2 = generating_tuple(S2);
  if (!t1 || !t2) throw Error(ErrorKind::NotPrimitiveExtension, "not a primitive extension of the base");

  auto back = [&](const LatticeMap& e, const Signature& s) {
    return Signature{*preimage(e, s.g), s.q, *preimage(e, s.h1), *preimage(e, s.h2)};
  };
  const Signature s1 = back(e1, signature_of(S1, t1->first, t1->second));
  const Signature s2 = back(e2, signature_of(S2, t2->first, t2->second));
  if (!(s1 == s2)) return std::nullopt;

  // orient the second tuple so that matching x's have matching h's
  Elem y1 = t2->first, y2 = t2->second;
  if (s1.h1 != s2.h1) std::swap(y1, y2);

  const Lattice& L = e1.target();
  const Lattice& Lp = e2.target();
  std::vector<Elem> imgs;
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i) {
    const Elem x = L.irr(i);
    if (x == t1->first)
      imgs.push_back(y1);
    else if (x == t1->second)
      imgs.push_back(y2);
    else
      imgs.push_back(e2(*preimage(e1, x)));
  }
  LatticeMap phi(L, Lp, std::move(imgs));
  ensure(L.count_elements() == Lp.count_elements(), "isomorphism over base: sizes differ");
  ensure(check_embedding(phi).all_pass(), "isomorphism over base: not an embedding");
  for (const Elem& a : L0.elements()) ensure(phi(e1(a)) == e2(a), "isomorphism over base: base not fixed");
  return phi;
}

// --- decomposition into primitive extensions ------------------------------

struct ChainStep {
  Elem x1;
  Elem x2;
  Signature signature;  // relative to the sublattice before the step
  SubLattice before;
  SubLattice after;
};

struct PrimitiveChain {
  SubLattice base;
  std::vector<ChainStep> steps;
};

/// Chain of primitive extensions from L0 up to L. At each step x is the first
/// minimal irreducible of L outside the current sublattice in (dim, id) order,
/// g its hull, and the tuple is (x, x) when x << g and (x, g - x) otherwise.
inline PrimitiveChain decompose(const Lattice& L, const SubLattice& L0) {
  if (L0.parent().tag() != L.tag())
    throw Error(ErrorKind::NotASubstructure, "base is not a sublattice of this lattice");
  if (!L0.is_substructure()) throw Error(ErrorKind::NotASubstructure, "base is not closed under the operations");
  const std::size_t total = L.count_elements();
  if (L0.size() == total) throw Error(ErrorKind::NotASubstructure, "base is the whole lattice");

  PrimitiveChain chain{L0, {}};
  SubLattice cur = L0;
  while (cur.size() < total) {
    Mask outside = 0;
    for (std::size_t i = 0; i < L.num_irreducibles(); ++i)
      if (!cur.contains(L.irr(i))) outside |= bits::bit(i);
    std::size_t xi = 0;
    for (std::size_t i = 0; i < L.num_irreducibles(); ++i)
      if (bits::has(outside, i) && (L.below(i) & outside) == 0) {
        xi = i;
        break;
      }
    const Elem x = L.irr(xi);
    const Elem g = cur.hull(x);
    const Elem x2 = L.way_below(x, g) ? x : L.minus(g, x);
    ensure(is_primitive(cur, x, x2), "decomposition step is not primitive");
    const Signature sig = signature_of(cur, x, x2);
    std::vector<Elem> gens = cur.members();
    gens.push_back(x);
    SubLattice next = closure(L, gens);
    chain.steps.push_back({x, x2, sig, cur, next});
    cur = std::move(next);
  }
  return chain;
}

struct Rebuild {
  Lattice lattice;
  LatticeMap base_embedding;  // abstract base -> lattice
  LatticeMap to_original;     // lattice -> L, built step by step
};

/// Realizes the recorded signatures one after another starting from the base.
inline Rebuild rebuild(const PrimitiveChain& chain) {
  const AbstractSub A = as_lattice(chain.base);
  Lattice R = A.lattice;
  LatticeMap base_emb = LatticeMap::identity(R);
  LatticeMap psi = A.inclusion;  // R -> L
  int n = 0;
  for (const ChainStep& st : chain.steps) {
    const Signature sR{*preimage(psi, st.signature.g), st.signature.q, *preimage(psi, st.signature.h1),
                       *preimage(psi, st.signature.h2)};
    ++n;
    const Realization real = realize(R, sR, {"y" + std::to_string(n) + "a", "y" + std::to_string(n) + "b"});
    const Lattice& R1 = real.lattice;
    std::vector<Elem> imgs;
    for (std::size_t i = 0; i < R1.num_irreducibles(); ++i) {
      const Elem e = R1.irr(i);
      if (e == real.x1)
        imgs.push_back(st.x1);
      else if (e == real.x2)
        imgs.push_back(st.x2);
      else
        imgs.push_back(psi(R.irr(R1.id(i))));
    }
    psi = LatticeMap(R1, psi.target(), std::move(imgs));
    base_emb = base_emb.then(real.embedding);
    R = R1;
  }
  return {R, base_emb, psi};
}

// --- splitting -----------------------------------------------------------------

struct SplitResult {
  Lattice lattice;
  Elem x1;
  Elem x2;
  LatticeMap embedding;  // L0 -> lattice
  std::vector<std::string> split_irreducibles;
};

/// Extends L0 so that a splits into x1, x2 with a - x1 = x2, a - x2 = x1,
/// x1 ^ x2 = b1 ^ b2 and x_i >= b_i. Irreducibles below a are assigned to side
/// 1, side 2 or both, bottom up; every component of a, and every irreducible
/// whose predecessors lie on both sides, is split by a primitive extension.
inline SplitResult split_extend(const Lattice& L0, const Elem& a, const Elem& b1, const Elem& b2) {
  L0.own(a);
  if (!L0.way_below(L0.join(b1, b2), a)) throw Error(ErrorKind::NotWayBelow, "b1 v b2 is not way below a");

  enum Side { one = 1, two = 2, both = 3 };
  std::unordered_map<std::string, int> side;
  Lattice cur = L0;
  LatticeMap emb = LatticeMap::identity(L0);
  const Mask comps = L0.comps(a);
  const Elem b12 = L0.meet(b1, b2);
  std::vector<std::string> split;

  for (std::size_t e = 0; e < L0.num_irreducibles(); ++e) {
    if (!bits::has(a.ideal(), e)) continue;
    const std::string& id = L0.id(e);
    if (bits::has(b12.ideal(), e)) {
      side[id] = both;
      continue;
    }
    if (bits::has(b1.ideal(), e)) {
      side[id] = one;
      continue;
    }
    if (bits::has(b2.ideal(), e)) {
      side[id] = two;
      continue;
    }
    const std::size_t ce = *cur.index_of(id);
    int acc = both;
    Elem h1 = cur.zero(), h2 = cur.zero();
    bits::for_each(cur.below(ce), [&](std::size_t j) {
      const int sj = side.at(cur.id(j));
      acc &= sj;
      if (sj & one) h1 = cur.join(h1, cur.irr(j));
      if (sj & two) h2 = cur.join(h2, cur.irr(j));
    });
    if (!bits::has(comps, e) && acc != 0) {
      side[id] = acc == both ? one : acc;
      continue;
    }
    const Elem g = cur.irr(ce);
    ensure(cur.join(h1, h2) == cur.from_ideal(cur.below(ce)), "split: predecessor not covered by the two sides");
    const Realization r = realize(cur, {g, cur.dim_label(ce), h1, h2}, {id + ".1", id + ".2"});
    side[r.lattice.id(r.lattice.components(r.x1).front())] = one;
    side[r.lattice.id(r.lattice.components(r.x2).front())] = two;
    emb = emb.then(r.embedding);
    cur = r.lattice;
    split.push_back(id);
  }

  Elem x1 = cur.zero(), x2 = cur.zero();
  for (std::size_t i = 0; i < cur.num_irreducibles(); ++i) {
    auto it = side.find(cur.id(i));
    if (it == side.end()) continue;
    if (it->second & one) x1 = cur.join(x1, cur.irr(i));
    if (it->second & two) x2 = cur.join(x2, cur.irr(i));
  }
  const Elem ia = emb(a);
  ensure(!x1.is_zero() && !x2.is_zero(), "split: empty side");
  ensure(cur.minus(ia, x1) == x2 && cur.minus(ia, x2) == x1, "split: a - x_i equations fail");
  ensure(cur.meet(x1, x2) == emb(b12), "split: x1 ^ x2 != b1 ^ b2");
  ensure(cur.leq(emb(b1), x1) && cur.leq(emb(b2), x2), "split: x_i not above b_i");
  ensure(check_embedding(emb).all_pass(), "split: base does not embed");
  return {cur, x1, x2, emb, split};
}

// --- embedding an extension into a target ------------------------------------

struct EmbedResult {
  std::optional<LatticeMap> embedding;  // L -> target
  std::optional<Signature> unmatched;   // in target terms
  std::size_t failed_step = 0;
};

/// Embeds L into the target over the base, following the decomposition of L
/// over `base` and searching the target for a tuple with each signature.
/// base_map sends the abstract base (as_lattice(base)) into the target.
inline EmbedResult embed_over(const SubLattice& base, const LatticeMap& base_map) {
  const Lattice& L = base.parent();
  const Lattice& T = base_map.target();
  const AbstractSub A = as_lattice(base);
  if (!(A.lattice == base_map.source())) throw Error(ErrorKind::InvalidInput, "base map has the wrong source");

  std::unordered_map<Mask, Elem> psi;
  for (const Elem& a : A.lattice.elements()) psi.emplace(A.inclusion(a).ideal(), base_map(base_map.source().from_ideal(a.ideal())));

  auto finish = [&]() {
    std::vector<Elem> imgs;
    for (std::size_t i = 0; i < L.num_irreducibles(); ++i) imgs.push_back(psi.at(L.irr(i).ideal()));
    LatticeMap f(L, T, std::move(imgs));
    ensure(check_embedding(f).all_pass(), "embed_over: result is not an embedding");
    return f;
  };

  if (base.size() == L.count_elements()) return {finish(), std::nullopt, 0};

  const PrimitiveChain chain = decompose(L, base);
  const std::vector<Elem> candidates = T.elements();
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const ChainStep& st = chain.steps[k];
    std::vector<Elem> imgs;
    for (const Elem& m : st.before.members()) imgs.push_back(psi.at(m.ideal()));
    const SubLattice ST(T, imgs);
    const Signature want{psi.at(st.signature.g.ideal()), st.signature.q, psi.at(st.signature.h1.ideal()),
                         psi.at(st.signature.h2.ideal())};
    const int p = T.sc_dim(want.g);
    const Elem gm = ST.predecessor(want.g);

    std::optional<std::pair<Elem, Elem>> found;
    for (const Elem& y1 : candidates) {
      const Elem y2 = want.q < p ? y1 : T.minus(want.g, y1);
      if (!is_primitive(ST, y1, y2)) continue;
      if (!(signature_of(ST, y1, y2) == want)) continue;
      if (T.meet(y1, gm) == want.h1)
        found = std::make_pair(y1, y2);
      else
        found = std::make_pair(y2, y1);
      break;
    }
    if (!found) return {std::nullopt, want, k};

    for (const Elem& m : st.after.members()) {
      if (psi.count(m.ideal())) continue;
      Elem c = L.zero();
      for (const Elem& b : st.before.members())
        if (L.leq(b, m)) c = L.join(c, b);
      Elem img = psi.at(c.ideal());
      if (L.leq(st.x1, m)) img = T.join(img, found->first);
      if (L.leq(st.x2, m)) img = T.join(img, found->second);
      psi.emplace(m.ideal(), img);
    }
  }
  return {finish(), std::nullopt, chain.steps.size()};
}

}  // namespace sclat
