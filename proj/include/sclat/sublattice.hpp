#pragma once

// Sublattices of a finite lattice, lattice maps between finite lattices, and the
// embedding criterion: a lattice embedding sending every irreducible to an
// sc-pure element of the same sc-dimension preserves - and every C^k.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sclat/lattice.hpp"
#include "sclat/report.hpp"

namespace sclat {

/// A map between finite lattices, given by the images of the source
/// irreducibles and extended to all elements by joins.
class LatticeMap {
 public:
  LatticeMap() = default;
  LatticeMap(Lattice source, Lattice target, std::vector<Elem> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.num_irreducibles())
      throw Error(ErrorKind::InvalidInput, "one image per source irreducible expected");
    for (const Elem& e : images_)
      if (!target_.contains(e)) throw Error(ErrorKind::AmbientMismatch, "image outside the target lattice");
  }

  static LatticeMap identity(const Lattice& L) {
    std::vector<Elem> imgs;
    for (std::size_t i = 0; i < L.num_irreducibles(); ++i) imgs.push_back(L.irr(i));
    return LatticeMap(L, L, std::move(imgs));
  }

  const Lattice& source() const { return source_; }
  const Lattice& target() const { return target_; }
  const std::vector<Elem>& images() const { return images_; }
  const Elem& image_of_irr(std::size_t i) const { return images_.at(i); }

  Elem operator()(const Elem& a) const {
    source_.own(a);
    Elem out = target_.zero();
    bits::for_each(a.ideal(), [&](std::size_t i) { out = target_.join(out, images_[i]); });
    return out;
  }

  /// Composite map: first *this, then `next`.
  LatticeMap then(const LatticeMap& next) const {
    std::vector<Elem> imgs;
    for (const Elem& e : images_) imgs.push_back(next(e));
    return LatticeMap(source_, next.target(), std::move(imgs));
  }

 private:
  Lattice source_;
  Lattice target_;
  std::vector<Elem> images_;
};

/// Preimage of `y` under an injective map, if any.
inline std::optional<Elem> preimage(const LatticeMap& f, const Elem& y, std::size_t cap = kDefaultElementCap) {
  for (const Elem& a : f.source().elements(cap))
    if (f(a) == y) return a;
  return std::nullopt;
}

/// Checks that f preserves 0, 1, v and ^. Throws NotLatticeMap otherwise.
inline void require_lattice_map(const LatticeMap& f, std::size_t cap = kDefaultElementCap) {
  const Lattice& S = f.source();
  const Lattice& T = f.target();
  if (f(S.one()) != T.one()) throw Error(ErrorKind::NotLatticeMap, "top not preserved");
  const std::vector<Elem> els = S.elements(cap);
  for (const Elem& a : els)
    for (const Elem& b : els)
      if (f(S.meet(a, b)) != T.meet(f(a), f(b))) throw Error(ErrorKind::NotLatticeMap, "meet not preserved");
}

inline void require_injective(const LatticeMap& f, std::size_t cap = kDefaultElementCap) {
  std::unordered_set<Mask> seen;
  for (const Elem& a : f.source().elements(cap))
    if (!seen.insert(f(a).ideal()).second) throw Error(ErrorKind::NotInjective, "two elements share an image");
}

/// Report with two lines: "hypothesis" (every irreducible goes to an sc-pure
/// element of its sc-dimension) and "conclusion" (f preserves - and all C^k).
inline Report check_embedding(const LatticeMap& f, std::size_t cap = kDefaultElementCap) {
  require_lattice_map(f, cap);
  require_injective(f, cap);
  const Lattice& S = f.source();
  const Lattice& T = f.target();

  detail::LawCheck hyp("hypothesis");
  for (std::size_t i = 0; i < S.num_irreducibles(); ++i) {
    const Elem img = f.image_of_irr(i);
    const int k = S.dim_label(i);
    hyp.require(T.sc_dim(img) == k && T.is_pure(img, k), {S.irr(i)});
  }

  detail::LawCheck con("conclusion");
  const int dmax = std::max(S.d(), T.d());
  const std::vector<Elem> els = S.elements(cap);
  for (const Elem& a : els) {
    const Elem fa = f(a);
    for (int k = 0; k <= dmax + 1; ++k) con.require(f(S.c_k(a, k)) == T.c_k(fa, k), {a});
    for (const Elem& b : els) con.require(f(S.minus(a, b)) == T.minus(fa, f(b)), {a, b});
  }

  Report rep;
  rep.lines.push_back(hyp.take());
  rep.lines.push_back(con.take());
  return rep;
}

/// A subset of a lattice containing 0 and 1, closed under v and ^ (and, for
/// substructures, under - and every C^k).
class SubLattice {
 public:
  SubLattice() = default;

  SubLattice(Lattice parent, const std::vector<Elem>& members) : parent_(std::move(parent)) {
    for (const Elem& e : members) add(e);
    add(parent_.zero());
    add(parent_.one());
    std::sort(members_.begin(), members_.end());
  }

  static SubLattice full(const Lattice& L) { return SubLattice(L, L.elements()); }

  const Lattice& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Elem& e) const { return e.lattice_tag() == parent_.tag() && index_.count(e.ideal()) > 0; }

  bool is_lattice_closed() const {
    for (const Elem& a : members_)
      for (const Elem& b : members_)
        if (!contains(parent_.join(a, b)) || !contains(parent_.meet(a, b))) return false;
    return true;
  }

  /// Closed under v, ^, - and C^k for k <= d.
  bool is_substructure() const {
    if (!is_lattice_closed()) return false;
    for (const Elem& a : members_) {
      for (int k = 0; k <= parent_.d(); ++k)
        if (!contains(parent_.c_k(a, k))) return false;
      for (const Elem& b : members_)
        if (!contains(parent_.minus(a, b))) return false;
    }
    return true;
  }

  /// Join of the members strictly below a.
  Elem predecessor(const Elem& a) const {
    Elem out = parent_.zero();
    for (const Elem& b : members_)
      if (parent_.lt(b, a)) out = parent_.join(out, b);
    return out;
  }

  bool is_irreducible(const Elem& a) const { return contains(a) && !a.is_zero() && predecessor(a) != a; }

  /// Nonzero join-irreducible members, in canonical order.
  std::vector<Elem> irreducibles() const {
    std::vector<Elem> out;
    for (const Elem& a : members_)
      if (is_irreducible(a)) out.push_back(a);
    return out;
  }

  /// Meet of the members above x.
  Elem hull(const Elem& x) const {
    Elem out = parent_.one();
    for (const Elem& a : members_)
      if (parent_.leq(x, a)) out = parent_.meet(out, a);
    return out;
  }

  /// Name of a member: the ids of its components in the parent, joined by '|'.
  std::string name_of(const Elem& a) const {
    std::vector<std::string> ids;
    for (std::size_t c : parent_.components(a)) ids.push_back(parent_.id(c));
    std::sort(ids.begin(), ids.end());
    std::string out;
    for (const auto& s : ids) out += (out.empty() ? "" : "|") + s;
    return out;
  }

 private:
  void add(const Elem& e) {
    parent_.own(e);
    if (index_.insert(e.ideal()).second) members_.push_back(e);
  }

  Lattice parent_;
  std::vector<Elem> members_;
  std::unordered_set<Mask> index_;
};

/// A sublattice as a lattice in its own right, with its inclusion into the parent.
struct AbstractSub {
  Lattice lattice;
  LatticeMap inclusion;
  std::vector<Elem> irr_members;  // parent element of each irreducible, by internal index
};

/// Dimension labels of the abstract lattice: the sc-dimension in the parent, or
/// explicit labels (one per sublattice irreducible, in canonical order).
inline AbstractSub as_lattice(const SubLattice& S, std::optional<std::vector<int>> labels = std::nullopt,
                              Lattice::Validation v = Lattice::Validation::strict) {
  const Lattice& P = S.parent();
  const std::vector<Elem> irr = S.irreducibles();
  if (labels && labels->size() != irr.size())
    throw Error(ErrorKind::InvalidInput, "one label per sublattice irreducible expected");
  IrrPoset p;
  p.d = P.d();
  for (std::size_t i = 0; i < irr.size(); ++i) {
    IrrPoset::Node node{S.name_of(irr[i]), labels ? (*labels)[i] : P.sc_dim(irr[i]), {}};
    for (const Elem& b : irr)
      if (P.lt(b, irr[i])) node.covers.push_back(S.name_of(b));
    p.irreducibles.push_back(std::move(node));
  }
  int max_label = 0;
  for (const auto& n : p.irreducibles) max_label = std::max(max_label, n.dim);
  p.d = std::max(*p.d, max_label);
  Lattice L = Lattice::from_poset(p, v);
  std::vector<Elem> imgs(L.num_irreducibles());
  std::vector<Elem> members(L.num_irreducibles());
  for (const Elem& e : irr) {
    const std::size_t j = *L.index_of(S.name_of(e));
    imgs[j] = e;
    members[j] = e;
  }
  return AbstractSub{L, LatticeMap(L, P, std::move(imgs)), std::move(members)};
}

}  // namespace sclat
