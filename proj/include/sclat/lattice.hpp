#pragma once

// Finite subscaled lattices in their canonical form: the lattice of order
// ideals of a poset of join-irreducibles carrying a strictly increasing
// dimension labelling. Every operation of the subscaled language is computed
// from the maximal irreducibles ("components") of an element.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sclat/bits.hpp"
#include "sclat/error.hpp"

namespace sclat {

inline constexpr std::size_t kDefaultElementCap = 512;

/// Labelled poset of join-irreducibles, as read from input.
struct IrrPoset {
  struct Node {
    std::string id;
    int dim = 0;
    std::vector<std::string> covers;  // irreducibles directly (or transitively) below
  };
  std::vector<Node> irreducibles;
  std::optional<int> d;  // language bound; defaults to the largest label
};

class Lattice;

/// A lattice element: an order ideal of irreducibles, tagged with the lattice it
/// belongs to so that mixing elements of different lattices is detected.
class Elem {
 public:
  Elem() = default;

  Mask ideal() const { return ideal_; }
  std::uint64_t lattice_tag() const { return tag_; }
  bool is_zero() const { return ideal_ == 0; }
  int size() const { return bits::count(ideal_); }

  friend bool operator==(const Elem&, const Elem&) = default;

  /// Canonical element order: by number of irreducibles, then by mask.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.ideal_ <=> b.ideal_;
  }

 private:
  friend class Lattice;
  Elem(Mask m, std::uint64_t tag) : ideal_(m), tag_(tag) {}

  Mask ideal_ = 0;
  std::uint64_t tag_ = 0;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept {
    return std::hash<Mask>{}(e.ideal() * 0x9E3779B97F4A7C15ULL ^ e.lattice_tag());
  }
};

class Lattice {
 public:
  enum class Validation {
    strict,
    // Accept dimension labellings that are not strictly increasing. Used to
    // build deliberately broken structures for the axiom checkers.
    skip_dim_monotonicity,
  };

  /// The one-element lattice {0}.
  Lattice() : tag_(next_tag()) {}

  static Lattice from_poset(const IrrPoset& p, Validation v = Validation::strict) {
    const std::size_t n = p.irreducibles.size();
    if (n > kMaxIrreducibles)
      throw Error(ErrorKind::SizeLimit, "more than 64 irreducibles");

    // canonical internal order: (dim, id)
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = p.irreducibles[a];
      const auto& y = p.irreducibles[b];
      return std::tie(x.dim, x.id) < std::tie(y.dim, y.id);
    });

    Lattice L;
    L.ids_.resize(n);
    L.dim_.resize(n);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& node = p.irreducibles[order[k]];
      if (node.id.empty()) throw Error(ErrorKind::InvalidInput, "empty irreducible id");
      if (node.dim < 0) throw Error(ErrorKind::InvalidInput, "negative dimension label for " + node.id);
      if (!index.emplace(node.id, k).second)
        throw Error(ErrorKind::NotAPartialOrder, "duplicate irreducible id " + node.id);
      L.ids_[k] = node.id;
      L.dim_[k] = node.dim;
    }

    std::vector<Mask> below(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& c : p.irreducibles[order[k]].covers) {
        auto it = index.find(c);
        if (it == index.end())
          throw Error(ErrorKind::NotAPartialOrder, "unknown irreducible '" + c + "' below " + L.ids_[k]);
        below[k] |= bits::bit(it->second);
      }
    }
    // transitive closure
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t i = 0; i < n; ++i)
        if (bits::has(below[i], m)) below[i] |= below[m];
    for (std::size_t i = 0; i < n; ++i)
      if (bits::has(below[i], i))
        throw Error(ErrorKind::NotAPartialOrder, "cycle through " + L.ids_[i]);

    if (v == Validation::strict) {
      for (std::size_t i = 0; i < n; ++i)
        bits::for_each(below[i], [&](std::size_t j) {
          if (L.dim_[j] >= L.dim_[i])
            throw Error(ErrorKind::NonMonotoneDim,
                        L.ids_[j] + " < " + L.ids_[i] + " but dim " + std::to_string(L.dim_[j]) +
                            " >= " + std::to_string(L.dim_[i]));
        });
    }

    int max_label = 0;
    for (int x : L.dim_) max_label = std::max(max_label, x);
    if (p.d) {
      if (*p.d < max_label)
        throw Error(ErrorKind::InvalidInput, "language bound d below the largest dimension label");
      L.d_ = *p.d;
    } else {
      L.d_ = max_label;
    }

    L.below_ = std::move(below);
    L.above_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      bits::for_each(L.below_[i], [&](std::size_t j) { L.above_[j] |= bits::bit(i); });
    L.height_.assign(n, 0);
    for (std::size_t i : L.linear_extension())
      bits::for_each(L.below_[i], [&](std::size_t j) { L.height_[i] = std::max(L.height_[i], L.height_[j] + 1); });
    return L;
  }

  // --- structure -----------------------------------------------------------

  std::size_t num_irreducibles() const { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }
  int dim_label(std::size_t i) const { return dim_.at(i); }
  Mask below(std::size_t i) const { return below_.at(i); }
  Mask above(std::size_t i) const { return above_.at(i); }
  Mask down(std::size_t i) const { return below_.at(i) | bits::bit(i); }
  int height(std::size_t i) const { return height_.at(i); }
  int d() const { return d_; }
  std::uint64_t tag() const { return tag_; }
  Mask all_mask() const { return bits::low_bits(ids_.size()); }
  bool is_one_element() const { return ids_.empty(); }

  std::optional<std::size_t> index_of(std::string_view id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == id) return i;
    return std::nullopt;
  }

  /// Irreducible indices ordered so that everything below an irreducible comes first.
  std::vector<std::size_t> linear_extension() const {
    const std::size_t n = ids_.size();
    std::vector<std::size_t> out;
    out.reserve(n);
    Mask placed = 0;
    while (out.size() < n) {
      for (std::size_t i = 0; i < n; ++i)
        if (!bits::has(placed, i) && bits::subset(below_[i], placed)) {
          out.push_back(i);
          placed |= bits::bit(i);
        }
    }
    return out;
  }

  IrrPoset to_poset() const {
    IrrPoset p;
    p.d = d_;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      IrrPoset::Node node{ids_[i], dim_[i], {}};
      bits::for_each(covers_of(i), [&](std::size_t j) { node.covers.push_back(ids_[j]); });
      std::sort(node.covers.begin(), node.covers.end());
      p.irreducibles.push_back(std::move(node));
    }
    return p;
  }

  /// Irreducibles covered by i (the Hasse diagram).
  Mask covers_of(std::size_t i) const {
    Mask out = 0;
    bits::for_each(below_[i], [&](std::size_t j) {
      if ((above_[j] & below_[i]) == 0) out |= bits::bit(j);
    });
    return out;
  }

  /// Structural equality: same irreducibles, labels, order and bound.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ids_ == b.ids_ && a.dim_ == b.dim_ && a.below_ == b.below_ && a.d_ == b.d_;
  }

  // --- elements ------------------------------------------------------------

  Elem zero() const { return Elem(0, tag_); }
  Elem one() const { return Elem(all_mask(), tag_); }
  Elem irr(std::size_t i) const { return Elem(down(i), tag_); }

  Elem irr(std::string_view id) const {
    auto i = index_of(id);
    if (!i) throw Error(ErrorKind::InvalidInput, "unknown irreducible '" + std::string(id) + "'");
    return irr(*i);
  }

  /// Join of the named irreducibles.
  Elem elem(std::initializer_list<std::string_view> ids) const {
    Elem out = zero();
    for (auto id : ids) out = join(out, irr(id));
    return out;
  }

  Elem elem_of_ids(const std::vector<std::string>& ids) const {
    Elem out = zero();
    for (const auto& id : ids) out = join(out, irr(id));
    return out;
  }

  Elem down_closure(Mask m) const {
    Mask out = 0;
    bits::for_each(m, [&](std::size_t i) { out |= down(i); });
    return Elem(out, tag_);
  }

  /// Wraps a mask known to be an order ideal of this lattice.
  Elem from_ideal(Mask m) const {
    if (!is_ideal(m)) throw Error(ErrorKind::InvalidInput, "mask is not an order ideal");
    return Elem(m, tag_);
  }

  bool is_ideal(Mask m) const {
    if (!bits::subset(m, all_mask())) return false;
    bool ok = true;
    bits::for_each(m, [&](std::size_t i) { ok = ok && bits::subset(below_[i], m); });
    return ok;
  }

  bool contains(const Elem& e) const { return e.lattice_tag() == tag_ && is_ideal(e.ideal()); }

  // --- lattice language ----------------------------------------------------

  Elem join(const Elem& a, const Elem& b) const {
    same(a, b);
    return Elem(a.ideal_ | b.ideal_, tag_);
  }
  Elem meet(const Elem& a, const Elem& b) const {
    same(a, b);
    return Elem(a.ideal_ & b.ideal_, tag_);
  }
  bool leq(const Elem& a, const Elem& b) const {
    same(a, b);
    return bits::subset(a.ideal_, b.ideal_);
  }
  bool lt(const Elem& a, const Elem& b) const { return leq(a, b) && a.ideal_ != b.ideal_; }

  /// Maximal irreducibles of a (its join-irreducible components).
  Mask comps(const Elem& a) const {
    own(a);
    Mask out = 0;
    bits::for_each(a.ideal_, [&](std::size_t i) {
      if ((above_[i] & a.ideal_) == 0) out |= bits::bit(i);
    });
    return out;
  }

  std::vector<std::size_t> components(const Elem& a) const {
    std::vector<std::size_t> out;
    bits::for_each(comps(a), [&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_irreducible(const Elem& a) const { return bits::count(comps(a)) == 1; }

  /// Relative topological complement: join of the components of a not below b.
  Elem minus(const Elem& a, const Elem& b) const {
    same(a, b);
    Mask out = 0;
    bits::for_each(comps(a), [&](std::size_t c) {
      if (!bits::has(b.ideal_, c)) out |= down(c);
    });
    return Elem(out, tag_);
  }

  /// Join of the components of a labelled k.
  Elem c_k(const Elem& a, int k) const {
    Mask out = 0;
    bits::for_each(comps(a), [&](std::size_t c) {
      if (dim_[c] == k) out |= down(c);
    });
    return Elem(out, tag_);
  }

  /// Largest label among the components; -1 for 0.
  int sc_dim(const Elem& a) const {
    int out = -1;
    bits::for_each(comps(a), [&](std::size_t c) { out = std::max(out, dim_[c]); });
    return out;
  }

  /// Length of the longest chain of irreducibles below a; -1 for 0.
  int lat_dim(const Elem& a) const {
    own(a);
    int out = -1;
    bits::for_each(a.ideal_, [&](std::size_t i) { out = std::max(out, height_[i]); });
    return out;
  }

  /// b << a, through the quantifier-free characterisation b <= a != 0 and a - b = a.
  bool way_below(const Elem& b, const Elem& a) const {
    return leq(b, a) && !a.is_zero() && minus(a, b) == a;
  }

  /// b << a from the definition: b < a and for all c < a, b v c < a.
  bool way_below_exhaustive(const Elem& b, const Elem& a) const {
    if (!lt(b, a)) return false;
    for (const Elem& c : ideals_within(a.ideal_))
      if (c.ideal_ != a.ideal_ && (c.ideal_ | b.ideal_) == a.ideal_) return false;
    return true;
  }

  /// Lattice dimension as the supremum of n with 0 != a0 << a1 << ... << an <= a.
  int lat_dim_by_way_below(const Elem& a) const {
    own(a);
    std::vector<Elem> els = ideals_within(a.ideal_);
    std::sort(els.begin(), els.end());
    std::vector<int> best(els.size(), 0);
    int out = -1;
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (els[i].is_zero()) continue;
      for (std::size_t j = 0; j < i; ++j)
        if (!els[j].is_zero() && way_below(els[j], els[i])) best[i] = std::max(best[i], best[j] + 1);
      out = std::max(out, best[i]);
    }
    return out;
  }

  /// a is k-sc-pure: a = C^k(a).
  bool is_pure(const Elem& a, int k) const { return c_k(a, k) == a; }

  /// a is k-sc-pure from the definition: every nonzero a - b has sc-dim k.
  bool is_pure_exhaustive(const Elem& a, int k) const {
    for (const Elem& b : elements()) {
      Elem r = minus(a, b);
      if (!r.is_zero() && sc_dim(r) != k) return false;
    }
    return true;
  }

  // --- enumeration ---------------------------------------------------------

  /// All elements, in canonical order. Throws SizeLimit beyond `cap`.
  std::vector<Elem> elements(std::size_t cap = kDefaultElementCap) const {
    auto out = ideals_within(all_mask(), cap);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every order ideal contained in `bound` (itself an ideal).
  std::vector<Elem> ideals_within(Mask bound, std::size_t cap = std::size_t(1) << 22) const {
    std::vector<Elem> out;
    std::vector<std::size_t> order;
    for (std::size_t i : linear_extension())
      if (bits::has(bound, i)) order.push_back(i);
    enumerate(order, 0, 0, out, cap);
    return out;
  }

  std::size_t count_elements(std::size_t cap = std::size_t(1) << 22) const {
    return ideals_within(all_mask(), cap).size();
  }

  /// The ideal lattice L(a) = {b <= a} as a lattice in its own right.
  Lattice restrict_to(const Elem& a) const {
    own(a);
    IrrPoset p;
    p.d = d_;
    bits::for_each(a.ideal_, [&](std::size_t i) {
      IrrPoset::Node node{ids_[i], dim_[i], {}};
      bits::for_each(below_[i], [&](std::size_t j) { node.covers.push_back(ids_[j]); });
      p.irreducibles.push_back(std::move(node));
    });
    return from_poset(p, Validation::skip_dim_monotonicity);
  }

  void own(const Elem& a) const {
    if (a.lattice_tag() != tag_) throw Error(ErrorKind::AmbientMismatch, "element of another lattice");
  }

 private:
  static std::uint64_t next_tag() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }

  void same(const Elem& a, const Elem& b) const {
    own(a);
    own(b);
  }

  void enumerate(const std::vector<std::size_t>& order, std::size_t k, Mask cur, std::vector<Elem>& out,
                 std::size_t cap) const {
    if (k == order.size()) {
      if (out.size() >= cap)
        throw Error(ErrorKind::SizeLimit, "more than " + std::to_string(cap) + " elements");
      out.push_back(Elem(cur, tag_));
      return;
    }
    const std::size_t i = order[k];
    enumerate(order, k + 1, cur, out, cap);
    if (bits::subset(below_[i], cur)) enumerate(order, k + 1, cur | bits::bit(i), out, cap);
  }

  std::vector<std::string> ids_;
  std::vector<int> dim_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  std::vector<int> height_;
  int d_ = 0;
  std::uint64_t tag_;
};

inline Lattice restrict(const Lattice& L, const Elem& a) { return L.restrict_to(a); }

}  // namespace sclat
