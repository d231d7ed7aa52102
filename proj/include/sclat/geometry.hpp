#pragma once

// Special linear varieties P + E(I) over Q^m (I a set of coordinate axes), their
// finite unions, and the linear representation of finite subscaled lattices.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sclat/iso.hpp"
#include "sclat/lattice.hpp"
#include "sclat/sublattice.hpp"

namespace sclat {

using QVec = std::vector<mpq_class>;

/// base + span of the unit vectors on `axes` (0-based, sorted). The base is
/// zero on the axes, so equal varieties are equal as values.
struct SpecialVariety {
  QVec base;
  std::vector<std::size_t> axes;

  SpecialVariety() = default;
  SpecialVariety(QVec p, std::vector<std::size_t> ax) : base(std::move(p)), axes(std::move(ax)) {
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    for (std::size_t i : axes) {
      if (i >= base.size()) throw Error(ErrorKind::InvalidInput, "axis outside the ambient space");
      base[i] = 0;
    }
  }

  std::size_t ambient() const { return base.size(); }
  int dim() const { return static_cast<int>(axes.size()); }
  bool on_axis(std::size_t i) const { return std::binary_search(axes.begin(), axes.end(), i); }

  friend bool operator==(const SpecialVariety& a, const SpecialVariety& b) {
    return a.axes == b.axes && a.base == b.base;
  }
  friend bool operator<(const SpecialVariety& a, const SpecialVariety& b) {
    if (a.axes.size() != b.axes.size()) return a.axes.size() < b.axes.size();
    if (a.axes != b.axes) return a.axes < b.axes;
    return a.base < b.base;
  }
};

inline void same_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::AmbientMismatch, "ambient dimensions differ");
}

/// V is contained in W.
inline bool var_contains(const SpecialVariety& W, const SpecialVariety& V) {
  same_ambient(V.ambient(), W.ambient());
  if (!std::includes(W.axes.begin(), W.axes.end(), V.axes.begin(), V.axes.end())) return false;
  for (std::size_t i = 0; i < V.ambient(); ++i)
    if (!W.on_axis(i) && V.base[i] != W.base[i]) return false;
  return true;
}

inline std::optional<SpecialVariety> var_intersect(const SpecialVariety& V, const SpecialVariety& W) {
  same_ambient(V.ambient(), W.ambient());
  QVec r(V.ambient());
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < V.ambient(); ++i) {
    const bool v = V.on_axis(i), w = W.on_axis(i);
    if (v && w)
      axes.push_back(i);
    else if (v)
      r[i] = W.base[i];
    else if (w)
      r[i] = V.base[i];
    else if (V.base[i] != W.base[i])
      return std::nullopt;
    else
      r[i] = V.base[i];
  }
  return SpecialVariety(std::move(r), std::move(axes));
}

/// Finite union of special varieties, kept reduced (no member inside another) and sorted.
class SpecialSet {
 public:
  explicit SpecialSet(std::size_t ambient = 0) : ambient_(ambient) {}
  SpecialSet(std::size_t ambient, std::vector<SpecialVariety> vars) : ambient_(ambient), vars_(std::move(vars)) {
    for (const auto& v : vars_) same_ambient(v.ambient(), ambient_);
    reduce();
  }

  std::size_t ambient() const { return ambient_; }
  const std::vector<SpecialVariety>& varieties() const { return vars_; }
  bool empty() const { return vars_.empty(); }
  int dim() const {
    int out = -1;
    for (const auto& v : vars_) out = std::max(out, v.dim());
    return out;
  }

  /// The variety V lies inside this set (over an infinite field, inside one member).
  bool contains_variety(const SpecialVariety& V) const {
    for (const auto& W : vars_)
      if (var_contains(W, V)) return true;
    return false;
  }

  friend bool operator==(const SpecialSet& a, const SpecialSet& b) {
    return a.ambient_ == b.ambient_ && a.vars_ == b.vars_;
  }
  friend bool operator<(const SpecialSet& a, const SpecialSet& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.vars_ < b.vars_;
  }

 private:
  void reduce() {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    std::vector<SpecialVariety> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      bool inside = false;
      for (std::size_t j = 0; j < vars_.size() && !inside; ++j)
        inside = i != j && var_contains(vars_[j], vars_[i]);
      if (!inside) keep.push_back(vars_[i]);
    }
    vars_ = std::move(keep);
  }

  std::size_t ambient_;
  std::vector<SpecialVariety> vars_;
};

inline SpecialSet set_union(const SpecialSet& A, const SpecialSet& B) {
  same_ambient(A.ambient(), B.ambient());
  auto vs = A.varieties();
  vs.insert(vs.end(), B.varieties().begin(), B.varieties().end());
  return SpecialSet(A.ambient(), std::move(vs));
}

inline SpecialSet set_intersect(const SpecialSet& A, const SpecialSet& B) {
  same_ambient(A.ambient(), B.ambient());
  std::vector<SpecialVariety> vs;
  for (const auto& V : A.varieties())
    for (const auto& W : B.varieties())
      if (auto r = var_intersect(V, W)) vs.push_back(std::move(*r));
  return SpecialSet(A.ambient(), std::move(vs));
}

/// B is a subset of A.
inline bool set_contains(const SpecialSet& A, const SpecialSet& B) {
  same_ambient(A.ambient(), B.ambient());
  for (const auto& V : B.varieties())
    if (!A.contains_variety(V)) return false;
  return true;
}

/// Components of A not contained in B: the closure of A \ B.
inline SpecialSet set_minus(const SpecialSet& A, const SpecialSet& B) {
  same_ambient(A.ambient(), B.ambient());
  std::vector<SpecialVariety> vs;
  for (const auto& V : A.varieties())
    if (!B.contains_variety(V)) vs.push_back(V);
  return SpecialSet(A.ambient(), std::move(vs));
}

inline SpecialSet set_c_k(const SpecialSet& A, int k) {
  std::vector<SpecialVariety> vs;
  for (const auto& V : A.varieties())
    if (V.dim() == k) vs.push_back(V);
  return SpecialSet(A.ambient(), std::move(vs));
}

inline bool is_pure_dim(const SpecialSet& A, int k) {
  for (const auto& V : A.varieties())
    if (V.dim() != k) return false;
  return true;
}

/// Q^m as the subspace Q^m x {0} of Q^(m + extra).
inline SpecialSet pad(const SpecialSet& A, std::size_t ambient) {
  if (ambient < A.ambient()) throw Error(ErrorKind::AmbientMismatch, "cannot shrink the ambient space");
  std::vector<SpecialVariety> vs;
  for (const auto& V : A.varieties()) {
    QVec b = V.base;
    b.resize(ambient, 0);
    vs.emplace_back(std::move(b), V.axes);
  }
  return SpecialSet(ambient, std::move(vs));
}

// --- lifting -----------------------------------------------------------------

struct Lift {
  SpecialSet A;
  std::size_t r = 0;
};

/// Given C <= B in Q^m and N >= dim C, an N-pure A in Q^(m+r) with A ^ B = C.
/// A0 = e_(m+1) + E(I0) with I0 the first N axes other than m+1; each component
/// P + E(J) of C becomes P + E(J u J') with J' the first N - |J| new axes.
inline Lift lift(const SpecialSet& C, const SpecialSet& B, int N) {
  same_ambient(C.ambient(), B.ambient());
  if (N < 0 || N < C.dim()) throw Error(ErrorKind::PreconditionViolated, "N below dim C");
  if (!set_contains(B, C)) throw Error(ErrorKind::PreconditionViolated, "C is not contained in B");
  const std::size_t m = C.ambient();
  long r = std::max(1L, static_cast<long>(N) - static_cast<long>(m) + 1);
  for (const auto& V : C.varieties()) r = std::max(r, static_cast<long>(N - V.dim()));
  const std::size_t total = m + static_cast<std::size_t>(r);

  std::vector<SpecialVariety> vs;
  {
    QVec p0(total, 0);
    p0[m] = 1;
    std::vector<std::size_t> i0;
    for (std::size_t i = 0; i < total && static_cast<int>(i0.size()) < N; ++i)
      if (i != m) i0.push_back(i);
    vs.emplace_back(std::move(p0), std::move(i0));
  }
  for (const auto& V : C.varieties()) {
    QVec p = V.base;
    p.resize(total, 0);
    std::vector<std::size_t> ax = V.axes;
    for (int k = 0; k < N - V.dim(); ++k) ax.push_back(m + static_cast<std::size_t>(k));
    vs.emplace_back(std::move(p), std::move(ax));
  }
  SpecialSet A(total, std::move(vs));
  ensure(is_pure_dim(A, N) && !A.empty(), "lift: A is not pure of dimension N");
  ensure(set_intersect(A, pad(B, total)) == pad(C, total), "lift: A ^ B != C");
  return {A, static_cast<std::size_t>(r)};
}

// --- the oracle lattice --------------------------------------------------------

struct OracleLattice {
  Lattice lattice;
  std::vector<SpecialSet> irreducible_sets;  // by internal irreducible index
  std::size_t family_size = 0;

  /// The lattice element standing for a set of the saturated family.
  Elem elem_of(const SpecialSet& S) const {
    Mask m = 0;
    for (std::size_t i = 0; i < irreducible_sets.size(); ++i)
      if (set_contains(S, irreducible_sets[i])) m |= bits::bit(i);
    return lattice.from_ideal(m);
  }
};

inline constexpr std::size_t kDefaultSaturationBudget = 4096;

/// Saturates {empty, X} and the assigned sets under union, intersection, minus and
/// C^k, and reads the family back as an abstract lattice (irreducible members,
/// inclusion order, geometric dimensions).
inline OracleLattice oracle_lattice(const SpecialSet& X, const std::vector<SpecialSet>& assigned,
                                    std::size_t budget = kDefaultSaturationBudget) {
  std::set<SpecialSet> seen;
  std::vector<SpecialSet> fam;
  auto push = [&](const SpecialSet& s) {
    if (seen.insert(s).second) {
      if (fam.size() >= budget) throw Error(ErrorKind::SaturationBudgetExceeded, "too many sets");
      fam.push_back(s);
    }
  };
  push(SpecialSet(X.ambient()));
  push(X);
  for (const auto& s : assigned) {
    same_ambient(s.ambient(), X.ambient());
    if (!set_contains(X, s)) throw Error(ErrorKind::InvalidInput, "assigned set outside X");
    push(s);
  }
  const int dx = std::max(X.dim(), 0);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const SpecialSet a = fam[i];
    for (int k = 0; k <= dx; ++k) push(set_c_k(a, k));
    for (std::size_t j = 0; j <= i; ++j) {
      const SpecialSet b = fam[j];
      push(set_union(a, b));
      push(set_intersect(a, b));
      push(set_minus(a, b));
      push(set_minus(b, a));
    }
  }

  std::vector<SpecialSet> sorted(fam.begin(), fam.end());
  std::sort(sorted.begin(), sorted.end(), [](const SpecialSet& a, const SpecialSet& b) {
    if (a.varieties().size() != b.varieties().size()) return a.varieties().size() < b.varieties().size();
    return a < b;
  });
  std::vector<SpecialSet> irr;
  for (const auto& s : sorted) {
    if (s.empty()) continue;
    SpecialSet below(X.ambient());
    for (const auto& t : sorted)
      if (!(t == s) && set_contains(s, t)) below = set_union(below, t);
    if (!(below == s)) irr.push_back(s);
  }
  IrrPoset P;
  P.d = dx;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    IrrPoset::Node node{"s" + std::to_string(i), irr[i].dim(), {}};
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (i != j && set_contains(irr[i], irr[j])) node.covers.push_back("s" + std::to_string(j));
    P.irreducibles.push_back(std::move(node));
  }
  OracleLattice out{Lattice::from_poset(P), {}, fam.size()};
  out.irreducible_sets.resize(irr.size());
  for (std::size_t i = 0; i < irr.size(); ++i) out.irreducible_sets[*out.lattice.index_of("s" + std::to_string(i))] = irr[i];
  ensure(out.lattice.count_elements() == fam.size(), "oracle: family is not the lattice of its irreducibles");
  return out;
}

// --- linear representation -----------------------------------------------------

struct Representation {
  SpecialSet X;
  std::vector<SpecialSet> images;  // by internal irreducible index, all in Q^ambient
  std::size_t ambient = 0;

  SpecialSet image(const Lattice&, const Elem& a) const {
    SpecialSet out(ambient);
    bits::for_each(a.ideal(), [&](std::size_t i) { out = set_union(out, images[i]); });
    return out;
  }
};

namespace detail {

// Adds the irreducibles not yet placed, in linear-extension order, each lifted
// over the union of the images placed so far.
inline Representation represent_rest(const Lattice& L, Representation rep, std::vector<bool> placed) {
  for (std::size_t i : L.linear_extension()) {
    if (placed[i]) continue;
    SpecialSet C(rep.ambient), B(rep.ambient);
    bits::for_each(L.below(i), [&](std::size_t j) { C = set_union(C, rep.images[j]); });
    for (std::size_t j = 0; j < L.num_irreducibles(); ++j)
      if (placed[j]) B = set_union(B, rep.images[j]);
    const Lift up = lift(C, B, L.dim_label(i));
    rep.ambient += up.r;
    for (std::size_t j = 0; j < L.num_irreducibles(); ++j)
      if (placed[j]) rep.images[j] = pad(rep.images[j], rep.ambient);
    rep.images[i] = up.A;
    placed[i] = true;
  }
  rep.X = SpecialSet(rep.ambient);
  for (const auto& s : rep.images) rep.X = set_union(rep.X, s);
  return rep;
}

}  // namespace detail

/// Runs every check tying a representation to its lattice: the induced map into
/// the oracle lattice of X is an embedding satisfying the purity hypothesis, the
/// oracle lattice is isomorphic to L, geometric operations agree with the
/// lattice ones, and dim X = sc-dim 1.
inline bool verify_representation(const Lattice& L, const Representation& rep,
                                  std::size_t budget = kDefaultSaturationBudget) {
  const OracleLattice O = oracle_lattice(rep.X, rep.images, budget);
  std::vector<Elem> imgs;
  for (const auto& s : rep.images) imgs.push_back(O.elem_of(s));
  const LatticeMap phi(L, O.lattice, imgs);
  if (!check_embedding(phi).all_pass()) return false;
  if (!iso(L, O.lattice)) return false;
  if (rep.X.dim() != L.sc_dim(L.one())) return false;
  const std::vector<Elem> els = L.elements();
  std::vector<SpecialSet> geo;
  for (const Elem& a : els) geo.push_back(rep.image(L, a));
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (int k = 0; k <= L.d(); ++k)
      if (!(set_c_k(geo[i], k) == rep.image(L, L.c_k(els[i], k)))) return false;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i != j && geo[i] == geo[j]) return false;
      if (!(set_intersect(geo[i], geo[j]) == rep.image(L, L.meet(els[i], els[j])))) return false;
      if (!(set_minus(geo[i], geo[j]) == rep.image(L, L.minus(els[i], els[j])))) return false;
    }
  }
  return true;
}

/// Special linear sets for the irreducibles of L, each pure of its label, such
/// that the induced map is an embedding into the lattice of special subsets of X.
inline Representation represent(const Lattice& L, bool verify = true) {
  Representation rep;
  rep.images.assign(L.num_irreducibles(), SpecialSet(0));
  rep = detail::represent_rest(L, std::move(rep), std::vector<bool>(L.num_irreducibles(), false));
  if (verify) ensure(verify_representation(L, rep), "representation failed verification");
  return rep;
}

}  // namespace sclat
