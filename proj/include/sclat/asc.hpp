#pragma once

// Atomic layer: a label per atom (k >= 1 for an exact point count, 0 for
// generic), the induced asc function, the ASC axioms, ASC-signatures and the
// atom-aware constructions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sclat/axioms.hpp"
#include "sclat/extensions.hpp"
#include "sclat/geometry.hpp"
#include "sclat/lattice.hpp"
#include "sclat/sublattice.hpp"

namespace sclat {

class ASCLattice {
 public:
  ASCLattice() = default;

  /// Labels by irreducible id; unlisted atoms are generic (0).
  ASCLattice(Lattice base, const std::map<std::string, int>& labels) : base_(std::move(base)) {
    labels_.assign(base_.num_irreducibles(), 0);
    for (const auto& [id, k] : labels) {
      const auto i = base_.index_of(id);
      if (!i) throw Error(ErrorKind::InvalidInput, "atom label for unknown irreducible '" + id + "'");
      if (k < 0) throw Error(ErrorKind::InvalidInput, "negative atom label");
      if (base_.below(*i) != 0) throw Error(ErrorKind::InvalidInput, "'" + id + "' is not an atom");
      if (k > 0 && base_.dim_label(*i) != 0)
        throw Error(ErrorKind::InvalidInput, "positive label on an atom of nonzero sc-dimension");
      labels_[*i] = k;
    }
  }

  const Lattice& base() const { return base_; }
  bool is_atom(std::size_t i) const { return base_.below(i) == 0; }
  int label(std::size_t i) const { return labels_.at(i); }

  /// Labels of the atoms of sc-dimension 0 (the others are always generic).
  std::map<std::string, int> label_map() const {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (is_atom(i) && base_.dim_label(i) == 0) out[base_.id(i)] = labels_[i];
    return out;
  }

  Mask atoms_below(const Elem& a) const {
    Mask out = 0;
    bits::for_each(a.ideal(), [&](std::size_t i) {
      if (is_atom(i)) out |= bits::bit(i);
    });
    return out;
  }

  /// Number of atoms below a when a has sc-dimension 0 and none of them is
  /// generic; 0 otherwise.
  int asc(const Elem& a) const {
    if (a.is_zero() || base_.sc_dim(a) != 0) return 0;
    int sum = 0;
    bool generic = false;
    bits::for_each(a.ideal(), [&](std::size_t i) {
      if (labels_[i] == 0) generic = true;
      sum += labels_[i];
    });
    return generic ? 0 : sum;
  }

  bool at_k(const Elem& a, int k) const { return k > 0 ? asc(a) == k : asc(a) == 0; }

 private:
  Lattice base_;
  std::vector<int> labels_;
};

inline Report check_asc(const ASCLattice& A, const CheckOptions& opt = {}) {
  const Lattice& L = A.base();
  const std::vector<Elem> els = L.elements(opt.budget);
  Report rep;
  detail::LawCheck asc1("ASC1"), asc2("ASC2"), asc3("ASC3"), asc0("ASC0"), atomic("atomicity");

  bool scaled = true;
  for (const Elem& a : els) {
    scaled = scaled && L.sc_dim(a) == L.lat_dim(a);
    int hits = 0;
    for (int k = 1; k <= static_cast<int>(L.num_irreducibles()) * 64; ++k)
      if (A.asc(a) == k) ++hits;
    asc1.require(hits <= 1, {a});

    const int k = A.asc(a);
    if (k > 0) {
      const std::size_t below = L.ideals_within(a.ideal()).size();
      asc2.require(L.sc_dim(a) == 0 && (k >= 63 || below <= (std::size_t{1} << k)), {a});
    }

    const Mask at = A.atoms_below(a);
    const bool join_of_atoms = L.down_closure(at) == a;
    atomic.require(join_of_atoms, {a});
    // for k > 0: At_k(a) iff a is the join of exactly k atoms
    if (!a.is_zero()) asc0.require(k == (join_of_atoms ? bits::count(at) : 0), {a});
  }
  if (!scaled) asc0.fail({});

  for (const Elem& a1 : els) {
    if (a1.is_zero()) continue;
    for (const Elem& a2 : els) {
      if (a2.is_zero() || !L.meet(a1, a2).is_zero()) continue;
      const Elem a = L.join(a1, a2);
      const int k1 = A.asc(a1), k2 = A.asc(a2), k = A.asc(a);
      const bool want = k1 > 0 && k2 > 0;
      asc3.require(want ? k == k1 + k2 : k == 0, {a1, a2});
    }
  }

  rep.lines.push_back(asc1.take());
  rep.lines.push_back(asc2.take());
  rep.lines.push_back(asc3.take());
  rep.lines.push_back(asc0.take());
  rep.lines.push_back(atomic.take());
  if (opt.super_properties) {
    rep.lines.push_back(check_catenarity(L, els));
    rep.lines.push_back(check_splitting(L, els, true, "ASC-splitting"));
  }
  return rep;
}

inline bool passes_sub_asc(const Report& r) { return r.passes({"ASC1", "ASC2", "ASC3"}); }

// --- ASC-signatures ------------------------------------------------------------

struct ASCSignature {
  Signature sig;
  int k1 = 0;
  int k2 = 0;

  friend bool operator==(const ASCSignature& a, const ASCSignature& b) {
    if (!(a.sig == b.sig)) return false;
    // pair (h_j, k_j) as a set
    if (a.sig.h1 == b.sig.h1 && a.sig.h2 == b.sig.h2 && a.k1 == b.k1 && a.k2 == b.k2) return true;
    return a.sig.h1 == b.sig.h2 && a.sig.h2 == b.sig.h1 && a.k1 == b.k2 && a.k2 == b.k1;
  }
};

inline std::string asc_signature_defect(const ASCLattice& A, const SubLattice& S, const ASCSignature& s) {
  if (auto why = signature_defect(S, s.sig); !why.empty()) return why;
  const Lattice& L = A.base();
  const int p = L.sc_dim(s.sig.g);
  if (s.k1 < 0 || s.k2 < 0) return "negative atom count";
  if (s.sig.q < p && (s.sig.h1 != s.sig.h2 || s.k1 != s.k2)) return "q < sc-dim g but the pairs differ";
  if (s.sig.q != 0 && (s.k1 != 0 || s.k2 != 0)) return "q != 0 but an atom count is nonzero";
  if (s.k1 != 0 && s.k2 != 0 && p == 0 && A.asc(s.sig.g) != s.k1 + s.k2) return "asc(g) != k1 + k2";
  if ((s.k1 == 0 || s.k2 == 0) && A.asc(s.sig.g) != 0) return "a zero count but asc(g) != 0";
  return {};
}

/// ASC-signatures over the whole lattice, atom counts bounded by max_k (counts
/// are unbounded for generic g).
inline std::vector<ASCSignature> asc_signatures(const ASCLattice& A, int max_k) {
  const SubLattice S = SubLattice::full(A.base());
  std::vector<ASCSignature> out;
  for (const Signature& s : enumerate_signatures(S))
    for (int k1 = 0; k1 <= max_k; ++k1)
      for (int k2 = 0; k2 <= max_k; ++k2) {
        if (s.h1 == s.h2 && k2 < k1) continue;
        ASCSignature a{s, k1, k2};
        if (asc_signature_defect(A, S, a).empty()) out.push_back(a);
      }
  return out;
}

/// The ASC-signature of the extension generated by (x1, x2) over S, where the
/// labels of the extension are those of A.
inline ASCSignature asc_signature_of(const ASCLattice& A, const SubLattice& S, const Elem& x1, const Elem& x2) {
  return {signature_of(S, x1, x2), A.asc(x1), A.asc(x2)};
}

struct ASCRealization {
  ASCLattice lattice;
  Elem x1;
  Elem x2;
  LatticeMap embedding;
};

namespace detail {

inline void ensure_asc_embedding(const ASCLattice& A0, const ASCLattice& A1, const LatticeMap& f) {
  for (const Elem& a : A0.base().elements()) ensure(A0.asc(a) == A1.asc(f(a)), "asc not preserved");
}

}  // namespace detail

inline ASCRealization asc_realize(const ASCLattice& A0, const ASCSignature& s, const RealizeNames& names = {}) {
  const SubLattice S = SubLattice::full(A0.base());
  if (auto why = asc_signature_defect(A0, S, s); !why.empty()) throw Error(ErrorKind::InvalidSignature, why);
  const Realization r = realize(A0.base(), s.sig, names);
  const Lattice& L1 = r.lattice;

  std::map<std::string, int> labels;
  for (const auto& [id, k] : A0.label_map())
    if (L1.index_of(id) && L1.below(*L1.index_of(id)) == 0) labels[id] = k;
  auto put = [&](const Elem& x, int k) {
    const std::size_t i = L1.components(x).front();
    if (L1.below(i) == 0) labels[L1.id(i)] = k;
  };
  put(r.x1, s.k1);
  if (r.x2 != r.x1) put(r.x2, s.k2);
  ASCLattice A1(L1, labels);

  ensure(passes_sub_asc(check_asc(A1, {kDefaultElementCap, false})), "asc realization violates ASC1-ASC3");
  ensure(asc_signature_of(A1, image_of(r.embedding), r.x1, r.x2) == ASCSignature{map_signature(s.sig, r.embedding), s.k1, s.k2},
         "asc realization: signature differs");
  detail::ensure_asc_embedding(A0, A1, r.embedding);
  return {A1, r.x1, r.x2, r.embedding};
}

struct ASCSplitResult {
  ASCLattice lattice;
  Elem x1;
  Elem x2;
  LatticeMap embedding;
};

inline ASCSplitResult asc_split_extend(const ASCLattice& A0, const Elem& a, const Elem& b1, const Elem& b2) {
  const Lattice& L0 = A0.base();
  L0.own(a);
  if (!L0.c_k(a, 0).is_zero()) throw Error(ErrorKind::HasZeroDimComponent, "C^0(a) != 0");
  const SplitResult r = split_extend(L0, a, b1, b2);
  std::map<std::string, int> labels;
  for (const auto& [id, k] : A0.label_map()) {
    const auto i = r.lattice.index_of(id);
    ensure(i.has_value() && r.lattice.below(*i) == 0, "split: an atom of the base was lost");
    labels[id] = k;
  }
  ASCLattice A1(r.lattice, labels);
  ensure(passes_sub_asc(check_asc(A1, {kDefaultElementCap, false})), "asc split violates ASC1-ASC3");
  detail::ensure_asc_embedding(A0, A1, r.embedding);
  return {A1, r.x1, r.x2, r.embedding};
}

/// Linear representation with exact point counts: an atom of sc-dimension 0
/// labelled k >= 1 becomes k points of Q^1, a generic one becomes N points; the
/// remaining irreducibles are lifted as usual. The ambient dimension does not
/// depend on N.
inline Representation asc_represent(const ASCLattice& A, int N, bool verify = true) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "N must be positive");
  const Lattice& L = A.base();
  Representation rep;
  rep.images.assign(L.num_irreducibles(), SpecialSet(0));
  std::vector<bool> placed(L.num_irreducibles(), false);
  bool any = false;
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i) any = any || L.dim_label(i) == 0;
  if (any) {
    rep.ambient = 1;
    long next = 0;
    for (std::size_t i = 0; i < L.num_irreducibles(); ++i) {
      if (L.dim_label(i) != 0) continue;
      const int count = A.label(i) > 0 ? A.label(i) : N;
      std::vector<SpecialVariety> pts;
      for (int c = 0; c < count; ++c) pts.emplace_back(QVec{mpq_class(next++)}, std::vector<std::size_t>{});
      rep.images[i] = SpecialSet(1, std::move(pts));
      placed[i] = true;
    }
  }
  rep = detail::represent_rest(L, std::move(rep), std::move(placed));
  if (verify) ensure(verify_representation(L, rep), "asc representation failed verification");
  return rep;
}

/// asc of a special set: its number of points when it is finite, 0 otherwise.
inline int geometric_asc(const SpecialSet& S) {
  if (S.empty() || S.dim() != 0) return 0;
  return static_cast<int>(S.varieties().size());
}

}  // namespace sclat
