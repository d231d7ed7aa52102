#pragma once

// Exhaustive evaluation of the subscaled-lattice axioms, the derived laws and
// the super-scaled properties on a finite lattice.

#include <cstddef>
#include <string>
#include <vector>

#include "sclat/lattice.hpp"
#include "sclat/report.hpp"

namespace sclat {

struct CheckOptions {
  std::size_t budget = kDefaultElementCap;  // element count cap; work is O(budget^3)
  bool super_properties = true;             // catenarity and splitting lines
};

namespace detail {

inline Elem join_of_ck(const Lattice& L, const Elem& a, unsigned subset, int d) {
  Elem out = L.zero();
  for (int i = 0; i <= d; ++i)
    if ((subset >> i) & 1U) out = L.join(out, L.c_k(a, i));
  return out;
}

inline Elem join_ck_upto(const Lattice& L, const Elem& a, int k) {
  Elem out = L.zero();
  for (int i = 0; i <= k; ++i) out = L.join(out, L.c_k(a, i));
  return out;
}

// sc-dim from its definition: the least l with a = C^0(a) v ... v C^l(a).
inline int sc_dim_by_definition(const Lattice& L, const Elem& a) {
  if (a.is_zero()) return -1;
  for (int l = 0; l <= L.d(); ++l)
    if (join_ck_upto(L, a, l) == a) return l;
  return L.d() + 1;
}

}  // namespace detail

/// Catenarity: for r <= q <= p and c <= a with a p-pure, c r-pure, some q-pure b
/// lies between them.
inline LawResult check_catenarity(const Lattice& L, const std::vector<Elem>& els) {
  detail::LawCheck law("catenarity");
  std::vector<std::vector<Elem>> pure(L.d() + 1);
  for (const Elem& e : els) {
    int s = L.sc_dim(e);
    if (s >= 0 && L.is_pure(e, s)) pure[s].push_back(e);
  }
  for (int p = 0; p <= L.d() && law.ok(); ++p)
    for (const Elem& a : pure[p])
      for (int r = 0; r <= p && law.ok(); ++r)
        for (const Elem& c : pure[r]) {
          if (!L.leq(c, a)) continue;
          for (int q = r; q <= p; ++q) {
            bool found = false;
            for (const Elem& b : pure[q])
              if (L.leq(c, b) && L.leq(b, a)) {
                found = true;
                break;
              }
            law.require(found, {c, a});
          }
        }
  return law.take();
}

/// Finds a1, a2 splitting a over (b1, b2), if any. a1 = a - a2 forces a1 to be a
/// join of components of a, so only those are tried.
inline std::optional<std::pair<Elem, Elem>> find_split(const Lattice& L, const Elem& a, const Elem& b1,
                                                       const Elem& b2) {
  const std::vector<std::size_t> cs = L.components(a);
  if (cs.size() >= 20) throw Error(ErrorKind::SizeLimit, "too many components to search a splitting");
  const Elem target = L.meet(b1, b2);
  for (unsigned s = 1; s < (1U << cs.size()); ++s) {
    Mask m = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if ((s >> i) & 1U) m |= bits::bit(cs[i]);
    const Elem a1 = L.down_closure(m);
    const Elem a2 = L.minus(a, a1);
    if (a2.is_zero() || !L.leq(b1, a1) || !L.leq(b2, a2)) continue;
    if (L.minus(a, a2) == a1 && L.meet(a1, a2) == target) return std::make_pair(a1, a2);
  }
  return std::nullopt;
}

/// Splitting, optionally guarded by C^0(a) = 0 (the atomic variant).
inline LawResult check_splitting(const Lattice& L, const std::vector<Elem>& els, bool zero_dim_guard,
                                 const char* name = "splitting") {
  detail::LawCheck law(name);
  for (const Elem& a : els) {
    if (!law.ok()) break;
    if (zero_dim_guard && !L.c_k(a, 0).is_zero()) continue;
    for (const Elem& b1 : els) {
      if (!law.ok()) break;
      if (!L.leq(b1, a)) continue;
      for (const Elem& b2 : els) {
        if (!L.leq(b2, a) || !L.way_below(L.join(b1, b2), a)) continue;
        if (!find_split(L, a, b1, b2)) {
          law.fail({b1, b2, a});
          break;
        }
      }
    }
  }
  return law.take();
}

inline Report check_axioms(const Lattice& L, const CheckOptions& opt = {}) {
  const std::vector<Elem> els = L.elements(opt.budget);
  const int d = L.d();
  if (d > 20) throw Error(ErrorKind::SizeLimit, "language bound too large for subset quantifiers");
  const unsigned all_subsets = 1U << (d + 1);
  Report rep;
  using detail::LawCheck;

  {
    LawCheck law("distributive");
    for (const Elem& a : els)
      for (const Elem& b : els)
        for (const Elem& c : els)
          law.require(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)) &&
                          L.join(a, L.meet(b, c)) == L.meet(L.join(a, b), L.join(a, c)),
                      {a, b, c});
    rep.lines.push_back(law.take());
  }
  {
    // a - b is the least c with a <= b v c
    LawCheck law("minus-least");
    for (const Elem& a : els)
      for (const Elem& b : els) {
        const Elem r = L.minus(a, b);
        law.require(L.leq(a, L.join(b, r)), {a, b});
        for (const Elem& c : els)
          if (L.leq(a, L.join(b, c))) law.require(L.leq(r, c), {a, b, c});
      }
    rep.lines.push_back(law.take());
  }
  {
    LawCheck tc1("TC1"), tc3("TC3");
    for (const Elem& a : els)
      for (const Elem& b : els) {
        tc1.require(a == L.join(L.meet(a, b), L.minus(a, b)), {a, b});
        tc3.require(L.minus(L.minus(a, b), b) == L.minus(a, b), {a, b});
      }
    LawCheck tc2("TC2"), tc4("TC4");
    for (const Elem& x : els)
      for (const Elem& y : els)
        for (const Elem& z : els) {
          tc2.require(L.minus(L.join(x, y), z) == L.join(L.minus(x, z), L.minus(y, z)), {x, y, z});
          tc4.require(L.minus(x, L.join(y, z)) == L.minus(L.minus(x, y), z), {x, y, z});
        }
    rep.lines.push_back(tc1.take());
    rep.lines.push_back(tc2.take());
    rep.lines.push_back(tc3.take());
    rep.lines.push_back(tc4.take());
  }

  LawCheck sc1("SC1"), sc2("SC2"), sc3("SC3"), sc4("SC4"), sc5("SC5"), sc6("SC6");
  LawCheck sc7("SC7"), sc8("SC8"), sc9("SC9"), sc10("SC10"), sc11("SC11"), sc12("SC12"), sc13("SC13");
  LawCheck sc0("SC0");
  LawCheck wb("way-below-forms"), dims("dim-forms");

  for (const Elem& a : els) {
    const int sa = L.sc_dim(a);
    sc1.require(detail::join_ck_upto(L, a, d) == a, {a});

    for (unsigned s = 0; s < all_subsets && sc2.ok(); ++s) {
      const Elem j = detail::join_of_ck(L, a, s, d);
      for (int k = 0; k <= d; ++k) {
        const Elem want = ((s >> k) & 1U) ? L.c_k(a, k) : L.zero();
        sc2.require(L.c_k(j, k) == want, {a});
      }
    }

    // pure parts of one element; with two different elements the inequality
    // already fails for a point on a line
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        if (i != j) sc4.require(L.sc_dim(L.meet(L.c_k(a, i), L.c_k(a, j))) < std::min(i, j), {a});

    int max_nonzero = -1;
    for (int k = 0; k <= d; ++k)
      if (!L.c_k(a, k).is_zero()) max_nonzero = k;
    sc7.require(sa == max_nonzero && sa == detail::sc_dim_by_definition(L, a), {a});

    for (int k = 0; k <= d; ++k) {
      const Elem lower = detail::join_ck_upto(L, a, k);
      Elem j = L.zero();
      for (const Elem& b : els)
        if (L.leq(b, lower) && L.c_k(b, k) == b) j = L.join(j, b);
      sc9.require(L.c_k(a, k) == j, {a});
    }

    // dim a <= sc-dim a; the reverse inequality is the scaling axiom
    const int la = L.lat_dim(a);
    sc10.require(la <= sa, {a});
    sc0.require(la == sa, {a});

    for (unsigned s = 0; s < all_subsets && sc11.ok(); ++s)
      sc11.require(L.minus(a, detail::join_of_ck(L, a, s, d)) == detail::join_of_ck(L, a, ~s, d), {a});

    for (int k = 0; k <= d; ++k) {
      const bool pure_qf = L.is_pure(a, k);
      bool pure_q = true;
      for (const Elem& b : els) {
        const Elem r = L.minus(a, b);
        if (!r.is_zero() && L.sc_dim(r) != k) {
          pure_q = false;
          break;
        }
      }
      sc13.require(pure_qf == pure_q, {a});
    }

    dims.require(la == L.lat_dim_by_way_below(a), {a});

    for (const Elem& b : els) {
      const int sb = L.sc_dim(b);
      for (int k = std::max({sa, sb, 0}); k <= d; ++k)
        sc3.require(L.c_k(L.join(a, b), k) == L.join(L.c_k(a, k), L.c_k(b, k)), {a, b});
      for (int k = std::max(sb, 0); k <= d; ++k)
        sc5.require(L.minus(L.c_k(a, k), b) == L.minus(L.c_k(a, k), L.c_k(b, k)), {a, b});
      const bool way = L.way_below(b, a);
      if (way) sc6.require(sb < sa, {b, a});
      wb.require(way == L.way_below_exhaustive(b, a), {b, a});
      sc8.require(L.sc_dim(L.join(a, b)) == std::max(sa, sb), {a, b});
      for (int k = 0; k <= d; ++k)
        sc12.require(L.minus(L.c_k(a, k), b) == L.c_k(L.minus(L.c_k(a, k), b), k), {a, b});
    }
  }

  for (LawCheck* c : {&sc1, &sc2, &sc3, &sc4, &sc5, &sc6, &sc7, &sc8, &sc9, &sc10, &sc11, &sc12, &sc13, &sc0})
    rep.lines.push_back(c->take());
  rep.lines.push_back(wb.take());
  rep.lines.push_back(dims.take());

  if (opt.super_properties) {
    rep.lines.push_back(check_catenarity(L, els));
    rep.lines.push_back(check_splitting(L, els, false));
  }
  return rep;
}

/// Laws every finite subscaled lattice must satisfy (everything except SC0 and
/// the super-scaled properties).
inline const std::vector<std::string>& subscaled_laws() {
  static const std::vector<std::string> names = {
      "distributive", "minus-least", "TC1",  "TC2",  "TC3",  "TC4",  "SC1",  "SC2",
      "SC3",          "SC4",         "SC5",  "SC6",  "SC7",  "SC8",  "SC9",  "SC10",
      "SC11",         "SC12",        "SC13", "way-below-forms", "dim-forms"};
  return names;
}

inline bool passes_subscaled(const Report& r) {
  for (const auto& n : subscaled_laws()) {
    const LawResult* line = r.find(n);
    if (line == nullptr || !line->pass) return false;
  }
  return true;
}

}  // namespace sclat
