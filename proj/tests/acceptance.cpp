// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// An optional first argument replaces the base seed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "sclat/sclat.hpp"

using namespace sclat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s [%2d] %-28s %s (%.2fs", pass ? "PASS" : "FAIL", n, name, o.detail.c_str(), secs);
  if (limit_s > 0) std::printf(", limit %.0fs", limit_s);
  std::printf(")\n");
  std::fflush(stdout);
}

std::string counts(int bad, int total) { return std::to_string(bad) + " failures / " + std::to_string(total); }

std::uint64_t seed = 20260101;

// 1 -----------------------------------------------------------------------------

Outcome axiom_soundness() {
  rnd::Rng rng(seed + 1);
  int bad = 0;
  for (int round = 0; round < 1000; ++round) {
    const Lattice L = rnd::random_lattice(rng, 7, 3);
    const Report r = check_axioms(L, {kDefaultElementCap, false});
    const Report h = check_axioms(rnd::height_labelled(L), {kDefaultElementCap, false});
    if (!passes_subscaled(r) || !passes_subscaled(h) || !h.at("SC0").pass) ++bad;
  }
  return {bad == 0, counts(bad, 1000)};
}

// 2 -----------------------------------------------------------------------------

Outcome mu_certificate() {
  rnd::Rng rng(seed + 2);
  int bad = 0;
  for (int round = 0; round < 1000; ++round) {
    const Lattice L = rnd::random_lattice(rng, 7, 2);
    const auto gens = rnd::random_gens(rng, L, 3);
    std::set<Mask> distinct;
    for (const Elem& g : gens) distinct.insert(g.ideal());
    try {
      const SubLattice S = closure(L, gens);
      const mpz_class n_irr(static_cast<unsigned long>(S.irreducibles().size()));
      if (n_irr > mu(distinct.size(), L.sc_dim(L.one())) || !S.is_substructure()) ++bad;
    } catch (const PostconditionFailure&) {
      ++bad;
    }
  }
  const bool anchor = mu(1, 1) == 18;
  return {bad == 0 && anchor, counts(bad, 1000) + ", mu(1,1)=" + mu(1, 1).get_str()};
}

// 3 -----------------------------------------------------------------------------

Outcome dimension_duality() {
  rnd::Rng rng(seed + 3);
  int bad = 0, total = 0;
  for (int round = 0; round < 300; ++round) {
    const Lattice L = rnd::random_lattice(rng, 7, 3);
    for (const Elem& a : L.elements()) {
      ++total;
      if (L.lat_dim(a) != L.lat_dim_by_way_below(a)) ++bad;
    }
  }
  return {bad == 0, counts(bad, total) + " elements"};
}

// 4 -----------------------------------------------------------------------------

Outcome signature_round_trip() {
  int bad = 0, sig_total = 0, classes = 0;
  for (const Lattice& L0 : enumerate_posets(4, 2)) {
    ++classes;
    std::vector<Realization> reals;
    for (const Signature& s : enumerate_signatures(L0)) {
      ++sig_total;
      const Realization a = realize(L0, s);
      const Realization b = realize(L0, s, {"u", "v"});
      const SubLattice img = image_of(a.embedding);
      if (!is_primitive(img, a.x1, a.x2) || signature_of(img, a.x1, a.x2) != map_signature(s, a.embedding)) ++bad;
      if (!iso_over_base(a.embedding, b.embedding)) ++bad;
      reals.push_back(a);
    }
    for (std::size_t i = 0; i < reals.size(); ++i)
      for (std::size_t j = i + 1; j < reals.size(); ++j)
        if (iso_over_base(reals[i].embedding, reals[j].embedding)) ++bad;
  }
  return {bad == 0, counts(bad, sig_total) + " signatures over " + std::to_string(classes) + " classes"};
}

// 5 -----------------------------------------------------------------------------

Outcome decompose_rebuild() {
  rnd::Rng rng(seed + 5);
  int bad = 0, done = 0;
  while (done < 500) {
    const auto ext = rnd::random_extension(rng, 6, 2);
    if (ext.base.size() == ext.lattice.count_elements()) continue;
    ++done;
    const PrimitiveChain c = decompose(ext.lattice, ext.base);
    bool ok = !c.steps.empty();
    for (const ChainStep& st : c.steps) ok = ok && is_primitive(st.before, st.x1, st.x2);
    const Rebuild r = rebuild(c);
    // an embedding between lattices of equal size is an isomorphism
    ok = ok && check_embedding(r.to_original).all_pass() && r.lattice.count_elements() == ext.lattice.count_elements();
    const AbstractSub A = as_lattice(c.base);
    const Lattice& R0 = r.base_embedding.source();
    for (std::size_t i = 0; i < R0.num_irreducibles(); ++i)
      ok = ok && r.to_original(r.base_embedding(R0.irr(i))) == A.inclusion(A.lattice.irr(R0.id(i)));
    if (!ok) ++bad;
  }
  return {bad == 0, counts(bad, done)};
}

// 6 -----------------------------------------------------------------------------

Outcome splitting() {
  rnd::Rng rng(seed + 6);
  int bad = 0, done = 0;
  while (done < 200) {
    const auto inst = rnd::random_split_instance(rng, 6, 2);
    if (!inst) continue;
    ++done;
    const SplitResult r = split_extend(inst->lattice, inst->a, inst->b1, inst->b2);
    const Lattice& L = r.lattice;
    const Elem a = r.embedding(inst->a);
    const bool ok = L.minus(a, r.x1) == r.x2 && L.minus(a, r.x2) == r.x1 &&
                    L.meet(r.x1, r.x2) == r.embedding(inst->lattice.meet(inst->b1, inst->b2)) &&
                    check_embedding(r.embedding).all_pass();
    if (!ok) ++bad;
  }
  return {bad == 0, counts(bad, done)};
}

// 7 -----------------------------------------------------------------------------

Outcome representation() {
  int bad = 0, classes = 0;
  for (const Lattice& L : enumerate_posets(5, 4)) {
    ++classes;
    const Representation r = represent(L, false);
    if (!verify_representation(L, r)) ++bad;
  }
  return {bad == 0, counts(bad, classes) + " classes, labels <= 4"};
}

// 8 -----------------------------------------------------------------------------

Outcome embedding_meta() {
  rnd::Rng rng(seed + 8);
  int bad = 0, hyp = 0;
  for (int round = 0; round < 500; ++round) {
    const LatticeMap f = rnd::random_lattice_map(rng, 6, 3);
    const Report r = check_embedding(f);
    if (r.at("hypothesis").pass) {
      ++hyp;
      if (!r.at("conclusion").pass) ++bad;
    }
  }
  return {bad == 0 && hyp > 0, counts(bad, 500) + ", hypothesis held " + std::to_string(hyp) + "x"};
}

// 9 -----------------------------------------------------------------------------

std::vector<ASCLattice> labellings(const Lattice& L, int max_k) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i)
    if (L.below(i) == 0 && L.dim_label(i) == 0) atoms.push_back(L.id(i));
  std::vector<ASCLattice> out;
  std::vector<int> k(atoms.size(), 0);
  while (true) {
    std::map<std::string, int> m;
    for (std::size_t i = 0; i < atoms.size(); ++i) m[atoms[i]] = k[i];
    out.emplace_back(L, m);
    std::size_t pos = 0;
    while (pos < k.size() && k[pos] == max_k) k[pos++] = 0;
    if (pos == k.size()) break;
    ++k[pos];
  }
  return out;
}

// number of labelled atoms below a point set, 0 when one of them is generic
int count_atoms(const ASCLattice& A, const Elem& a) {
  const Lattice& L = A.base();
  if (a.is_zero() || L.sc_dim(a) != 0) return 0;
  int sum = 0;
  for (std::size_t c : L.components(a)) {
    const auto it = A.label_map().find(L.id(c));
    if (it == A.label_map().end() || it->second == 0) return 0;
    sum += it->second;
  }
  return sum;
}

Outcome asc_layer() {
  int bad = 0, cases = 0;
  for (const Lattice& L : enumerate_posets(4, 2))
    for (const ASCLattice& A : labellings(L, 2)) {
      const auto els = L.elements();
      for (const Elem& a : els) {
        ++cases;
        if (A.asc(a) != count_atoms(A, a)) ++bad;
        for (const Elem& b : els) {
          if (a.is_zero() || b.is_zero() || !L.meet(a, b).is_zero()) continue;
          const int ka = A.asc(a), kb = A.asc(b);
          if (A.asc(L.join(a, b)) != (ka > 0 && kb > 0 ? ka + kb : 0)) ++bad;
        }
      }
      if (!passes_sub_asc(check_asc(A, {kDefaultElementCap, false}))) ++bad;

      for (const ASCSignature& s : asc_signatures(A, 2)) {
        ++cases;
        const ASCRealization r = asc_realize(A, s);
        if (asc_signature_of(r.lattice, image_of(r.embedding), r.x1, r.x2) !=
            ASCSignature{map_signature(s.sig, r.embedding), s.k1, s.k2})
          ++bad;
        for (const Elem& a : els)
          if (r.lattice.asc(r.embedding(a)) != A.asc(a)) ++bad;
      }

      for (const Elem& a : els) {
        if (a.is_zero() || !L.c_k(a, 0).is_zero()) continue;
        for (const Elem& b1 : els)
          for (const Elem& b2 : els) {
            if (!L.way_below(L.join(b1, b2), a)) continue;
            ++cases;
            const ASCSplitResult r = asc_split_extend(A, a, b1, b2);
            const Lattice& L1 = r.lattice.base();
            const Elem ea = r.embedding(a);
            const bool ok = L1.minus(ea, r.x1) == r.x2 && L1.minus(ea, r.x2) == r.x1 &&
                            L1.meet(r.x1, r.x2) == r.embedding(L.meet(b1, b2)) &&
                            r.lattice.label_map() == A.label_map() &&
                            passes_sub_asc(check_asc(r.lattice, {kDefaultElementCap, false}));
            if (!ok) ++bad;
          }
      }

      ++cases;
      const Representation r2 = asc_represent(A, 2), r9 = asc_represent(A, 9);
      if (r2.ambient != r9.ambient) ++bad;
      for (const auto& [N, rep] : {std::pair<int, const Representation*>{2, &r2}, {9, &r9}})
        for (std::size_t i = 0; i < L.num_irreducibles(); ++i) {
          if (L.below(i) != 0 || L.dim_label(i) != 0) continue;
          const int k = A.label(i);
          const SpecialSet& img = rep->images[i];
          if (k > 0 && geometric_asc(img) != k) ++bad;
          if (k == 0 && img.varieties().size() < static_cast<std::size_t>(N)) ++bad;
        }
    }
  return {bad == 0, counts(bad, cases) + " checks"};
}

// 10 ----------------------------------------------------------------------------

Outcome prime_regression() {
  std::string detail;
  bool ok = true;
  for (const auto& [d, n] : {std::pair<int, std::size_t>{0, 2}, {1, 3}, {2, 4}}) {
    const auto a = enumerate_primes(d, n), b = enumerate_primes(d, n);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    ok = ok && same && !a.empty();
    detail += "(d=" + std::to_string(d) + ", irr<=" + std::to_string(n) + "): " + std::to_string(a.size()) + " ";
  }
  return {ok, detail + (ok ? "stable" : "unstable")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) seed = std::stoull(argv[1]);
  criterion(1, "axiom soundness", 60, axiom_soundness);
  criterion(2, "mu certificate", 120, mu_certificate);
  criterion(3, "dimension duality", 0, dimension_duality);
  criterion(4, "signature round trip", 300, signature_round_trip);
  criterion(5, "decompose/rebuild", 0, decompose_rebuild);
  criterion(6, "splitting", 0, splitting);
  criterion(7, "linear representation", 300, representation);
  criterion(8, "embedding hypothesis", 0, embedding_meta);
  criterion(9, "ASC layer", 180, asc_layer);
  criterion(10, "prime regression", 0, prime_regression);
  return failures == 0 ? 0 : 1;
}
