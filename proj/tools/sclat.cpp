// Command-line front end: reads lattice, ASC and geometry JSON, runs one
// operation, prints canonical JSON. Exit 0 = ok, 1 = a checked property
// failed, 2 = bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sclat/sclat.hpp"

using namespace sclat;
using io::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

std::vector<Elem> elems_from(const Lattice& L, const std::string& text) {
  std::vector<Elem> out;
  if (text.empty()) return out;
  const json j = io::parse(text);
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a list of elements");
  for (const json& e : j) out.push_back(io::elem_from_json(L, e));
  return out;
}

Elem elem_from(const Lattice& L, const std::string& text) { return io::elem_from_json(L, io::parse(text)); }

struct Options {
  std::string format = "json";
  std::size_t budget = kDefaultElementCap;
  std::uint64_t seed = 1;
};

void emit(const Options& o, const json& j) { std::cout << (o.format == "json" ? j.dump(2) : j.dump()) << "\n"; }

int emit_report(const Options& o, const Lattice& L, const Report& r) {
  if (o.format == "text") {
    for (const LawResult& line : r.lines) {
      std::cout << line.law << ": " << (line.pass ? "pass" : "FAIL");
      if (!line.pass && !line.witness.empty()) {
        json w = json::array();
        for (const Elem& e : line.witness) w.push_back(io::to_json(L, e));
        std::cout << " " << w.dump();
      }
      std::cout << "\n";
    }
  } else {
    emit(o, io::to_json(L, r));
  }
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subscaled, scaled and ASC lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", o.budget, "cap on exhaustive enumerations");
  app.add_option("--seed", o.seed, "seed for randomized runs");
  std::function<int()> run;

  std::string file, file2, gens, sig, a_text, b1_text, b2_text, base_map;
  bool super = false;
  int d = 0, max_irr = 0, n_points = 3, max_k = 2;
  unsigned long mu_n = 0;
  int mu_d = 0;

  auto* check = app.add_subcommand("check", "evaluate the TC/SC laws and SC0");
  check->add_option("lattice", file)->required();
  check->add_flag("--super", super, "also evaluate catenarity and splitting");
  check->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      return emit_report(o, L, check_axioms(L, {o.budget, super}));
    };
  });

  auto* clo = app.add_subcommand("closure", "substructure generated by a list of elements");
  clo->add_option("lattice", file)->required();
  clo->add_option("--gens", gens, "JSON list of elements");
  clo->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      const auto g = elems_from(L, gens);
      const SubLattice S = closure(L, g);
      json members = json::array(), irr = json::array();
      for (const Elem& e : S.members()) members.push_back(io::to_json(L, e));
      for (const Elem& e : S.irreducibles()) irr.push_back(io::to_json(L, e));
      std::set<Mask> distinct;
      for (const Elem& e : g) distinct.insert(e.ideal());
      emit(o, {{"members", members},
               {"irreducibles", irr},
               {"lattice", io::to_json(as_lattice(S).lattice)},
               {"mu", mu(distinct.size(), L.sc_dim(L.one())).get_str()}});
      return 0;
    };
  });

  auto* sigs = app.add_subcommand("signatures", "every signature over the lattice");
  sigs->add_option("lattice", file)->required();
  sigs->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      json out = json::array();
      for (const Signature& s : enumerate_signatures(L)) out.push_back(io::to_json(L, s));
      emit(o, out);
      return 0;
    };
  });

  auto* real = app.add_subcommand("realize", "primitive extension with a given signature");
  real->add_option("lattice", file)->required();
  real->add_option("--sig", sig, "signature JSON")->required();
  real->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      const Realization r = realize(L, io::signature_from_json(L, io::parse(sig)));
      emit(o, {{"lattice", io::to_json(r.lattice)}, {"x1", io::to_json(r.lattice, r.x1)}, {"x2", io::to_json(r.lattice, r.x2)}});
      return 0;
    };
  });

  auto* dec = app.add_subcommand("decompose", "chain of primitive extensions over a base");
  dec->add_option("lattice", file)->required();
  dec->add_option("--base", gens, "JSON list of elements generating the base");
  dec->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      emit(o, io::to_json(decompose(L, closure(L, elems_from(L, gens)))));
      return 0;
    };
  });

  auto* isoc = app.add_subcommand("iso", "isomorphism between two lattices");
  isoc->add_option("a", file)->required();
  isoc->add_option("b", file2)->required();
  isoc->callback([&] {
    run = [&] {
      const Lattice A = io::lattice_from_json(read_json(file)), B = io::lattice_from_json(read_json(file2));
      const auto f = iso(A, B);
      if (!f) {
        emit(o, nullptr);
        return 1;
      }
      json m = json::object();
      for (std::size_t i = 0; i < A.num_irreducibles(); ++i) m[A.id(i)] = io::to_json(B, f->image_of_irr(i));
      emit(o, m);
      return 0;
    };
  });

  auto* emb = app.add_subcommand("embed", "embed a lattice into a target over a base");
  emb->add_option("lattice", file)->required();
  emb->add_option("target", file2)->required();
  emb->add_option("--base", gens, "JSON list of elements generating the base");
  emb->add_option("--base-map", base_map, "JSON object: base irreducible name -> target element")->required();
  emb->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file)), T = io::lattice_from_json(read_json(file2));
      const SubLattice base = closure(L, elems_from(L, gens));
      const AbstractSub A = as_lattice(base);
      const json bm = io::parse(base_map);
      std::vector<Elem> imgs;
      for (std::size_t i = 0; i < A.lattice.num_irreducibles(); ++i) {
        const std::string& name = A.lattice.id(i);
        if (!bm.contains(name)) throw Error(ErrorKind::InvalidInput, "base map misses '" + name + "'");
        imgs.push_back(io::elem_from_json(T, bm.at(name)));
      }
      const EmbedResult r = embed_over(base, LatticeMap(A.lattice, T, imgs));
      if (!r.embedding) {
        emit(o, {{"unmatched", io::to_json(T, *r.unmatched)}, {"step", r.failed_step}});
        return 1;
      }
      json m = json::object();
      for (std::size_t i = 0; i < L.num_irreducibles(); ++i) m[L.id(i)] = io::to_json(T, r.embedding->image_of_irr(i));
      emit(o, m);
      return 0;
    };
  });

  auto* spl = app.add_subcommand("split", "split a into x1, x2 above b1, b2");
  spl->add_option("lattice", file)->required();
  spl->add_option("--a", a_text)->required();
  spl->add_option("--b1", b1_text)->required();
  spl->add_option("--b2", b2_text)->required();
  spl->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      const SplitResult r = split_extend(L, elem_from(L, a_text), elem_from(L, b1_text), elem_from(L, b2_text));
      emit(o, {{"lattice", io::to_json(r.lattice)}, {"x1", io::to_json(r.lattice, r.x1)}, {"x2", io::to_json(r.lattice, r.x2)}});
      return 0;
    };
  });

  auto* rep = app.add_subcommand("represent", "special linear sets over Q for the irreducibles");
  rep->add_option("lattice", file)->required();
  rep->callback([&] {
    run = [&] {
      const Lattice L = io::lattice_from_json(read_json(file));
      emit(o, io::to_json(L, represent(L)));
      return 0;
    };
  });

  auto* ora = app.add_subcommand("oracle", "lattice generated by special sets");
  ora->add_option("geometry", file, "a special set, or {X, images} as printed by represent")->required();
  ora->callback([&] {
    run = [&] {
      const json j = read_json(file);
      OracleLattice O;
      if (j.contains("X")) {
        std::vector<SpecialSet> assigned;
        for (const auto& [id, s] : j.at("images").items()) assigned.push_back(io::special_set_from_json(s));
        O = oracle_lattice(io::special_set_from_json(j.at("X")), assigned, std::max<std::size_t>(o.budget, kDefaultSaturationBudget));
      } else {
        O = oracle_lattice(io::special_set_from_json(j), {}, std::max<std::size_t>(o.budget, kDefaultSaturationBudget));
      }
      json sets = json::object();
      for (std::size_t i = 0; i < O.irreducible_sets.size(); ++i) sets[O.lattice.id(i)] = io::to_json(O.irreducible_sets[i]);
      emit(o, {{"lattice", io::to_json(O.lattice)}, {"sets", sets}, {"family_size", O.family_size}});
      return 0;
    };
  });

  auto* pri = app.add_subcommand("primes", "prime lattices up to isomorphism");
  pri->add_option("--d", d)->required();
  pri->add_option("--max-irr", max_irr)->required();
  pri->callback([&] {
    run = [&] {
      const auto ps = enumerate_primes(d, static_cast<std::size_t>(max_irr));
      if (o.format == "text") {
        std::cout << ps.size() << "\n";
      } else {
        json out = json::array();
        for (const Lattice& L : ps) out.push_back(io::to_json(L));
        emit(o, {{"count", ps.size()}, {"lattices", out}});
      }
      return 0;
    };
  });

  auto* ascc = app.add_subcommand("asc-check", "evaluate ASC0-ASC3 and atomicity");
  ascc->add_option("lattice", file)->required();
  ascc->add_flag("--super", super, "also evaluate catenarity and ASC-splitting");
  ascc->callback([&] {
    run = [&] {
      const ASCLattice A = io::asc_from_json(read_json(file));
      return emit_report(o, A.base(), check_asc(A, {o.budget, super}));
    };
  });

  auto* ascr = app.add_subcommand("asc-realize", "primitive extension with an ASC-signature");
  ascr->add_option("lattice", file)->required();
  ascr->add_option("--sig", sig, "signature JSON with \"k\": [k1, k2]")->required();
  ascr->add_option("--max-k", max_k, "label bound when --sig is \"list\"");
  ascr->callback([&] {
    run = [&] {
      const ASCLattice A = io::asc_from_json(read_json(file));
      if (sig == "list") {
        json out = json::array();
        for (const ASCSignature& s : asc_signatures(A, max_k)) out.push_back(io::to_json(A, s));
        emit(o, out);
        return 0;
      }
      const ASCRealization r = asc_realize(A, io::asc_signature_from_json(A, io::parse(sig)));
      const Lattice& L1 = r.lattice.base();
      emit(o, {{"lattice", io::to_json(r.lattice)}, {"x1", io::to_json(L1, r.x1)}, {"x2", io::to_json(L1, r.x2)}});
      return 0;
    };
  });

  auto* ascp = app.add_subcommand("asc-represent", "representation with exact point counts");
  ascp->add_option("lattice", file)->required();
  ascp->add_option("--n", n_points, "points for generic atoms");
  ascp->callback([&] {
    run = [&] {
      const ASCLattice A = io::asc_from_json(read_json(file));
      emit(o, io::to_json(A.base(), asc_represent(A, n_points)));
      return 0;
    };
  });

  auto* rndc = app.add_subcommand("random", "a random labelled lattice, reproducible from --seed");
  rndc->add_option("--d", d, "largest label")->required();
  rndc->add_option("--max-irr", max_irr)->required();
  rndc->add_flag("--heights", super, "label by height, so the lattice is scaled");
  rndc->callback([&] {
    run = [&] {
      rnd::Rng rng(o.seed);
      const Lattice L = rnd::random_lattice(rng, static_cast<std::size_t>(max_irr), d);
      emit(o, io::to_json(super ? rnd::height_labelled(L) : L));
      return 0;
    };
  });

  auto* muc = app.add_subcommand("mu", "the bound mu(n, d)");
  muc->add_option("n", mu_n)->required();
  muc->add_option("d", mu_d)->required();
  muc->callback([&] {
    run = [&] {
      std::cout << mu(mu_n, mu_d).get_str() << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PostconditionFailure& e) {
    std::cerr << "postcondition failed: " << e.what() << "\n";
    return 1;
  }
}
