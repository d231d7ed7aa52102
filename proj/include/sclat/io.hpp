#pragma once

// Canonical JSON for lattices, elements, reports, signatures, primitive chains,
// special sets and ASC lattices. Objects use sorted keys and rationals are
// always written "p/q", so equal values serialize to identical bytes.

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "sclat/asc.hpp"
#include "sclat/extensions.hpp"
#include "sclat/geometry.hpp"
#include "sclat/lattice.hpp"
#include "sclat/report.hpp"
#include "sclat/sublattice.hpp"

namespace sclat::io {

using json = nlohmann::json;

namespace detail {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace detail

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

// --- lattices and elements ---------------------------------------------------

inline json to_json(const Lattice& L) {
  json irr = json::array();
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i) {
    std::vector<std::string> covers;
    bits::for_each(L.covers_of(i), [&](std::size_t j) { covers.push_back(L.id(j)); });
    std::sort(covers.begin(), covers.end());
    irr.push_back({{"id", L.id(i)}, {"dim", L.dim_label(i)}, {"covers", covers}});
  }
  return {{"d", L.d()}, {"irreducibles", irr}};
}

inline Lattice lattice_from_json(const json& j, Lattice::Validation v = Lattice::Validation::strict) {
  IrrPoset P = detail::guarded([&] {
    IrrPoset out;
    if (j.contains("d") && !j.at("d").is_null()) out.d = j.at("d").get<int>();
    for (const json& n : detail::field(j, "irreducibles")) {
      IrrPoset::Node node;
      node.id = detail::field(n, "id").get<std::string>();
      node.dim = detail::field(n, "dim").get<int>();
      if (n.contains("covers")) node.covers = n.at("covers").get<std::vector<std::string>>();
      out.irreducibles.push_back(std::move(node));
    }
    return out;
  });
  return Lattice::from_poset(P, v);
}

inline json to_json(const Lattice& L, const Elem& a) {
  L.own(a);
  std::vector<std::string> ids;
  for (std::size_t i : L.components(a)) ids.push_back(L.id(i));
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline Elem elem_from_json(const Lattice& L, const json& j) {
  const auto ids = detail::guarded([&] { return j.get<std::vector<std::string>>(); });
  return L.elem_of_ids(ids);
}

inline json to_json(const Lattice& L, const Report& r) {
  json lines = json::array();
  for (const LawResult& line : r.lines) {
    json o = {{"law", line.law}, {"pass", line.pass}};
    if (!line.witness.empty()) {
      json w = json::array();
      for (const Elem& e : line.witness) w.push_back(e.lattice_tag() == L.tag() ? to_json(L, e) : json(nullptr));
      o["witness"] = w;
    }
    lines.push_back(o);
  }
  return lines;
}

// --- signatures and chains ---------------------------------------------------

inline json to_json(const SubLattice& S, const Signature& s) {
  const Lattice& L = S.parent();
  return {{"g", S.name_of(s.g)}, {"q", s.q}, {"H", json::array({to_json(L, s.h1), to_json(L, s.h2)})}};
}

inline json to_json(const Lattice& L, const Signature& s) { return to_json(SubLattice::full(L), s); }

/// g is an irreducible id, or component ids joined by '|'.
inline Signature signature_from_json(const Lattice& L, const json& j) {
  return detail::guarded([&] {
    const std::string g = detail::field(j, "g").get<std::string>();
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = g.find('|', start);
      parts.push_back(g.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    const json& H = detail::field(j, "H");
    if (!H.is_array() || H.size() != 2) throw Error(ErrorKind::ParseError, "H must hold two elements");
    return Signature{L.elem_of_ids(parts), detail::field(j, "q").get<int>(), elem_from_json(L, H[0]),
                     elem_from_json(L, H[1])};
  });
}

inline json to_json(const PrimitiveChain& c) {
  json steps = json::array();
  for (const ChainStep& st : c.steps) {
    std::vector<std::string> added;
    for (const Elem& e : st.after.irreducibles())
      if (!st.before.contains(e)) added.push_back(st.after.name_of(e));
    std::sort(added.begin(), added.end());
    steps.push_back({{"signature", to_json(st.before, st.signature)}, {"irr_added", added}});
  }
  return {{"base", to_json(as_lattice(c.base).lattice)}, {"steps", steps}};
}

// --- geometry ----------------------------------------------------------------

inline std::string rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class rational_from(const std::string& s) {
  const auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  }
}

/// Axes are written 1-based.
inline json to_json(const SpecialSet& S) {
  json vars = json::array();
  for (const SpecialVariety& V : S.varieties()) {
    json base = json::array();
    for (const mpq_class& q : V.base) base.push_back(rational(q));
    json axes = json::array();
    for (std::size_t i : V.axes) axes.push_back(i + 1);
    vars.push_back({{"axes", axes}, {"base", base}});
  }
  return {{"ambient", S.ambient()}, {"varieties", vars}};
}

inline SpecialSet special_set_from_json(const json& j) {
  return detail::guarded([&] {
    const auto m = detail::field(j, "ambient").get<std::size_t>();
    std::vector<SpecialVariety> vars;
    for (const json& v : detail::field(j, "varieties")) {
      QVec base;
      for (const json& q : detail::field(v, "base")) base.push_back(rational_from(q.get<std::string>()));
      if (base.size() != m) throw Error(ErrorKind::AmbientMismatch, "variety base has the wrong length");
      std::vector<std::size_t> axes;
      for (const json& a : detail::field(v, "axes")) {
        const auto k = a.get<std::size_t>();
        if (k < 1 || k > m) throw Error(ErrorKind::InvalidInput, "axis outside 1..ambient");
        axes.push_back(k - 1);
      }
      vars.emplace_back(std::move(base), std::move(axes));
    }
    return SpecialSet(m, std::move(vars));
  });
}

inline json to_json(const Lattice& L, const Representation& rep) {
  json images = json::object();
  for (std::size_t i = 0; i < L.num_irreducibles(); ++i) images[L.id(i)] = to_json(rep.images[i]);
  return {{"ambient", rep.ambient}, {"X", to_json(rep.X)}, {"images", images}};
}

// --- ASC lattices ------------------------------------------------------------

inline json to_json(const ASCLattice& A) {
  json j = to_json(A.base());
  json labels = json::object();
  for (const auto& [id, k] : A.label_map()) labels[id] = k;
  j["atom_labels"] = labels;
  return j;
}

inline ASCLattice asc_from_json(const json& j) {
  Lattice L = lattice_from_json(j);
  const auto labels = detail::guarded([&] {
    std::map<std::string, int> out;
    if (j.contains("atom_labels"))
      for (const auto& [id, k] : j.at("atom_labels").items()) out[id] = k.get<int>();
    return out;
  });
  return ASCLattice(std::move(L), labels);
}

inline json to_json(const ASCLattice& A, const ASCSignature& s) {
  json j = to_json(A.base(), s.sig);
  j["k"] = {s.k1, s.k2};
  return j;
}

inline ASCSignature asc_signature_from_json(const ASCLattice& A, const json& j) {
  ASCSignature s{signature_from_json(A.base(), j), 0, 0};
  detail::guarded([&] {
    if (j.contains("k")) {
      const auto k = j.at("k").get<std::vector<int>>();
      if (k.size() != 2) throw Error(ErrorKind::ParseError, "k must hold two counts");
      s.k1 = k[0];
      s.k2 = k[1];
    }
    return 0;
  });
  return s;
}

}  // namespace sclat::io
