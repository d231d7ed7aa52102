#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "sclat/io.hpp"
#include "sclat/random.hpp"

using namespace sclat;
using io::json;

namespace {

json read_fixture(const std::string& name) {
  std::ifstream in(std::string(SCLAT_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

}  // namespace

TEST(Io, FixtureFilesMatchInCodeFixtures) {
  EXPECT_EQ(io::lattice_from_json(read_fixture("l_x.json")), fx::lx());
  EXPECT_EQ(io::lattice_from_json(read_fixture("l_y.json")), fx::ly());
  EXPECT_EQ(io::lattice_from_json(read_fixture("chain.json")), fx::lg());
}

TEST(Io, LatticeRoundTripIsByteStable) {
  rnd::Rng rng(81);
  for (int round = 0; round < 50; ++round) {
    const Lattice L = rnd::random_lattice(rng, 7, 3);
    const std::string text = io::to_json(L).dump();
    const Lattice back = io::lattice_from_json(io::parse(text));
    EXPECT_EQ(back, L);
    EXPECT_EQ(io::to_json(back).dump(), text);
    for (const Elem& a : L.elements()) EXPECT_EQ(io::elem_from_json(L, io::to_json(L, a)), a);
  }
}

TEST(Io, ElementsAreSortedAntichains) {
  const Lattice L = fx::lx();
  EXPECT_EQ(io::to_json(L, L.one()).dump(), R"(["c1","c2"])");
  EXPECT_EQ(io::to_json(L, L.zero()).dump(), "[]");
}

TEST(Io, SignatureRoundTrip) {
  const Lattice L = fx::lx();
  for (const Signature& s : enumerate_signatures(L)) {
    const json j = io::to_json(L, s);
    EXPECT_EQ(io::signature_from_json(L, j), s);
  }
  const Lattice G = fx::lg();
  const Signature s = io::signature_from_json(G, io::parse(R"({"g":"g","q":0,"H":[[],[]]})"));
  EXPECT_EQ(s, (Signature{G.irr("g"), 0, G.zero(), G.zero()}));
}

TEST(Io, ChainJson) {
  const Lattice L = fx::lx();
  const json j = io::to_json(decompose(L, SubLattice(L, {})));
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["irr_added"], json::array({"p"}));
  EXPECT_EQ(j["steps"][1]["signature"]["q"], 1);
  EXPECT_EQ(j["base"]["irreducibles"].size(), 1u);
}

TEST(Io, RationalsAreNormalised) {
  EXPECT_EQ(io::rational(mpq_class(3)), "3/1");
  EXPECT_EQ(io::rational(mpq_class(0)), "0/1");
  EXPECT_EQ(io::rational(io::rational_from("4/6")), "2/3");
  EXPECT_EQ(io::rational(io::rational_from("-5")), "-5/1");
  EXPECT_THROW(io::rational_from("1/0"), Error);
  EXPECT_THROW(io::rational_from("x"), Error);
}

TEST(Io, GeometryRoundTrip) {
  const SpecialSet S = io::special_set_from_json(read_fixture("line_and_point.json"));
  EXPECT_EQ(S.dim(), 1);
  EXPECT_EQ(S.varieties().size(), 2u);
  const std::string text = io::to_json(S).dump();
  EXPECT_EQ(io::to_json(io::special_set_from_json(io::parse(text))).dump(), text);

  const Representation r = represent(fx::lx());
  const json j = io::to_json(fx::lx(), r);
  EXPECT_EQ(io::special_set_from_json(j["X"]), r.X);
}

TEST(Io, AscRoundTrip) {
  const ASCLattice A = io::asc_from_json(read_fixture("asc_points.json"));
  EXPECT_EQ(A.label(*A.base().index_of("p")), 2);
  const std::string text = io::to_json(A).dump();
  const ASCLattice B = io::asc_from_json(io::parse(text));
  EXPECT_EQ(io::to_json(B).dump(), text);
}

TEST(Io, ParseErrors) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  EXPECT_EQ(kind([] { io::parse("{"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([] { io::lattice_from_json(io::parse(R"({"d":1})")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind([] { io::lattice_from_json(io::parse(R"({"irreducibles":[{"id":"a","dim":"x"}]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind([] { io::special_set_from_json(io::parse(R"({"ambient":1,"varieties":[{"base":["0/1","1/1"],"axes":[]}]})")); }),
            ErrorKind::AmbientMismatch);
}
