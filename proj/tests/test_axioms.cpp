#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sclat/axioms.hpp"
#include "sclat/random.hpp"

using namespace sclat;

TEST(Axioms, FixtureXPassesEverySubscaledLawAndScaling) {
  const Report r = check_axioms(fx::lx());
  EXPECT_TRUE(passes_subscaled(r));
  EXPECT_TRUE(r.at("SC0").pass);
}

TEST(Axioms, OneElementLatticePassesEverything) {
  const Report r = check_axioms(Lattice::from_poset({}));
  EXPECT_TRUE(r.all_pass());
}

TEST(Axioms, NonMonotoneMutationReportsSC4WithWitness) {
  IrrPoset P = fx::poset_x();
  P.irreducibles[0].dim = 1;  // p
  P.irreducibles[2].dim = 2;  // c2
  P.d = 2;
  const Lattice L = Lattice::from_poset(P, Lattice::Validation::skip_dim_monotonicity);
  const Report r = check_axioms(L);
  const LawResult& sc4 = r.at("SC4");
  EXPECT_FALSE(sc4.pass);
  ASSERT_EQ(sc4.witness.size(), 1u);
  EXPECT_FALSE(passes_subscaled(r));
}

TEST(Axioms, RandomLabellingsAreSubscaledAndHeightsAreScaled) {
  rnd::Rng rng(11);
  int sc0_failures_seen = 0;
  for (int round = 0; round < 150; ++round) {
    const Lattice L = rnd::random_lattice(rng, 6, 3);
    const Report r = check_axioms(L, {kDefaultElementCap, false});
    ASSERT_TRUE(passes_subscaled(r)) << round;

    bool labels_are_heights = true;
    for (std::size_t i = 0; i < L.num_irreducibles(); ++i) labels_are_heights = labels_are_heights && L.dim_label(i) == L.height(i);
    EXPECT_EQ(r.at("SC0").pass, labels_are_heights);
    if (!labels_are_heights) ++sc0_failures_seen;

    const Report h = check_axioms(rnd::height_labelled(L), {kDefaultElementCap, false});
    EXPECT_TRUE(passes_subscaled(h));
    EXPECT_TRUE(h.at("SC0").pass);
  }
  EXPECT_GT(sc0_failures_seen, 0);
}

TEST(Axioms, LawsHoldInBruteForceModel) {
  rnd::Rng rng(12);
  for (int round = 0; round < 40; ++round) {
    const IrrPoset P = rnd::random_poset(rng, 5, 2);
    const oracle::Brute B(P);
    for (const auto& a : B.elements)
      for (const auto& b : B.elements) {
        EXPECT_EQ(B.join(B.meet(a, b), B.minus(a, b)), a);
        EXPECT_EQ(B.sc_dim(B.join(a, b)), std::max(B.sc_dim(a), B.sc_dim(b)));
        EXPECT_LE(B.lat_dim(a), B.sc_dim(a));
        for (int i = 0; i <= 2; ++i)
          for (int j = 0; j <= 2; ++j)
            if (i != j) EXPECT_LT(B.sc_dim(B.meet(B.c_k(a, i), B.c_k(a, j))), std::min(i, j));
      }
  }
}

TEST(Axioms, FiniteLatticesAreNotSuper) {
  const Report r = check_axioms(fx::lg());
  EXPECT_FALSE(r.at("splitting").pass);
}

TEST(Axioms, LanguageBoundTooLarge) {
  IrrPoset P{{{"a", 0, {}}}, 25};
  EXPECT_THROW(check_axioms(Lattice::from_poset(P)), Error);
}
