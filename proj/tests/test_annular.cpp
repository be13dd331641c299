#include <gtest/gtest.h>

#include <random>

#include "clasp/annular.hpp"

using namespace clasp;

namespace {

PlanarDiagram closure(const char* word, int n, ClosureKind kind = ClosureKind::Braid) {
  return build_closure(parse_braid(word, n), kind);
}

BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), gen(1, n - 1), sign(0, 1);
  std::vector<Letter> l(static_cast<std::size_t>(len(rng)));
  for (Letter& x : l) x = {gen(rng), sign(rng) ? 1 : -1};
  return BraidWord(n, l);
}

}  // namespace

TEST(Annular, SingleEssentialCircle) {
  HomologyTable expect(Ring::Q, true);
  expect.add_free({0, 1, 1}, 1);
  expect.add_free({0, -1, -1}, 1);
  EXPECT_EQ(akh(closure("", 1), Ring::Q), expect);
  EXPECT_EQ(annular_jones(closure("", 1)), LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1));
}

TEST(Annular, TrivialBraidIsATensorPower) {
  // V_1 (x) V_1 = V_2 + V_0
  const std::vector<Sl2Summand> parts = sl2_decompose(akh(closure("", 2), Ring::Q));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (Sl2Summand{0, 0, 0, 1}));
  EXPECT_EQ(parts[1], (Sl2Summand{2, 0, 0, 1}));
  EXPECT_EQ(to_string(parts[1]), "V_2^0{0}");
  EXPECT_EQ(to_string(Sl2Summand{1, -1, 3, 2}), "2*V_1^-1{3}");
}

TEST(Annular, DecompositionRebuildsTheTable) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w = random_word(rng, 3, 6);
    const HomologyTable t = akh(build_closure(w, trial % 2 ? ClosureKind::Clasp : ClosureKind::Braid), Ring::Q);
    EXPECT_EQ(sl2_table(sl2_decompose(t)), t) << w;
  }
}

TEST(Annular, DecompositionRejectsNonCharacters) {
  HomologyTable lopsided(Ring::Q, true);
  lopsided.add_free({0, 1, 1}, 1);
  EXPECT_THROW(sl2_decompose(lopsided), InternalError);
  HomologyTable hole(Ring::Q, true);
  for (int k : {-2, 2}) hole.add_free({0, k, k}, 1);
  EXPECT_THROW(sl2_decompose(hole), InternalError);
  EXPECT_THROW(sl2_decompose(HomologyTable(Ring::Q, false)), InputError);
}

TEST(Annular, EulerCharacteristicIsAnnularJones) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w = random_word(rng, 3, 7);
    const PlanarDiagram d = build_closure(w, trial % 2 ? ClosureKind::Clasp : ClosureKind::Braid);
    const LaurentPoly aj = annular_jones(d);
    EXPECT_EQ(akh(d, Ring::Z).euler_characteristic(), aj) << w;
    EXPECT_EQ(aj.forget_t(), jones(d)) << w;
  }
}

TEST(Annular, RankBoundsKhovanov) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w = random_word(rng, 3, 7);
    const PlanarDiagram d = build_closure(w, ClosureKind::Braid);
    const GradedComplex c(d);
    const std::size_t a = akh(c, Ring::Q).total_free_rank(), k = kh(c, Ring::Q).total_free_rank();
    std::size_t killed = 0;
    for (const auto& [g, r] : d2_induced(c, Ring::Q)) killed += 2 * r;
    EXPECT_LE(k, a - killed) << w;
  }
}

TEST(Annular, D2OnTheTwistedUnknot) {
  // AKh has rank 4, Kh rank 2; one nonzero d-2 accounts for the difference
  const std::map<Grading, std::size_t> d2 = d2_induced(closure("s1", 2), Ring::Q);
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_EQ(d2.begin()->second, 1u);
  EXPECT_EQ(akh(closure("s1", 2), Ring::Q).total_free_rank(), 4u);
  EXPECT_TRUE(d2_induced(closure("", 3), Ring::Q).empty());
  EXPECT_THROW(d2_induced(closure("s1", 2), Ring::Z), InputError);
}

TEST(Annular, BottomWeightIsThePlamenevskayaClass) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord w = random_word(rng, 4, 6);
    const HomologyTable t = akh(build_closure(w, ClosureKind::Braid), Ring::Q);
    const Grading p = plamenevskaya_grading(w);
    std::size_t bottom = 0;
    for (const auto& [g, h] : t.entries())
      if (g.k == -w.strands()) bottom += h.free_rank;
    EXPECT_EQ(bottom, 1u) << w;
    EXPECT_EQ(t.at(p).free_rank, 1u) << w;
  }
}
