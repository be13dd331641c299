#include <gtest/gtest.h>

#include <random>

#include "clasp/khovanov.hpp"

using namespace clasp;

namespace {

PlanarDiagram closure(const char* word, int n, ClosureKind kind = ClosureKind::Braid) {
  return build_closure(parse_braid(word, n), kind);
}

HomologyTable table(Ring r, std::initializer_list<std::tuple<int, int, int, int>> rows) {
  HomologyTable t(r, false);
  for (auto [i, j, free, tors] : rows) {
    HomologyGroup h{static_cast<std::size_t>(free), {}};
    if (tors) h.torsion.push_back(tors);
    t.set({i, j, 0}, h);
  }
  return t;
}

BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), gen(1, n - 1), sign(0, 1);
  std::vector<Letter> l(static_cast<std::size_t>(len(rng)));
  for (Letter& x : l) x = {gen(rng), sign(rng) ? 1 : -1};
  return BraidWord(n, l);
}

std::size_t rank_in_degree(const HomologyTable& t, int i) {
  std::size_t r = 0;
  for (const auto& [g, h] : t.entries())
    if (g.i == i) r += h.free_rank;
  return r;
}

}  // namespace

TEST(Khovanov, Unknot) {
  const HomologyTable expect = table(Ring::Z, {{0, 1, 1, 0}, {0, -1, 1, 0}});
  EXPECT_EQ(kh(closure("", 1), Ring::Z), expect);
  EXPECT_EQ(kh(closure("s1", 2), Ring::Z), expect);
  EXPECT_EQ(kh(closure("s1^-1 s2", 3), Ring::Z), expect);
}

TEST(Khovanov, PositiveHopfLink) {
  EXPECT_EQ(kh(closure("s1^2", 2), Ring::Z), table(Ring::Z, {{0, 0, 1, 0}, {0, 2, 1, 0}, {2, 4, 1, 0}, {2, 6, 1, 0}}));
}

TEST(Khovanov, RightTrefoilTorsion) {
  const PlanarDiagram d = closure("s1^3", 2);
  EXPECT_EQ(kh(d, Ring::Z, TorsionPlacement::Target),
            table(Ring::Z, {{0, 1, 1, 0}, {0, 3, 1, 0}, {2, 5, 1, 0}, {3, 9, 1, 0}, {3, 7, 0, 2}}));
  // the same summand, recorded at the source of the map
  EXPECT_EQ(kh(d, Ring::Z).at({2, 7, 0}), (HomologyGroup{0, {2}}));
  EXPECT_EQ(kh(d, Ring::Q), table(Ring::Q, {{0, 1, 1, 0}, {0, 3, 1, 0}, {2, 5, 1, 0}, {3, 9, 1, 0}}));
  EXPECT_EQ(kh(d, Ring::F2),
            table(Ring::F2, {{0, 1, 1, 0}, {0, 3, 1, 0}, {2, 5, 1, 0}, {2, 7, 1, 0}, {3, 7, 1, 0}, {3, 9, 1, 0}}));
}

TEST(Khovanov, ReducedTrefoil) {
  const PlanarDiagram d = closure("s1^3", 2);
  const HomologyTable expect = table(Ring::Q, {{0, 2, 1, 0}, {2, 6, 1, 0}, {3, 8, 1, 0}});
  for (int arc = 0; arc < d.arc_count(); ++arc) EXPECT_EQ(reduced_kh(d, Ring::Q, arc), expect);
  EXPECT_THROW(reduced_kh(closure("", 2), Ring::Q), InputError);
  EXPECT_THROW(reduced_kh(d, Ring::Q, d.arc_count()), InputError);
}

TEST(Khovanov, EulerCharacteristicIsJones) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord w = random_word(rng, 3, 7);
    const PlanarDiagram d = build_closure(w, trial % 2 ? ClosureKind::Braid : ClosureKind::Clasp);
    EXPECT_EQ(kh(d, Ring::Z).euler_characteristic(), jones(d)) << w;
  }
}

TEST(Khovanov, JonesSkeinRelation) {
  // q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0) on braid closures
  std::mt19937_64 rng(4);
  const LaurentPoly lhs_plus = LaurentPoly::q(-2), lhs_minus = LaurentPoly::q(2);
  const LaurentPoly rhs = LaurentPoly::q(-1) - LaurentPoly::q(1);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord a = random_word(rng, 4, 5), b = random_word(rng, 4, 5);
    const int g = 1 + trial % 3;
    const BraidWord plus = a * BraidWord(4, {{g, 1}}) * b, minus = a * BraidWord(4, {{g, -1}}) * b;
    const LaurentPoly jp = jones(build_closure(plus, ClosureKind::Braid));
    const LaurentPoly jm = jones(build_closure(minus, ClosureKind::Braid));
    const LaurentPoly j0 = jones(build_closure(a * b, ClosureKind::Braid));
    EXPECT_EQ(lhs_plus * jp - lhs_minus * jm, rhs * j0) << plus;
  }
}

TEST(Khovanov, MirrorNegatesGradingsOverQ) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const BraidWord w = random_word(rng, 3, 6);
    const HomologyTable a = kh(build_closure(w, ClosureKind::Braid), Ring::Q);
    const HomologyTable b = kh(build_closure(mirror(w), ClosureKind::Braid), Ring::Q);
    HomologyTable flipped(Ring::Q, false);
    for (const auto& [g, h] : a.entries()) flipped.add_free({-g.i, -g.j, 0}, h.free_rank);
    EXPECT_EQ(flipped, b) << w;
  }
}

TEST(Khovanov, UniversalCoefficients) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const PlanarDiagram d = build_closure(random_word(rng, 3, 7), ClosureKind::Braid);
    const HomologyTable z = kh(d, Ring::Z), f2 = kh(d, Ring::F2);
    std::map<std::pair<int, int>, std::size_t> expect;
    for (const auto& [g, h] : z.entries()) {
      expect[{g.i, g.j}] += h.free_rank;
      for (const BigInt& t : h.torsion)
        if (t % 2 == 0) {
          // source placement: the summand shows up at i and i+1 mod 2
          ++expect[{g.i, g.j}];
          ++expect[{g.i + 1, g.j}];
        }
    }
    for (const auto& [key, r] : expect) EXPECT_EQ(f2.free_rank(key.first, key.second), r);
    EXPECT_EQ(f2.total_free_rank(), [&] {
      std::size_t s = 0;
      for (const auto& [k, r] : expect) s += r;
      return s;
    }());
  }
}

TEST(Khovanov, ShumakovitchSplittingOverF2) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const PlanarDiagram d = build_closure(random_word(rng, 3, 7), ClosureKind::Clasp);
    const HomologyTable full = kh(d, Ring::F2), red = reduced_kh(d, Ring::F2);
    HomologyTable doubled(Ring::F2, false);
    for (const auto& [g, h] : red.entries()) {
      doubled.add_free({g.i, g.j + 1, 0}, h.free_rank);
      doubled.add_free({g.i, g.j - 1, 0}, h.free_rank);
    }
    EXPECT_EQ(doubled, full);
  }
}

TEST(Khovanov, LeeGradingsFitUnderRationalHomology) {
  for (const char* w : {"s1^2", "s1^2 s2^2", "s1^-2 s2^4", "s1 s2^-1", "s1^4 s2^-2"}) {
    const PlanarDiagram d = closure(w, 3);
    const std::vector<int> lee = lee_homological_gradings(d);
    EXPECT_EQ(lee.size(), std::size_t{1} << d.component_count());
    const HomologyTable q = kh(d, Ring::Q);
    std::map<int, std::size_t> need;
    for (int i : lee) ++need[i];
    for (auto [i, n] : need) EXPECT_GE(rank_in_degree(q, i), n) << w << " degree " << i;
  }
  EXPECT_EQ(lee_homological_gradings(closure("s1^2", 2)), (std::vector<int>{0, 0, 2, 2}));
}

TEST(Khovanov, ComplexIsChecked) {
  const GradedComplex c(closure("s1 s2^-1 s1", 3, ClosureKind::AugmentedBraid));
  EXPECT_EQ(c.crossing_count(), 9);
  EXPECT_FALSE(c.reduced());
  std::string many;
  for (int k = 0; k < 25; ++k) many += "s1 ";
  EXPECT_THROW(GradedComplex(closure(many.c_str(), 2)), InputError);
}

TEST(Khovanov, TableJsonRoundTrip) {
  const HomologyTable t = kh(closure("s1^3", 2), Ring::Z);
  EXPECT_EQ(HomologyTable::from_json(t.to_json(), Ring::Z, false), t);
  EXPECT_NE(t.to_text().find("Z/2"), std::string::npos);
  EXPECT_EQ(HomologyTable(Ring::Q, false).to_text(), "(zero)\n");
}
