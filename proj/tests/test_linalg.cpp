#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "clasp/sparse_matrix.hpp"

using namespace clasp;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

BigInt det(const Dense& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  // cofactor expansion along the first row; sizes here stay tiny
  if (rows.empty()) return 1;
  BigInt out = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::int64_t v = m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[k])];
    if (v == 0) continue;
    std::vector<int> r(rows.begin() + 1, rows.end()), c = cols;
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(k));
    const BigInt sub = det(m, r, c) * v;
    out += (k % 2 == 0) ? sub : BigInt(-sub);
  }
  return out;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

// gcd of all k x k minors, the k-th determinantal divisor
BigInt minors_gcd(const Dense& m, int k) {
  std::vector<std::vector<int>> rs, cs;
  subsets(static_cast<int>(m.size()), k, rs);
  subsets(static_cast<int>(m[0].size()), k, cs);
  BigInt g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) g = boost::multiprecision::gcd(g, BigInt(abs(det(m, r, c))));
  return g;
}

Dense random_dense(std::mt19937_64& rng, int r, int c, int bound) {
  std::uniform_int_distribution<std::int64_t> v(-bound, bound);
  Dense m(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(c)));
  for (auto& row : m)
    for (auto& x : row) x = v(rng);
  return m;
}

}  // namespace

TEST(Linalg, ConstructorMergesAndDropsZeros) {
  const SparseMatrix m(2, 2, {{1, 1, 3}, {0, 0, 2}, {1, 1, -3}});
  ASSERT_EQ(m.entries().size(), 1u);
  EXPECT_EQ(m.entries()[0], (MatrixEntry{0, 0, 2}));
  EXPECT_THROW(SparseMatrix(2, 2, {{2, 0, 1}}), InputError);
  EXPECT_THROW(SparseMatrix::from_dense({{1, 2}, {3}}), InputError);
}

TEST(Linalg, SmithFormMatchesDeterminantalDivisors) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const int r = dim(rng), c = dim(rng);
    const Dense m = random_dense(rng, r, c, trial % 3 == 0 ? 1 : 4);
    const std::vector<BigInt> snf = smith_normal_form(SparseMatrix::from_dense(m));
    ASSERT_EQ(snf.size(), static_cast<std::size_t>(std::min(r, c)));
    BigInt prod = 1;
    for (int k = 1; k <= std::min(r, c); ++k) {
      prod *= snf[static_cast<std::size_t>(k - 1)];
      EXPECT_EQ(prod, minors_gcd(m, k)) << "trial " << trial << " k " << k;
      if (k > 1 && snf[static_cast<std::size_t>(k - 1)] != 0) EXPECT_EQ(snf[static_cast<std::size_t>(k - 1)] % snf[static_cast<std::size_t>(k - 2)], 0);
    }
  }
}

TEST(Linalg, RanksFollowFromSmithForm) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const SparseMatrix m = SparseMatrix::from_dense(random_dense(rng, 5, 6, 3));
    std::size_t nonzero = 0, odd = 0;
    for (const BigInt& d : smith_normal_form(m)) {
      if (d != 0) ++nonzero;
      if (d % 2 != 0) ++odd;
    }
    EXPECT_EQ(rank(m, Field::Q), nonzero);
    EXPECT_EQ(rank(m, Field::F2), odd);
  }
}

TEST(Linalg, LargeEntriesFallBackToBigIntegers) {
  const std::int64_t big = std::int64_t{1} << 40;
  const SparseMatrix m = SparseMatrix::from_dense({{big, 0}, {0, 3 * big}});
  const std::vector<BigInt> snf = smith_normal_form(m);
  EXPECT_EQ(snf[0], BigInt(big));
  EXPECT_EQ(snf[1], BigInt(3) * big);
  const SparseMatrix n = SparseMatrix::from_dense({{big + 1, big}, {big, big - 1}});
  EXPECT_EQ(smith_normal_form(n), (std::vector<BigInt>{1, 1}));
}

TEST(Linalg, HomologyOfSmallComplexes) {
  // Z --2--> Z
  const SparseMatrix two(1, 1, {{0, 0, 2}});
  const SparseMatrix none_out(0, 1), none_in(1, 0);
  EXPECT_EQ(homology(two, none_out, Ring::Z), (HomologyGroup{0, {2}}));
  EXPECT_EQ(homology(two, none_out, Ring::Q), (HomologyGroup{0, {}}));
  EXPECT_EQ(homology(two, none_out, Ring::F2), (HomologyGroup{1, {}}));
  EXPECT_EQ(homology(none_in, two, Ring::F2), (HomologyGroup{1, {}}));
  EXPECT_EQ(homology(none_in, two, Ring::Z), (HomologyGroup{0, {}}));
}

TEST(Linalg, HomologyRejectsNonComplexes) {
  const SparseMatrix one(1, 1, {{0, 0, 1}});
  EXPECT_THROW(homology(one, one, Ring::Z), InternalError);
  EXPECT_THROW(homology(SparseMatrix(2, 1), one, Ring::Z), InputError);
  // 2 * 1 is zero mod 2
  EXPECT_NO_THROW(homology(SparseMatrix(1, 1, {{0, 0, 2}}), one, Ring::F2));
}

TEST(Linalg, RingNames) {
  for (Ring r : {Ring::Z, Ring::Q, Ring::F2}) EXPECT_EQ(parse_ring(to_string(r)), r);
  EXPECT_THROW(parse_ring("R"), InputError);
}
