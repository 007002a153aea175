#include <gtest/gtest.h>

#include <random>

#include "qhopf/linalg.hpp"

using namespace qhopf;

namespace {

SMat random_mat(int r, int c, int N, std::mt19937& rng, int density = 3) {
  std::uniform_int_distribution<int> v(-4, 4), z(0, N - 1), keep(0, density);
  SMat m(r, c, N);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (keep(rng) == 0) m.set(i, j, CycNum::zeta_power(N, z(rng)) * long(v(rng)));
  return m;
}

}  // namespace

TEST(Linalg, InverseRoundTrip) {
  std::mt19937 rng(7);
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    SMat a = random_mat(6, 6, 12, rng, 1);
    auto inv = a.inverse();
    if (a.rank() < 6) {
      EXPECT_FALSE(inv.has_value());
      continue;
    }
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE((a * *inv).is_identity());
    EXPECT_TRUE((*inv * a).is_identity());
    ++done;
  }
  EXPECT_GT(done, 10);
}

TEST(Linalg, RankOfProducts) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    SMat a = random_mat(5, 3, 8, rng, 0), b = random_mat(3, 5, 8, rng, 0);
    EXPECT_LE((a * b).rank(), 3);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  }
  EXPECT_EQ(SMat::identity(7, 4).rank(), 7);
  EXPECT_EQ(SMat(3, 4, 4).rank(), 0);
}

TEST(Linalg, NullspaceIsAnnihilated) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    SMat a = random_mat(4, 7, 20, rng, 1);
    RowReducer rr(7);
    for (int i = 0; i < 4; ++i) rr.add_row(a.row(i));
    rr.reduce_fully();
    auto ns = rr.nullspace();
    EXPECT_EQ(int(ns.size()) + rr.rank(), 7);
    for (auto& v : ns) {
      std::vector<CycNum> x(7, CycNum(20));
      for (auto& [c, val] : v) x[c] = val;
      for (auto& y : a.apply(x)) EXPECT_TRUE(y.is_zero());
    }
  }
}

TEST(Linalg, SolveRows) {
  int N = 4;
  std::vector<SparseVec> rows{{{0, CycNum(1L, N)}, {1, CycNum(1L, N)}}, {{1, CycNum::zeta_power(N, 1)}}};
  auto x = solve_rows(rows, {CycNum(3L, N), CycNum::zeta_power(N, 1) * 2L}, 2, N);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], CycNum(1L, N));
  EXPECT_EQ((*x)[1], CycNum(2L, N));
  std::vector<SparseVec> bad{{{0, CycNum(1L, N)}}, {{0, CycNum(2L, N)}}};
  EXPECT_FALSE(solve_rows(bad, {CycNum(1L, N), CycNum(1L, N)}, 1, N).has_value());
}

TEST(Linalg, KronAndFlip) {
  std::mt19937 rng(5);
  SMat a = random_mat(2, 2, 8, rng, 0), b = random_mat(3, 3, 8, rng, 0);
  SMat c = random_mat(2, 2, 8, rng, 0), d = random_mat(3, 3, 8, rng, 0);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  SMat t = flip_matrix(2, 3, 8);
  EXPECT_EQ(t * kron(a, b), kron(b, a) * t);
  EXPECT_TRUE((flip_matrix(3, 2, 8) * t).is_identity());
  EXPECT_EQ(kron(a, b).get(1 * 3 + 2, 0 * 3 + 1), a.get(1, 0) * b.get(2, 1));
}

TEST(Linalg, PowerAndDiagonal) {
  SMat k = SMat::diagonal({CycNum::zeta_power(6, 1), CycNum::zeta_power(6, 2)}, 6);
  EXPECT_TRUE(k.pow(6).is_identity());
  EXPECT_FALSE(k.pow(3).is_identity());
  EXPECT_TRUE(k.pow(0).is_identity());
}
