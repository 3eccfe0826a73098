#include <gtest/gtest.h>

#include <random>

#include "shortcode/construct.hpp"
#include "shortcode/gfmat.hpp"

using namespace shortcode;

TEST(Rref, IdentityIsFixed) {
  const auto id = MatrixGFp::identity(2, 3);
  const auto r = rref(id);
  EXPECT_EQ(r.reduced, id);
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ZeroMatrixHasRankZero) {
  const MatrixGFp z(3, 2, 4);
  const auto r = rref(z);
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, DependentRowsOverGF3) {
  // second row is twice the first
  const auto m = MatrixGFp::from_rows(3, {{1, 2}, {2, 1}});
  EXPECT_EQ(rank(m), 1u);
  const auto r = rref(m);
  EXPECT_EQ(r.reduced, MatrixGFp::from_rows(3, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Nullspace, IdentityHasNone) { EXPECT_EQ(nullspace(MatrixGFp::identity(5, 4)).rows(), 0u); }

TEST(Nullspace, ZeroRowGivesFullSpace) {
  const MatrixGFp z(3, 1, 6);
  const auto n = nullspace(z);
  EXPECT_EQ(n.rows(), 6u);
  EXPECT_EQ(rank(n), 6u);
}

TEST(Nullspace, AnnihilatesCodeGenerator) {
  const auto c = build_code(Field(default_field_spec(2, 5)), 3);
  const auto h = nullspace(c.generator);
  EXPECT_EQ(h.rows(), c.n - c.k());
  EXPECT_TRUE((c.generator * h.transpose()).is_zero());
}

TEST(Nullspace, RankNullityOnRandomMatrices) {
  std::mt19937 rng(0);
  for (int p : {2, 3, 5, 7}) {
    std::uniform_int_distribution<int> entry(0, p - 1);
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
      MatrixGFp m(p, dim(rng), dim(rng));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<std::uint8_t>(entry(rng));
      const auto n = nullspace(m);
      EXPECT_EQ(rank(m) + n.rows(), m.cols());
      EXPECT_EQ(rank(rref(m).reduced), rank(m));
      if (n.rows() > 0) {
        EXPECT_TRUE((m * n.transpose()).is_zero());
      }
    }
  }
}

TEST(ColumnsDependent, SingleNonzeroColumn) {
  const auto m = MatrixGFp::from_rows(2, {{1, 0}, {0, 1}, {1, 1}});
  const std::vector<std::size_t> one{0};
  EXPECT_FALSE(columns_dependent(m, one));
}

TEST(ColumnsDependent, DuplicatedPairOverGF2) {
  const auto m = MatrixGFp::from_rows(2, {{1, 1, 0}, {0, 0, 1}});
  const std::vector<std::size_t> pair{0, 1};
  EXPECT_TRUE(columns_dependent(m, pair));
  EXPECT_TRUE(has_full_support_dependency(m, pair));
}

TEST(ColumnsDependent, OutOfRangeThrows) {
  const auto m = MatrixGFp::identity(2, 3);
  const std::vector<std::size_t> bad{0, 3};
  try {
    columns_dependent(m, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(ColumnsDependent, FiveColumnsOfBinaryApnCodeAreIndependent) {
  const auto c = build_code(Field(default_field_spec(2, 5)), 3);
  std::vector<std::size_t> s(5);
  std::size_t checked = 0;
  for (s[0] = 0; s[0] < 32; ++s[0])
    for (s[1] = s[0] + 1; s[1] < 32; ++s[1])
      for (s[2] = s[1] + 1; s[2] < 32; ++s[2])
        for (s[3] = s[2] + 1; s[3] < 32; ++s[3])
          for (s[4] = s[3] + 1; s[4] < 32; ++s[4]) {
            ASSERT_FALSE(columns_dependent(c.generator, s));
            ++checked;
          }
  EXPECT_EQ(checked, 201376u);
}

TEST(FullSupportDependency, DistinguishesLowerWeight) {
  // columns 0 and 1 are equal, column 2 is independent: a dependency exists
  // on {0,1,2} but none with all three coefficients nonzero
  const auto m = MatrixGFp::from_rows(3, {{1, 1, 0}, {0, 0, 1}});
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_TRUE(columns_dependent(m, all));
  EXPECT_FALSE(has_full_support_dependency(m, all));
  const auto m2 = MatrixGFp::from_rows(3, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(has_full_support_dependency(m2, all));
}

TEST(Solve, UniqueAndInconsistent) {
  const auto a = MatrixGFp::from_rows(5, {{1, 2}, {3, 4}});
  const std::vector<std::uint8_t> b{1, 0};
  const auto s = solve(a, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->unique);
  EXPECT_EQ((1 * s->x[0] + 2 * s->x[1]) % 5, 1);
  EXPECT_EQ((3 * s->x[0] + 4 * s->x[1]) % 5, 0);
  const auto sing = MatrixGFp::from_rows(5, {{1, 2}, {2, 4}});
  const std::vector<std::uint8_t> bad{1, 1};
  EXPECT_FALSE(solve(sing, bad).has_value());
  const std::vector<std::uint8_t> ok{1, 2};
  EXPECT_FALSE(solve(sing, ok)->unique);
}
