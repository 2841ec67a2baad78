#include <gtest/gtest.h>

#include "opsplit/error.hpp"
#include "opsplit/linalg.hpp"
#include "opsplit/scalar.hpp"
#include "support/testing.hpp"

using namespace opsplit;
using namespace opsplit::testing;

TEST(Scalar, ParseAndFormat) {
  EXPECT_EQ(parse_scalar("3/6"), Scalar(1, 2));
  EXPECT_EQ(parse_scalar("-4/2"), Scalar(-2));
  EXPECT_EQ(parse_scalar("+7"), Scalar(7));
  EXPECT_EQ(format_scalar(parse_scalar("-3/9")), "-1/3");
  EXPECT_EQ(format_scalar(parse_scalar("0/5")), "0");
  EXPECT_EQ(format_scalar(Scalar(5)), "5");
}

TEST(Scalar, RejectsMalformed) {
  for (const char* bad : {"1/0", "", "1.5", "a", "1/", "/2", "1/-2", "--1", "1 /2"}) {
    EXPECT_EQ(code_of([&] { parse_scalar(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Scalar, InverseRoundTrip) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = uniform_int(rng, 1, 1000) * (uniform_int(rng, 0, 1) ? 1 : -1);
    const Scalar b = uniform_int(rng, 1, 1000);
    const Scalar q = a / b;
    EXPECT_EQ(q * (b / a), 1);
    EXPECT_GT(q.get_den(), 0);
  }
}

TEST(Linalg, RankExamples) {
  EXPECT_EQ(rank(Matrix::identity(2)), 2u);
  EXPECT_EQ(rank(sl2_form().m), 3u);
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(Matrix(3, 2)), 0u);
}

TEST(Linalg, InvertExamples) {
  EXPECT_EQ(invert(Matrix::identity(3)), Matrix::identity(3));
  EXPECT_EQ(invert(Matrix{{2, 0}, {0, 4}}), (Matrix{{Scalar(1, 2), 0}, {0, Scalar(1, 4)}}));
  Matrix expected(3, 3);
  expected(0, 2) = 1;
  expected(2, 0) = 1;
  expected(1, 1) = Scalar(1, 2);
  EXPECT_EQ(invert(sl2_form().m), expected);
  EXPECT_EQ(code_of([] { invert(Matrix{{1, 2}, {2, 4}}); }), ErrorCode::Singular);
  EXPECT_EQ(code_of([] { invert(Matrix(2, 3)); }), ErrorCode::DimMismatch);
}

TEST(Linalg, InvertIffFullRank) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const Matrix m = random_matrix(rng, n, n, -2, 2);
    const bool full = rank(m) == n;
    const auto code = code_of([&] {
      const Matrix inv = invert(m);
      EXPECT_EQ(m * inv, Matrix::identity(n));
      EXPECT_EQ(inv * m, Matrix::identity(n));
    });
    EXPECT_EQ(full, !code.has_value());
    EXPECT_EQ(full, determinant(m) != 0);
  }
}

TEST(Linalg, ContractExamples) {
  const Tensor3 br = sl2_bracket();
  EXPECT_EQ(contract(br, zero_vec(3), Vec{1, 2, 3}), zero_vec(3));
  EXPECT_EQ(contract(br, unit_vec(3, 1), unit_vec(3, 0)), (Vec{2, 0, 0}));
  EXPECT_EQ(contract(br, unit_vec(3, 0), unit_vec(3, 2)), (Vec{0, 1, 0}));
  EXPECT_EQ(code_of([&] { contract(br, Vec{1, 2}, unit_vec(3, 0)); }), ErrorCode::DimMismatch);
}

TEST(Linalg, ContractIsBilinear) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Tensor3 tt = random_tensor(rng, 3, -3, 3);
    const Vec u = random_vec(rng, 3, -3, 3), u2 = random_vec(rng, 3, -3, 3), v = random_vec(rng, 3, -3, 3);
    const Scalar a = small_rational(rng), b = small_rational(rng);
    EXPECT_EQ(contract(tt, a * u + b * u2, v), a * contract(tt, u, v) + b * contract(tt, u2, v));
    EXPECT_EQ(contract(tt, v, a * u + b * u2), a * contract(tt, v, u) + b * contract(tt, v, u2));
    EXPECT_EQ(contract(tt, u, v), mul(tt, u, v));
  }
}

TEST(Linalg, BlockDiagAndTranspose) {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{5}};
  const Matrix d = block_diag(a, b);
  EXPECT_EQ(d, (Matrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}}));
  EXPECT_EQ(d.transpose().transpose(), d);
  EXPECT_EQ(determinant(d), -10);
}
