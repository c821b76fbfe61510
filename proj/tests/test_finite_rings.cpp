#include <gtest/gtest.h>

#include <random>

#include "liftmod/finite_rings.hpp"
#include "support.hpp"

using namespace liftmod;
using testsupport::IntMat;

TEST(PrimeCtx, AcceptsPrimesUpToBound) {
  EXPECT_EQ(PrimeCtx(2).p2(), 4u);
  EXPECT_EQ(PrimeCtx(32749).p2(), 32749u * 32749u);
  for (std::uint32_t bad : {0u, 1u, 4u, 9u, 32768u, 32771u, 65537u}) {
    try {
      PrimeCtx c(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidArgument);
    }
  }
}

TEST(ModArith, InverseAndSingular) {
  for (Scalar m : {7u, 25u, 49u})
    for (Scalar a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) {
        EXPECT_THROW(modarith::inv(a, m), Error);
        continue;
      }
      EXPECT_EQ(modarith::mul(a, modarith::inv(a, m), m), 1u);
    }
  EXPECT_EQ(modarith::reduce(-1, 9), 8u);
  EXPECT_EQ(modarith::sub(2, 5, 9), 6u);
}

TEST(Matrix, ProductMatchesIntegerOracle) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    const PrimeCtx ctx(p);
    std::uniform_int_distribution<std::int64_t> d(0, ctx.p2() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial % 5;
      MatZp2 a(ctx, n), b(ctx, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a.set(i, j, d(rng));
          b.set(i, j, d(rng));
        }
      EXPECT_EQ(testsupport::to_int(a * b), testsupport::int_mul(testsupport::to_int(a), testsupport::to_int(b), ctx.p2()));
    }
  }
}

TEST(Matrix, InverseOverBothRings) {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const PrimeCtx ctx(p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = testsupport::random_invertible(rng, ctx, 1 + trial % 4);
      EXPECT_TRUE((m * mat_inv(m)).is_identity());
      MatZp2 l = lift_canonical(m);
      // perturb by p * something: still a unit
      l.set(0, 0, l(0, 0) + p);
      EXPECT_TRUE((mat_inv(l) * l).is_identity());
      EXPECT_EQ(reduce(l), m);
    }
  }
  const PrimeCtx c3(3);
  EXPECT_THROW(mat_inv(MatFp(c3, {{1, 2}, {2, 1}})), Error);
  EXPECT_THROW(mat_inv(MatZp2(c3, {{3, 0}, {0, 1}})), Error);
}

TEST(Matrix, PowerBlockDiagConjugate) {
  const PrimeCtx ctx(5);
  const MatFp j(ctx, {{1, 1}, {0, 1}});
  EXPECT_EQ(mat_pow(j, 7), MatFp(ctx, {{1, 2}, {0, 1}}));
  EXPECT_TRUE(mat_pow(j, 5).is_identity());
  EXPECT_TRUE(mat_pow(j, 0).is_identity());
  const auto bd = block_diag(j, MatFp(ctx, {{3}}));
  EXPECT_EQ(bd.dim(), 3u);
  EXPECT_EQ(bd(0, 1), 1u);
  EXPECT_EQ(bd(2, 2), 3u);
  EXPECT_EQ(bd(2, 0), 0u);
  const MatFp c(ctx, {{2, 1}, {1, 1}});
  EXPECT_EQ(conjugate(c, j), c * j * mat_inv(c));
  EXPECT_THROW(j * MatFp(ctx, 3), Error);
}

TEST(KernelSplitting, RoundTripAndHomomorphism) {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeCtx ctx(p);
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + trial % 4;
      MatFp x(ctx, n), y(ctx, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          x.set(i, k, d(rng));
          y.set(i, k, d(rng));
        }
      EXPECT_EQ(split_kernel_element(merge_kernel_element(x)), x);
      // the kernel is abelian of exponent p
      EXPECT_EQ(merge_kernel_element(x) * merge_kernel_element(y), merge_kernel_element(x + y));
      EXPECT_TRUE(mat_pow(merge_kernel_element(x), p).is_identity());
    }
  }
  const PrimeCtx c2(2);
  try {
    split_kernel_element(MatZp2(c2, {{1, 1}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInKernel);
  }
}

TEST(Matrix, CanonicalSectionIsRightInverseOfReduction) {
  const PrimeCtx ctx(7);
  const MatFp m(ctx, {{6, 0, 3}, {1, 2, 5}, {4, 4, 0}});
  const auto l = lift_canonical(m);
  EXPECT_EQ(reduce(l), m);
  for (auto v : l.data()) EXPECT_LT(v, 7u);
}
