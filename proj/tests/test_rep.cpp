#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sliceshear/dsl.hpp"
#include "sliceshear/error.hpp"
#include "sliceshear/rep.hpp"

using namespace sliceshear;

namespace {

VirtualRep rep(const char* text, int n) { return parse_rep(text, CyclicGroup(n)); }

}  // namespace

TEST(CyclicGroup, NamesAndOrders) {
  EXPECT_EQ(CyclicGroup(0).name(), "C1");
  EXPECT_EQ(CyclicGroup(3).order(), 8);
  EXPECT_EQ(parse_group_name("C16").exponent(), 4);
  EXPECT_THROW(parse_group_name("C6"), DomainError);
  EXPECT_THROW(parse_group_name("D4"), DomainError);
  EXPECT_THROW(CyclicGroup(-1), DomainError);
}

TEST(VirtualRep, BasisShape) {
  EXPECT_EQ(VirtualRep(CyclicGroup(0)).coefficients().size(), 1u);
  EXPECT_EQ(VirtualRep(CyclicGroup(1)).coefficients().size(), 2u);
  EXPECT_EQ(VirtualRep(CyclicGroup(4)).coefficients().size(), 5u);
  EXPECT_THROW(VirtualRep::sigma(CyclicGroup(0)), DomainError);
  EXPECT_THROW(VirtualRep::lambda(CyclicGroup(2), 2), DomainError);
  EXPECT_THROW(VirtualRep(CyclicGroup(2), {1, 2}), DomainError);
}

TEST(VirtualRep, Printing) {
  EXPECT_EQ(rep("10-4l1-2s", 2).str(), "10-4l1-2s");
  EXPECT_EQ(rep("2s+4l1", 2).str(), "4l1+2s");
  EXPECT_EQ(rep("0", 3).str(), "0");
  EXPECT_EQ(rep("-s", 1).str(), "-s");
  EXPECT_EQ(rep("l0", 2).str(), "2s");
  EXPECT_EQ(rep("2-2s", 2).pretty(), "2 − 2σ");
}

TEST(VirtualRep, RotationCollapse) {
  // rot<j>: rotation by 2 pi j / 2^n, reduced to the 2-local basis.
  EXPECT_EQ(rep("rot1", 3), VirtualRep::lambda(CyclicGroup(3), 2));
  EXPECT_EQ(rep("rot3", 3), VirtualRep::lambda(CyclicGroup(3), 2));
  EXPECT_EQ(rep("rot2", 3), VirtualRep::lambda(CyclicGroup(3), 1));
  EXPECT_EQ(rep("rot4", 3), VirtualRep::sigma(CyclicGroup(3), 2));
  EXPECT_EQ(rep("rot8", 3), VirtualRep::trivial(CyclicGroup(3), 2));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(VirtualRep(CyclicGroup(3))), 0);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(dimension(rho_bar(n + 1, 0)), (Int{1} << (n + 1)) - 1);
  EXPECT_EQ(dimension(rep("2-2s", 2)), 0);
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(fixed_points(rep("s", 2), 1), rep("s", 1));
  EXPECT_EQ(fixed_points(rep("l1", 2), 1), rep("0", 1));
  EXPECT_EQ(fixed_points(rep("3+2s-l1", 2), 0), rep("3+2s-l1", 2));
  EXPECT_EQ(fixed_points(rep("s", 2), 2), rep("0", 0));
  EXPECT_THROW(fixed_points(rep("s", 2), 3), DomainError);
}

TEST(FixedPoints, MatchesCharacterAverage) {
  for (int n = 0; n <= 6; ++n) {
    for (int basis = 0; basis <= n; ++basis) {
      std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
      c[static_cast<std::size_t>(basis)] = 1;
      const VirtualRep v(CyclicGroup(n), c);
      for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(dimension(fixed_points(v, k)), oracle::fixed_dim_by_average(n, basis, k))
            << "n=" << n << " basis=" << basis << " k=" << k;
      }
    }
  }
}

TEST(Pullback, RoundTrip) {
  EXPECT_EQ(pullback(rep("s", 1), CyclicGroup(3)), rep("s", 3));
  EXPECT_EQ(pullback(rep("0", 1), CyclicGroup(3)), rep("0", 3));
  EXPECT_EQ(fixed_points(pullback(rep("l1", 2), CyclicGroup(3)), 1), rep("l1", 2));
  EXPECT_THROW(pullback(rep("s", 3), CyclicGroup(2)), DomainError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng() % 6);
    const int k = static_cast<int>(rng() % 4);
    const VirtualRep v = oracle::random_rep(rng, m, -9, 9);
    EXPECT_EQ(fixed_points(pullback(v, CyclicGroup(m + k)), k), v);
  }
}

TEST(Restrict, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const VirtualRep r = restrict(regular_rep(CyclicGroup(n)), 1);
    EXPECT_EQ(r, (Int{1} << (n - 1)) * regular_rep(CyclicGroup(1)));
  }
  EXPECT_EQ(restrict(rep("s", 2), 1), rep("1", 1));
  EXPECT_EQ(restrict(rep("3-l1+s", 2), 2), rep("3-l1+s", 2));
}

TEST(Restrict, RegularRepresentationScales) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(restrict(regular_rep(CyclicGroup(n)), m), (Int{1} << (n - m)) * regular_rep(CyclicGroup(m)));
    }
  }
}

TEST(Restrict, MatchesCharacters) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % (n + 1));
    const VirtualRep v = oracle::random_rep(rng, n, -5, 5);
    const VirtualRep r = restrict(v, m);
    // gamma_m = gamma_n^{2^{n-m}}
    for (Int a = 0; a < (Int{1} << m); ++a) {
      EXPECT_NEAR(oracle::rep_character(r, a), oracle::rep_character(v, a << (n - m)), 1e-9);
    }
  }
}

TEST(Tau, Examples) {
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(tau(VirtualRep(CyclicGroup(3)), k), 0);
  EXPECT_EQ(tau(rep("5-3s+2l1", 3), 0), 0);
  EXPECT_EQ(tau(rep("2s", 2), 1), 2);
  EXPECT_THROW(tau(rep("s", 2), 3), DomainError);
}

TEST(Tau, MonotoneInK) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const VirtualRep v = oracle::random_rep(rng, n, -6, 6);
    for (int k = 1; k <= n; ++k) EXPECT_GE(tau(v, k), tau(v, k - 1));
  }
}

TEST(Lines, Examples) {
  const Line l1 = line_L(VirtualRep(CyclicGroup(2)), 1);
  EXPECT_EQ(l1.slope, 1);
  EXPECT_EQ(l1.intercept, Rational(0));
  EXPECT_TRUE(l1.on(0, 0));
  EXPECT_EQ(line_L(VirtualRep(CyclicGroup(2)), 0).slope, 0);
  const Line l = line_L(rep("2s", 2), 1);
  EXPECT_EQ(l.str(), "s = (t-s) + 2");
  EXPECT_TRUE(l.on_or_above(1, 3));
  EXPECT_FALSE(l.on_or_above(1, 2));
}

TEST(ConstantC, Examples) {
  EXPECT_EQ(constant_C(VirtualRep(CyclicGroup(3)), 1), Rational(0));
  EXPECT_EQ(constant_C(rep("s", 2), 1), Rational(0));
  EXPECT_EQ(constant_C(pullback(rep("2-2s", 1), CyclicGroup(3)), 2), Rational(0));
  EXPECT_THROW(constant_C(rep("s", 2), 2), DomainError);
  // A non-integral value.
  EXPECT_EQ(constant_C(rep("1+l1", 2), 1), Rational(1, 2));
}

TEST(ConstantC, NonNegative) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const VirtualRep v = oracle::random_rep(rng, n, -8, 8);
    for (int k = 1; k <= n - 1; ++k) EXPECT_GE(constant_C(v, k), Rational(0));
  }
}

TEST(RhoBar, Shape) {
  EXPECT_EQ(rho_bar(3, 0), rep("2l2+l1+s", 3));
  EXPECT_EQ(rho_bar(3, 1), rep("l1+s", 3));
  EXPECT_EQ(rho_bar(3, 2), rep("s", 3));
  for (int n1 = 1; n1 <= 6; ++n1) {
    for (int k = 0; k < n1; ++k) EXPECT_EQ(dimension(rho_bar(n1, k)), (Int{1} << (n1 - k)) - 1);
  }
  // rho_bar_{2^{k+j}} - rho_bar_{2^{k+j}/2^k} = sum_{m=j}^{k+j-1} 2^{m-1} lambda_m
  for (int k = 1; k <= 3; ++k) {
    for (int j = 1; j <= 3; ++j) {
      const CyclicGroup g(k + j);
      VirtualRep expect(g);
      for (int m = j; m <= k + j - 1; ++m) expect += VirtualRep::lambda(g, m, Int{1} << (m - 1));
      EXPECT_EQ(rho_bar(k + j, 0) - rho_bar(k + j, k), expect);
    }
  }
  EXPECT_THROW(rho_bar(2, 2), DomainError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2).str(), "-1/2");
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
  EXPECT_EQ(Rational(-3, 2).floor(), -2);
  EXPECT_EQ(Rational(-3, 2).ceil(), -1);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(checked_mul(Int{1} << 62, 4), DomainError);
}
