#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sliceshear/classes.hpp"
#include "sliceshear/dsl.hpp"
#include "sliceshear/error.hpp"

using namespace sliceshear;

namespace {

ClassMonomial cls(const char* text, int n) { return parse_class(text, CyclicGroup(n)); }

}  // namespace

TEST(ClassMonomial, Degrees) {
  const CyclicGroup c2(1);
  for (int i = 1; i <= 5; ++i) {
    const Int e = (Int{1} << i) - 1;
    EXPECT_EQ(degree(ClassMonomial::norm_t(c2, 1, i, 1)), e * regular_rep(c2));
    EXPECT_EQ(degree(ClassMonomial::u_2sigma(c2, 1, Int{1} << (i - 1))),
              VirtualRep(c2, {Int{1} << i, -(Int{1} << i)}));
  }
  EXPECT_EQ(degree(ClassMonomial::a_sigma(c2, 1)), -VirtualRep::sigma(c2));
  EXPECT_EQ(degree(cls("uL1", 2)), parse_rep("2-l1", CyclicGroup(2)));
  EXPECT_THROW(degree(cls("0", 2)), DomainError);
}

TEST(ClassMonomial, Bidegrees) {
  EXPECT_EQ(bidegree(cls("u2S^4", 1)), (Bidegree{0, 0, 0}));
  EXPECT_EQ(bidegree(cls("Nt[1,1]*aS", 1)), (Bidegree{1, 1, 2}));
  for (int n = 0; n <= 4; ++n) {
    for (int i = 1; i <= 5; ++i) {
      const CyclicGroup g(n + 1);
      const Int e = (Int{1} << i) - 1;
      const ClassMonomial m = ClassMonomial::norm_t(g, n + 1, i, n + 1) * power(expand_euler(rho_bar(n + 1, 0)), e) *
                              ClassMonomial::a_sigma(g, n + 1, Int{1} << i);
      EXPECT_EQ(bidegree(m), (Bidegree{-1, (Int{1} << (n + 1)) * e + 1, e * (Int{1} << (n + 1))}));
    }
  }
}

TEST(ClassMonomial, BidegreeMatchesRawOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int level = 1 + static_cast<int>(rng() % n);
    const ClassMonomial m = oracle::random_monomial(rng, n, level);
    const Bidegree b = bidegree(m);
    const auto raw = oracle::raw_bidegree(m);
    EXPECT_EQ(b.stem, raw.stem);
    EXPECT_EQ(b.filtration, raw.filtration);
    EXPECT_EQ(b.slice_dim, raw.slice_dim);
    EXPECT_EQ(b.stem, dimension(degree(m)));
    EXPECT_EQ(b.slice_dim - b.stem, b.filtration);
    EXPECT_GE(b.filtration, 0);
  }
}

TEST(ClassMonomial, Multiplication) {
  const ClassMonomial m = cls("Nt[2,2]*aL1*u2S", 2);
  EXPECT_EQ(m * ClassMonomial(CyclicGroup(2)), m);
  EXPECT_EQ((cls("aS", 2) * cls("aS", 2)).a_exponents()[0], 2);
  EXPECT_TRUE((cls("2*aS", 2) * cls("Nt[1,2]", 2)).is_zero());
  EXPECT_TRUE(cls("2*aS", 2).is_zero());
  EXPECT_EQ(cls("5*aL1", 2).coeff(), 1);
  EXPECT_EQ(cls("5*aL1", 2).torsion_modulus(), 4);
  EXPECT_EQ(cls("6*aL2", 3).coeff(), 6);
  EXPECT_EQ(cls("7*u2S", 2).coeff(), 7);
  EXPECT_THROW(cls("aS", 2) * cls("aS", 3), DomainError);
  EXPECT_THROW(cls("aS", 2) * parse_class("aS", CyclicGroup(2), 1), DomainError);
}

TEST(ClassMonomial, MultiplicationLaws) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int level = 1 + static_cast<int>(rng() % n);
    const ClassMonomial a = oracle::random_monomial(rng, n, level);
    const ClassMonomial b = oracle::random_monomial(rng, n, level);
    const ClassMonomial c = oracle::random_monomial(rng, n, level);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * ClassMonomial(CyclicGroup(n), level), a);
    EXPECT_TRUE((a * ClassMonomial::a_sigma(CyclicGroup(n), level)).with_coeff(2).is_zero());
  }
}

TEST(ClassMonomial, BasisValidation) {
  EXPECT_THROW(cls("aL2", 2), DomainError);
  EXPECT_THROW(cls("Nt[1,3]", 2), DomainError);
  EXPECT_THROW(cls("Nt[0,1]", 2), DomainError);
  EXPECT_THROW(parse_class("aS", CyclicGroup(2), 0), DomainError);
  EXPECT_THROW(ClassMonomial(CyclicGroup(2), 3), DomainError);
}

TEST(ClassMonomial, CanonicalPrint) {
  EXPECT_EQ(ClassMonomial(CyclicGroup(3)).str(), "1");
  EXPECT_EQ(cls("0", 3).str(), "0");
  EXPECT_EQ(cls("aS^2*aL1*Nt[1,2]", 2).str(), "Nt[1,2]*aL1*aS^2");
  EXPECT_EQ(cls("u2S*uL1*Nt[3,2]*Nt[1,1]*3", 2).str(), "3*Nt[1,1]*Nt[3,2]*uL1*u2S");
  EXPECT_EQ(cls("3*aS*u2S", 2).str(), "aS*u2S");
  EXPECT_EQ(cls("-3*u2S", 2).str(), "-3*u2S");
  EXPECT_EQ(cls("Nt[3,4]*aS^8*u2S^2", 4).str(), "Nt[3,4]*aS^8*u2S^2");
  EXPECT_EQ(cls("Nt[1,2]*aL1*aS^3", 2).pretty(), "N_{C2}^{C4}(t̄1)·a_λ1·a_σ^3");
}

TEST(ExpandEuler, Examples) {
  const CyclicGroup g(3);
  EXPECT_EQ(expand_euler(VirtualRep::sigma(g)), ClassMonomial::a_sigma(g, 3));
  EXPECT_EQ(expand_euler(parse_rep("2s+l1", g)), cls("aS^2*aL1", 3));
  EXPECT_EQ(expand_euler(rho_bar(3, 0)), cls("aS*aL1*aL2^2", 3));
  EXPECT_THROW(expand_euler(parse_rep("1+s", g)), DomainError);
  EXPECT_THROW(expand_euler(parse_rep("s-l1", g)), DomainError);
}

TEST(ExpandEuler, Additive) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    VirtualRep v = oracle::random_rep(rng, n, 0, 5);
    VirtualRep w = oracle::random_rep(rng, n, 0, 5);
    v -= VirtualRep::trivial(v.group(), v.triv());
    w -= VirtualRep::trivial(w.group(), w.triv());
    EXPECT_EQ(expand_euler(v + w), expand_euler(v) * expand_euler(w));
    EXPECT_EQ(degree(expand_euler(v)), -v);
  }
}

TEST(BuildD, Factors) {
  const ClassMonomial d1 = build_D(1, 3);
  ASSERT_EQ(d1.norms().size(), 1u);
  EXPECT_EQ(d1.norms().begin()->first, (NormKey{3, 1}));
  EXPECT_TRUE(build_Dbar(1, 3).is_unit());

  const ClassMonomial d2 = build_D(2, 1);
  EXPECT_EQ(d2.str(), "Nt[1,2]*Nt[2,2]");
  EXPECT_EQ(build_Dbar(2, 1).str(), "Nt[1,2]");

  for (int n = 1; n <= 4; ++n) {
    for (Int m = 1; m <= 3; ++m) {
      const CyclicGroup g(n);
      EXPECT_EQ(build_Dbar(n, m) * ClassMonomial::norm_t(g, n, static_cast<int>((Int{1} << (n - 1)) * m), n),
                build_D(n, m));
      EXPECT_EQ(build_D(n, m).norms().size(), static_cast<std::size_t>(n));
    }
  }
  EXPECT_THROW(build_D(0, 1), DomainError);
  EXPECT_THROW(build_D(2, 0), DomainError);
}

TEST(OrientationRep, RoundTrip) {
  EXPECT_EQ(orientation_rep(cls("uL1^4*u2S", 2)), parse_rep("4l1+2s", CyclicGroup(2)));
  EXPECT_THROW(orientation_rep(cls("aS*u2S", 2)), DomainError);
}
