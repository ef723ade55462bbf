#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "sliceshear/dsl.hpp"
#include "sliceshear/error.hpp"

using namespace sliceshear;

namespace {

template <class Fn>
ParseError parse_error(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError("none", 0, 0);
}

template <class Fn>
SemanticError semantic_error(Fn&& fn) {
  try {
    fn();
  } catch (const SemanticError& e) {
    return e;
  }
  ADD_FAILURE() << "no SemanticError";
  return SemanticError("none", "none");
}

}  // namespace

TEST(Parse, HuKrizDocument) {
  const ChartDocument doc = parse_document("group C2\ndiff 3: u2S -> Nt[1,1]*aS^3\n");
  EXPECT_EQ(doc.group, CyclicGroup(1));
  ASSERT_EQ(doc.differentials.size(), 1u);
  EXPECT_TRUE(same_arrow(doc.differentials[0], hu_kriz_seed(1)));
  EXPECT_EQ(doc.differentials[0].provenance, Provenance::user);
}

TEST(Parse, EmptyChart) {
  const ChartDocument doc = parse_document("# nothing yet\ngroup C4\n\n");
  EXPECT_TRUE(doc.classes.empty());
  EXPECT_TRUE(doc.differentials.empty());
  EXPECT_FALSE(doc.window.has_value());
  EXPECT_EQ(print_canonical(doc), "group C4\n");
}

TEST(Parse, FullDocument) {
  const char* text =
      "group C4\n"
      "guide L1\n"
      "window -2 12 12   # x range and height\n"
      "grading 2 - 2s\n"
      "class x = Nt[1,2]*aL1*aS^3\n"
      "class y = u2S @C2\n"
      "diff 5: u2S -> x prov=transported\n"
      "diff 3: y -> Nt[1,1]*aS^3 @C2\n"
      "guide vanish h=2 k=1\n"
      "guide boundary\n";
  const ChartDocument doc = parse_document(text);
  EXPECT_EQ(doc.grading, parse_rep("2-2s", CyclicGroup(2)));
  EXPECT_EQ(doc.window, (Window{-2, 12, 12}));
  ASSERT_EQ(doc.classes.size(), 2u);
  EXPECT_EQ(doc.classes[1].cls.level(), 1);
  ASSERT_EQ(doc.differentials.size(), 2u);
  EXPECT_EQ(doc.differentials[0].provenance, Provenance::transported);
  EXPECT_TRUE(same_arrow(doc.differentials[0], hhr_family(1, 1)));
  EXPECT_EQ(doc.differentials[1].source.level(), 1);
  ASSERT_EQ(doc.guides.size(), 3u);
  EXPECT_EQ(doc.guides[1].kind, Guide::Kind::vanish);
  EXPECT_EQ(parse_document(print_canonical(doc)), doc);
}

TEST(Parse, Differential) {
  const Differential d = parse_differential("7: u2S^2 -> Nt[2,1]*aS^7 prov=seed", CyclicGroup(1));
  EXPECT_EQ(d, hu_kriz_seed(2));
  EXPECT_EQ(print_canonical(d), "diff 7: u2S^2 -> Nt[2,1]*aS^7");
  const Differential low = parse_differential("3: u2S -> Nt[1,1]*aS^3 @C2", CyclicGroup(3));
  EXPECT_EQ(print_canonical(low), "diff 3: u2S -> Nt[1,1]*aS^3 @C2");
}

TEST(Parse, ClassExpressions) {
  const CyclicGroup c8(3);
  EXPECT_EQ(parse_class("D[2,1]", CyclicGroup(2)), build_D(2, 1));
  EXPECT_EQ(parse_class("Dbar[3,1]", c8), build_Dbar(3, 1));
  EXPECT_EQ(parse_class("-u2S", c8).coeff(), -1);
  EXPECT_EQ(parse_class("aS @C2", c8).level(), 1);
  EXPECT_EQ(parse_class(" aL1 ^ 2 * aS ", c8), parse_class("aS*aL1^2", c8));
  EXPECT_EQ(parse_rep("rot1", c8), parse_rep("l2", c8));
}

TEST(ParseErrors, Positions) {
  const ParseError e = parse_error([] { parse_document("group C2\ndiff 3 u2S -> aS\n"); });
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 8);
  EXPECT_EQ(std::string(e.what()).rfind("2:8: ", 0), 0u);

  const ParseError bad_char = parse_error([] { parse_document("group C2\nclass x = aS % u2S\n"); });
  EXPECT_EQ(bad_char.line(), 2);
  EXPECT_EQ(bad_char.column(), 14);

  const ParseError missing = parse_error([] { parse_document("window 0 1 1\n"); });
  EXPECT_NE(std::string(missing.what()).find("group"), std::string::npos);

  EXPECT_EQ(parse_error([] { parse_document("group C2\nclass aS = u2S\n"); }).line(), 2);
  EXPECT_EQ(parse_error([] { parse_document("group C2\nfrobnicate\n"); }).column(), 1);
  EXPECT_EQ(parse_error([] { parse_document("group C2\nguide L1 extra\n"); }).column(), 10);
  parse_error([] { parse_class("aS*", CyclicGroup(1)); });
  parse_error([] { parse_class("x", CyclicGroup(1)); });
}

TEST(ParseErrors, Semantic) {
  const SemanticError stem = semantic_error([] { parse_document("group C2\ndiff 4: u2S -> aS^4\n"); });
  EXPECT_EQ(stem.rule(), "stem");
  EXPECT_NE(std::string(stem.what()).find("line 2"), std::string::npos);

  EXPECT_EQ(semantic_error([] { parse_document("group C2\nclass x = aL1\n"); }).rule(), "domain");
  EXPECT_EQ(semantic_error([] { parse_document("group C4\nclass x = aS @C8\n"); }).rule(), "level");
  EXPECT_EQ(semantic_error([] { parse_document("group C2\ngroup C4\n"); }).rule(), "duplicate");
  EXPECT_EQ(semantic_error([] { parse_document("group C2\nwindow 3 1 1\n"); }).rule(), "window");
  EXPECT_EQ(semantic_error([] { parse_document("group C2\nguide L3\n"); }).rule(), "guide");
  EXPECT_EQ(semantic_error([] { parse_document("group C2\nclass x = u2S\nclass x = aS\n"); }).rule(), "duplicate");
  EXPECT_EQ(semantic_error([] { parse_document("group C4\nclass y = u2S @C2\ndiff 5: y -> Nt[1,2]*aL1*aS^3\n"); })
                .rule(),
            "level");
}

TEST(RoundTrip, Classes) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int level = 1 + static_cast<int>(rng() % n);
    const ClassMonomial m = oracle::random_monomial(rng, n, level).with_coeff(static_cast<Int>(rng() % 11) - 5);
    std::string text = print_canonical(m);
    if (level != n) text += " @C" + std::to_string(Int{1} << level);
    EXPECT_EQ(parse_class(text, CyclicGroup(n)), m) << text;
  }
}

TEST(RoundTrip, Documents) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 600; ++trial) {
    const ChartDocument doc = gen::random_document(rng);
    const std::string text = print_canonical(doc);
    const ChartDocument back = parse_document(text);
    ASSERT_EQ(back, doc) << text;
    EXPECT_EQ(print_canonical(back), text);
  }
}
