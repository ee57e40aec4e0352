#include "ulrich/piclattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bitset>
#include <set>

using namespace ulrich;

namespace {

DivisorClass E(const char* s) { return DivisorClass::E(NodeLabel::parse(s)); }

std::vector<NodeLabel> labels(std::initializer_list<const char*> names) {
  std::vector<NodeLabel> out;
  for (auto n : names) out.push_back(NodeLabel::parse(n));
  return out;
}

const DivisorClass H = polarizationClass();
const DivisorClass M = threeLMinusNodes(referenceUlrichNodes());
const DivisorClass evenEightM =
    twoLMinusHalfEight(labels({"E0", "E12", "E34", "E35", "E36", "E45", "E46", "E56"}));

// Independent even-eight oracle: 1/2 sum(S) lies in the span of L, nodes and
// tropes iff the indicator of S is a sum mod 2 of an even number of trope
// node sets.
std::set<unsigned> evenEightsByF2Closure() {
  std::vector<unsigned> gens;
  for (const auto& t : allTropeLabels()) {
    unsigned mask = 0;
    for (const auto& l : tropeNodes(t)) mask |= 1u << l.index();
    gens.push_back(mask);
  }
  // The L coefficient is integral only for an even number of tropes, so close
  // the pairwise sums under addition.
  std::set<unsigned> evenSpan{0};
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) evenSpan.insert(gens[a] ^ gens[b]);
  for (int round = 0; round < 4; ++round) {
    std::set<unsigned> next = evenSpan;
    for (unsigned s : evenSpan)
      for (unsigned t : evenSpan) next.insert(s ^ t);
    evenSpan = std::move(next);
  }
  std::set<unsigned> eights;
  for (unsigned s : evenSpan)
    if (std::bitset<16>(s).count() == 8) eights.insert(s);
  return eights;
}

}  // namespace

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(DivisorClass::L(), DivisorClass::L()), 4);
  EXPECT_EQ(pairing(E("E12"), E("E13")), 0);
  EXPECT_EQ(pairing(E("E12"), E("E12")), -2);
  EXPECT_EQ(pairing(H, H), 8);
}

TEST(Tropes, Examples) {
  const DivisorClass t6 = trope(TropeLabel::odd(6));
  EXPECT_EQ(selfIntersection(t6), -2);
  EXPECT_EQ(pairing(t6, DivisorClass::L()), 2);
  EXPECT_EQ(pairing(trope(TropeLabel::even(2, 4, 6)), E("E24")), 1);
}

TEST(Tropes, AllHaveSquareMinusTwoAndDegreeTwo) {
  ASSERT_EQ(allTropeLabels().size(), 16u);
  for (const auto& t : allTropeLabels()) {
    EXPECT_EQ(selfIntersection(trope(t)), -2) << t.name();
    EXPECT_EQ(pairing(trope(t), DivisorClass::L()), 2) << t.name();
    EXPECT_EQ(tropeNodes(t).size(), 6u);
  }
}

TEST(TropeLabelTest, ParseAndNormalize) {
  EXPECT_EQ(TropeLabel::parse("T456").name(), "T456");
  EXPECT_EQ(TropeLabel::parse("T123").name(), TropeLabel::even(4, 5, 6).name());
  EXPECT_EQ(TropeLabel::parse("T4").name(), "T4");
  EXPECT_THROW(TropeLabel::parse("T7"), std::invalid_argument);
}

TEST(Incidence, SixteenSixConfiguration) {
  auto t = incidenceConfiguration();
  EXPECT_TRUE(t.isSixteenSixConfiguration());
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b)
      EXPECT_EQ(t.entries[a][b], pairing(DivisorClass::E(allNodeLabels()[a]), trope(t.tropes[b])));
}

TEST(Chi, Examples) {
  EXPECT_EQ(chiK3(DivisorClass()), 2);
  EXPECT_EQ(chiK3(M - H), 0);
  EXPECT_EQ(chiK3(M - Rational(2) * H), 0);
  EXPECT_EQ(chiK3(M), 8);
}

TEST(NumericalUlrich, Examples) {
  const PolarizedSurfaceParams s4(4);
  EXPECT_TRUE(numericalUlrich(s4, H, M));
  EXPECT_FALSE(numericalUlrich(s4, H, H));
  const DivisorClass m2 = twoLMinusHalfEight(labels({"E13", "E14", "E15", "E16", "E23", "E24", "E25", "E26"}));
  EXPECT_TRUE(numericalUlrich(s4, H, m2));
  EXPECT_THROW(numericalUlrich(PolarizedSurfaceParams(3), H, M), std::invalid_argument);
  EXPECT_THROW(PolarizedSurfaceParams(0), std::invalid_argument);
}

TEST(ThetaStar, InvolutionAndIsometry) {
  const Involution theta = buildThetaStar();
  EXPECT_TRUE(theta.squaresToIdentity());
  EXPECT_EQ(theta.preservedPairs(), 153u);
  EXPECT_TRUE(theta.isIsometry());
  for (std::size_t a = 0; a < kPicardRank; ++a)
    for (std::size_t b = 0; b < kPicardRank; ++b)
      EXPECT_EQ(pairing(theta.image(a), theta.image(b)),
                pairing(DivisorClass::basis(a), DivisorClass::basis(b)));
  for (std::size_t k = 0; k < kPicardRank; ++k)
    EXPECT_EQ(theta.apply(theta.image(k)), DivisorClass::basis(k));
}

TEST(ThetaStar, ExchangesNodesAndTropes) {
  const Involution theta = buildThetaStar();
  std::set<std::string> tropeImages;
  for (const auto& l : allNodeLabels()) {
    const DivisorClass img = theta.apply(DivisorClass::E(l));
    bool isTrope = false;
    for (const auto& t : allTropeLabels())
      if (trope(t) == img) {
        isTrope = true;
        tropeImages.insert(t.name());
      }
    EXPECT_TRUE(isTrope) << l.name();
  }
  EXPECT_EQ(tropeImages.size(), 16u);
  for (const auto& t : allTropeLabels()) {
    const DivisorClass img = theta.apply(trope(t));
    EXPECT_TRUE(std::any_of(allNodeLabels().begin(), allNodeLabels().end(),
                            [&](const NodeLabel& l) { return DivisorClass::E(l) == img; }))
        << t.name();
  }
}

TEST(ThetaStar, InvariantClasses) {
  const Involution theta = buildThetaStar();
  EXPECT_TRUE(isInvariant(theta, H));
  EXPECT_TRUE(isInvariant(theta, M));
  EXPECT_FALSE(isInvariant(theta, E("E0")));
  EXPECT_EQ(theta.apply(E("E0")), trope(TropeLabel::parse("T456")));
  EXPECT_EQ(theta.apply(DivisorClass::L()), Rational(3) * DivisorClass::L() - DivisorClass::sumOfNodes({
                                                allNodeLabels().begin(), allNodeLabels().end()}));
}

TEST(EvenEight, Examples) {
  const auto gens = defaultPicGenerators();
  EXPECT_TRUE(evenEightTest(labels({"E13", "E14", "E15", "E16", "E23", "E24", "E25", "E26"}), gens));
  EXPECT_FALSE(evenEightTest(labels({"E0", "E12", "E13", "E14", "E15", "E16", "E23", "E24"}), gens));
  EXPECT_FALSE(evenEightTest(labels({"E13", "E14", "E15", "E16", "E23", "E24", "E25", "E26"}), nodeOnlyGenerators()));
  EXPECT_THROW(evenEightTest(labels({"E13", "E14"}), gens), std::invalid_argument);
  EXPECT_THROW(evenEightTest(labels({"E13", "E13", "E15", "E16", "E23", "E24", "E25", "E26"}), gens),
               std::invalid_argument);
}

TEST(EvenEight, SweepMatchesF2ClosureAndIsComplementClosed) {
  const auto sweep = sweepEvenEights(DivisorLattice(defaultPicGenerators()));
  EXPECT_EQ(sweep.subsetsTested, 12870u);
  EXPECT_TRUE(sweep.closedUnderComplement);
  std::set<unsigned> found;
  for (const auto& e : sweep.evenEights) {
    unsigned mask = 0;
    for (const auto& l : e) mask |= 1u << l.index();
    found.insert(mask);
  }
  const auto oracle = evenEightsByF2Closure();
  EXPECT_EQ(found, oracle);
  EXPECT_EQ(found.size(), 30u);
}

TEST(EvenEight, ShapeDetection) {
  auto shape = halfEightShape(evenEightM - H);
  ASSERT_TRUE(shape.has_value());
  EXPECT_EQ(*shape, labels({"E13", "E14", "E15", "E16", "E23", "E24", "E25", "E26"}));
  EXPECT_FALSE(halfEightShape(M - H).has_value());
  EXPECT_EQ(complementNodes(*shape), labels({"E0", "E12", "E34", "E35", "E36", "E45", "E46", "E56"}));
}

TEST(DivisorParse, RoundTripAndTropes) {
  EXPECT_EQ(parseDivisorClass(M.toString()), M);
  EXPECT_EQ(parseDivisorClass(H.toString()), H);
  EXPECT_EQ(parseDivisorClass(evenEightM.toString()), evenEightM);
  EXPECT_EQ(parseDivisorClass("2 T456"), Rational(2) * trope(TropeLabel::parse("T456")));
  EXPECT_EQ(parseDivisorClass("L - 1/2*E0 + E12"), DivisorClass::L() - Rational(1, 2) * E("E0") + E("E12"));
  EXPECT_THROW(parseDivisorClass(""), DivisorParseError);
  EXPECT_THROW(parseDivisorClass("3L - Q"), DivisorParseError);
  EXPECT_THROW(parseDivisorClass("3L - E77"), DivisorParseError);
  EXPECT_THROW(parseDivisorClass("1/0 L"), DivisorParseError);
}
