#include "ulrich/cohomology.hpp"
#include "ulrich/groebner/buchberger.hpp"
#include "ulrich/groebner/hilbert.hpp"
#include "ulrich/kummer.hpp"
#include "ulrich/polyring/parse.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace ulrich;

namespace {

PrimeField fp;
const auto ring4 = makeRing(fp);
const auto ring2 = makeRing(fp, {"x", "y"});

Polynomial<PrimeField> P(const std::string& s) { return parsePolynomial(ring4, s); }
Polynomial<PrimeField> P2(const std::string& s) { return parsePolynomial(ring2, s); }

// Brute-force Hilbert function of S/I for a monomial ideal: count standard
// monomials of each degree.
std::size_t standardMonomials(const std::vector<Monomial>& lead, int d, std::size_t n) {
  std::size_t count = 0;
  for (const auto& m : monomialBasis(d, n))
    if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& g) { return g.divides(m); })) ++count;
  return count;
}

}  // namespace

TEST(NormalForm, Examples) {
  std::vector<Polynomial<PrimeField>> gx{P2("x")};
  EXPECT_TRUE(normalForm(P2("x^2"), std::span<const Polynomial<PrimeField>>(gx)).isZero());
  EXPECT_EQ(normalForm(P2("y"), std::span<const Polynomial<PrimeField>>(gx)), P2("y"));
  auto g = buchberger(std::vector{P2("x^2+y^2"), P2("x*y")});
  EXPECT_TRUE(normalForm(P2("x^2+y^2"), g).isZero());
}

TEST(Buchberger, PrincipalIdeal) {
  auto g = buchberger(std::vector{P2("x")});
  ASSERT_EQ(g.generators.size(), 1u);
  EXPECT_EQ(g.generators[0], P2("x"));
}

TEST(Buchberger, HandComputedBasisContainsYCubed) {
  auto g = buchberger(std::vector{P2("x^2+y^2"), P2("x*y")});
  EXPECT_TRUE(g.reduced);
  EXPECT_NE(std::find(g.generators.begin(), g.generators.end(), P2("y^3")), g.generators.end());
  EXPECT_TRUE(satisfiesBuchbergerCriterion(g));
  EXPECT_TRUE(isReducedBasis(g));
}

TEST(Buchberger, SingularLocusOfReferenceQuartic) {
  KummerQuartic<PrimeField> q(P(kReferenceQuarticText));
  BuchbergerStats stats;
  auto g = buchberger(q.singularLocusGenerators(), &stats);
  EXPECT_TRUE(satisfiesBuchbergerCriterion(g));
  EXPECT_TRUE(isReducedBasis(g));
  auto h = hilbertDegreeCodim(g);
  EXPECT_EQ(h.codimension, 3u);
  EXPECT_EQ(h.degree, 16);
  EXPECT_GT(stats.pairsConsidered, 0u);
}

TEST(Buchberger, IndependentOfGeneratorOrder) {
  KummerQuartic<PrimeField> q(P(kReferenceQuarticText));
  auto gens = q.singularLocusGenerators();
  auto a = buchberger(gens);
  std::reverse(gens.begin(), gens.end());
  auto b = buchberger(gens);
  EXPECT_EQ(a.generators, b.generators);
}

TEST(Membership, Examples) {
  EXPECT_TRUE(idealMembership(P2("x*y"), {P2("x")}));
  EXPECT_FALSE(idealMembership(P2("y"), {P2("x")}));
  KummerQuartic<PrimeField> q(P(kReferenceQuarticText));
  EXPECT_TRUE(idealMembership(q.polynomial(), q.singularLocusGenerators()));
  EXPECT_TRUE(idealMembership(q.partials()[2] * P("X+W"), q.singularLocusGenerators()));
}

TEST(NormalForm, OrderMismatchThrows) {
  auto lexRing = makeRing(fp, {"x", "y"}, MonomialOrder{OrderKind::Lex});
  auto g = buchberger(std::vector{parsePolynomial(lexRing, "x-y")});
  EXPECT_THROW(normalForm(P2("x"), g), std::invalid_argument);
}

TEST(Hilbert, Examples) {
  auto h1 = hilbertDegreeCodim(buchberger(std::vector{P("X")}));
  EXPECT_EQ(h1.codimension, 1u);
  EXPECT_EQ(h1.degree, 1);
  auto h2 = hilbertDegreeCodim(buchberger(std::vector{P("X^2"), P("Y")}));
  EXPECT_EQ(h2.codimension, 2u);
  EXPECT_EQ(h2.degree, 2);
  EXPECT_THROW(hilbertDegreeCodim(buchberger(std::vector{P("1")})), std::domain_error);
}

TEST(Hilbert, FermatQuarticIsSmooth) {
  KummerQuartic<PrimeField> q(P("X^4+Y^4+Z^4+W^4"));
  auto h = hilbertDegreeCodim(buchberger(q.singularLocusGenerators()));
  EXPECT_EQ(h.codimension, 4u);
}

TEST(Hilbert, NumeratorMatchesStandardMonomialCounts) {
  // The series N(t)/(1-t)^n expanded to degree 8 against a direct count.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> gens;
    const int k = static_cast<int>(rng() % 4) + 1;
    for (int i = 0; i < k; ++i) {
      std::vector<int> e(4);
      for (auto& x : e) x = static_cast<int>(rng() % 3);
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.emplace_back(e);
    }
    IntPoly num = hilbertNumerator(gens);
    // coefficients of 1/(1-t)^4 are C(j+3,3)
    for (int d = 0; d <= 8; ++d) {
      Integer s = 0;
      for (std::size_t i = 0; i < num.size() && static_cast<int>(i) <= d; ++i) {
        const int j = d - static_cast<int>(i);
        s += num[i] * Integer((j + 3) * (j + 2) * (j + 1) / 6);
      }
      EXPECT_EQ(s, Integer(standardMonomials(gens, d, 4)));
    }
  }
}

TEST(Hilbert, VanishingIdealOfNodeSubsets) {
  auto nodes = allNodes(Genus2Curve::reference(), fp);
  std::mt19937_64 rng(31);
  for (std::size_t k = 1; k <= 16; ++k) {
    std::vector<NodeLabel> labels;
    for (const auto& n : nodes) labels.push_back(n.label);
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(k);
    auto g = buchberger(vanishingIdealGenerators(ring4, nodePoints(nodes, labels)));
    auto h = hilbertDegreeCodim(g);
    EXPECT_EQ(h.codimension, 3u) << k;
    EXPECT_EQ(h.degree, Integer(k)) << k;
  }
}
