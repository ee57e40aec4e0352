#include "ulrich/cohomology.hpp"
#include "ulrich/polyring/parse.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace ulrich;

namespace {

PrimeField fp;
const Genus2Curve curve = Genus2Curve::reference();
const auto ring = makeRing(fp);
const auto nodes = allNodes(curve, fp);
const KummerQuartic<PrimeField> quartic(parsePolynomial(ring, kReferenceQuarticText));

std::vector<NodeLabel> labels(std::initializer_list<const char*> names) {
  std::vector<NodeLabel> out;
  for (auto n : names) out.push_back(NodeLabel::parse(n));
  return out;
}

std::vector<NodeLabel> allExcept(const std::vector<NodeLabel>& removed) {
  return complementNodes(removed);
}

ProjectivePoint<PrimeField> pt(std::initializer_list<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(fp(x));
  return ProjectivePoint<PrimeField>(fp, v);
}

// Leibniz expansion over F_p, independent of the elimination code.
Fp leibnizDet(const std::vector<std::vector<Fp>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Fp total = fp.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Fp term = fp.one();
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank of a 4x4 matrix as the largest k with a nonvanishing k x k minor.
std::size_t rankByMinors(const std::vector<std::vector<Fp>>& m) {
  for (std::size_t k = 4; k >= 1; --k) {
    std::vector<bool> rowSel(4, false), colSel(4, false);
    std::fill(rowSel.begin(), rowSel.begin() + static_cast<long>(k), true);
    do {
      std::fill(colSel.begin(), colSel.end(), false);
      std::fill(colSel.begin(), colSel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<Fp>> minor;
        for (std::size_t r = 0; r < 4; ++r) {
          if (!rowSel[r]) continue;
          std::vector<Fp> row;
          for (std::size_t c = 0; c < 4; ++c)
            if (colSel[c]) row.push_back(m[r][c]);
          minor.push_back(row);
        }
        if (!leibnizDet(minor).isZero()) return k;
      } while (std::prev_permutation(colSel.begin(), colSel.end()));
    } while (std::prev_permutation(rowSel.begin(), rowSel.end()));
  }
  return 0;
}

const DivisorClass M = threeLMinusNodes(referenceUlrichNodes());

}  // namespace

TEST(H0FormsThroughPoints, ReferencePlaneCount) {
  EXPECT_EQ(h0FormsThroughPoints(fp, 1, nodePoints(nodes, labels({"E23", "E25", "E34", "E45"}))), 0u);
}

TEST(H0FormsThroughPoints, ReferenceQuadricCountThroughTwelveComplementaryNodes) {
  // Reference value: no quadric through these twelve nodes.
  const auto twelve = allExcept(labels({"E23", "E25", "E34", "E45"}));
  ASSERT_EQ(twelve.size(), 12u);
  EXPECT_EQ(h0FormsThroughPoints(fp, 2, nodePoints(nodes, twelve)), 0u);
}

TEST(H0FormsThroughPoints, QuadricCountMatchesExplicitQuadric) {
  // Derived: the twelve complementary nodes impose only nine conditions; the
  // one quadric through them is given here and checked pointwise.
  const auto twelve = allExcept(labels({"E23", "E25", "E34", "E45"}));
  const auto pts = nodePoints(nodes, twelve);
  EXPECT_EQ(rank(evaluationMatrix(fp, 2, pts)), 9u);
  const auto q = parsePolynomial(ring, "-48*X^2-72*X*Y-24*Y^2+150*X*Z+22*Y*Z-2*Z^2-3*X*W+Y*W+Z*W");
  for (const auto& p : pts) EXPECT_TRUE(q.evaluate(p).isZero()) << p.toString();
  auto forms = formsThroughPoints(ring, 2, pts);
  ASSERT_EQ(forms.dimension, 1u);
  // proportional to q
  const auto& w = forms.basis.front();
  const Fp ratio = w.leadingCoefficient() / q.leadingCoefficient();
  EXPECT_EQ(w, q.scaled(ratio));
}

TEST(H0FormsThroughPoints, TrivialExamples) {
  EXPECT_EQ(h0FormsThroughPoints(fp, 1, std::vector<ProjectivePoint<PrimeField>>{}), 4u);
  EXPECT_EQ(h0FormsThroughPoints(fp, 1, {pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0})}), 1u);
  auto forms = formsThroughPoints(ring, 1, {pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0})});
  ASSERT_EQ(forms.basis.size(), 1u);
  EXPECT_EQ(forms.basis[0].scaled(forms.basis[0].leadingCoefficient().inverse()), parsePolynomial(ring, "W"));
  EXPECT_EQ(h0FormsThroughPoints(fp, 0, {pt({1, 2, 3, 4})}), 0u);
  EXPECT_THROW(h0FormsThroughPoints(fp, -1, {pt({1, 2, 3, 4})}), std::invalid_argument);
}

TEST(H0FormsThroughPoints, RepeatedPointsRejected) {
  EXPECT_THROW(h0FormsThroughPoints(fp, 1, {pt({1, 2, 3, 4}), pt({2, 4, 6, 8})}), std::invalid_argument);
  auto nine = nodePoints(nodes, labels({"E0", "E12", "E13", "E14", "E15", "E16", "E23", "E24", "E25"}));
  nine.push_back(nine[3]);
  EXPECT_THROW(h0FormsThroughPoints(fp, 2, nine), std::invalid_argument);
}

TEST(H0FormsThroughPoints, EightNodesLeaveAtLeastTwoQuadrics) {
  std::mt19937_64 rng(53);
  std::vector<NodeLabel> all(allNodeLabels().begin(), allNodeLabels().end());
  for (int t = 0; t < 30; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<NodeLabel> eight(all.begin(), all.begin() + 8);
    const auto pts = nodePoints(nodes, eight);
    const std::size_t h0 = h0FormsThroughPoints(fp, 2, pts);
    EXPECT_GE(h0, 2u);
    EXPECT_EQ(h0, 10u - rank(evaluationMatrix(fp, 2, pts)));
  }
}

TEST(H0FormsThroughPoints, MonotoneAndRankBound) {
  std::mt19937_64 rng(59);
  std::vector<NodeLabel> all(allNodeLabels().begin(), allNodeLabels().end());
  for (int t = 0; t < 10; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    for (int d = 1; d <= 3; ++d) {
      std::size_t prev = monomialBasis(d, 4).size();
      for (std::size_t k = 1; k <= 16; ++k) {
        const auto h0 = h0FormsThroughPoints(fp, d, nodePoints(nodes, {all.begin(), all.begin() + static_cast<long>(k)}));
        EXPECT_LE(h0, prev);
        EXPECT_GE(static_cast<long>(h0), static_cast<long>(monomialBasis(d, 4).size()) - static_cast<long>(k));
        prev = h0;
      }
    }
  }
}

TEST(H0FormsThroughPoints, PermutationAndRescalingInvariant) {
  std::mt19937_64 rng(61);
  std::vector<NodeLabel> all(allNodeLabels().begin(), allNodeLabels().end());
  for (int t = 0; t < 20; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = rng() % 16 + 1;
    std::vector<NodeLabel> subset(all.begin(), all.begin() + static_cast<long>(k));
    auto pts = nodePoints(nodes, subset);
    const int d = static_cast<int>(rng() % 3) + 1;
    const auto base = h0FormsThroughPoints(fp, d, pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<ProjectivePoint<PrimeField>> scaled;
    for (const auto& p : pts) {
      const Fp c = fp(static_cast<std::int64_t>(rng() % 32002 + 1));
      std::vector<Fp> v;
      for (std::size_t i = 0; i < 4; ++i) v.push_back(p[i] * c);
      scaled.emplace_back(fp, v);
    }
    EXPECT_EQ(h0FormsThroughPoints(fp, d, pts), base);
    EXPECT_EQ(h0FormsThroughPoints(fp, d, scaled), base);
  }
}

TEST(H0FormsThroughPoints, FourNodeSubsetsMatchDeterminantRank) {
  std::vector<NodeLabel> all(allNodeLabels().begin(), allNodeLabels().end());
  std::vector<bool> sel(16, false);
  std::fill(sel.begin(), sel.begin() + 4, true);
  std::size_t subsets = 0;
  do {
    std::vector<NodeLabel> four;
    for (std::size_t i = 0; i < 16; ++i)
      if (sel[i]) four.push_back(all[i]);
    const auto pts = nodePoints(nodes, four);
    std::vector<std::vector<Fp>> m;
    for (const auto& p : pts) m.push_back({p[0], p[1], p[2], p[3]});
    EXPECT_EQ(h0FormsThroughPoints(fp, 1, pts), 4u - rankByMinors(m));
    ++subsets;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  EXPECT_EQ(subsets, 1820u);
}

TEST(H0FormsThroughPoints, RationalAndModularCountsAgree) {
  const auto qnodes = allNodes(curve, RationalField{});
  const auto four = labels({"E23", "E25", "E34", "E45"});
  const auto twelve = allExcept(four);
  EXPECT_EQ(h0FormsThroughPoints(RationalField{}, 1, nodePoints(qnodes, four)),
            h0FormsThroughPoints(fp, 1, nodePoints(nodes, four)));
  EXPECT_EQ(h0FormsThroughPoints(RationalField{}, 2, nodePoints(qnodes, twelve)),
            h0FormsThroughPoints(fp, 2, nodePoints(nodes, twelve)));
}

TEST(CheckTwoHMinusM, ReferenceClassHasNoPlane) {
  const auto c = checkTwoHMinusM(ring, nodes, M);
  EXPECT_EQ(c.h0, 0u);
  EXPECT_TRUE(c.notEffective());
  EXPECT_EQ(c.nodes, labels({"E23", "E25", "E34", "E45"}));
}

TEST(CheckTwoHMinusM, FourNodesOnATropePlaneGiveAWitness) {
  // 2H_X - M' = L - (E16 + E26 + E36 + E46), four nodes of the trope T6.
  const DivisorClass mPrime = threeLMinusNodes(allExcept(labels({"E16", "E26", "E36", "E46"})));
  const auto c = checkTwoHMinusM(ring, nodes, mPrime);
  EXPECT_EQ(c.h0, 1u);
  EXPECT_TRUE(c.effective());
  ASSERT_EQ(c.witnesses.size(), 1u);
  for (const auto& l : tropeNodes(TropeLabel::odd(6)))
    EXPECT_TRUE(c.witnesses[0].evaluate(nodePoints(nodes, {l})[0]).isZero()) << l.name();
}

TEST(CheckTwoHMinusM, UnsupportedShapes) {
  EXPECT_THROW(checkTwoHMinusM(ring, nodes, polarizationClass()), UnsupportedShapeError);
  EXPECT_THROW(checkTwoHMinusM(ring, nodes, threeLMinusNodes(labels({"E0", "E12", "E13"}))), UnsupportedShapeError);
}

TEST(CheckMMinusH, ReferenceClassDecidedByTangencyLocus) {
  const auto c = checkMMinusH(quartic, nodes, M);
  EXPECT_EQ(c.nodes, allExcept(labels({"E23", "E25", "E34", "E45"})));
  EXPECT_EQ(c.h0, 1u);
  ASSERT_TRUE(c.tangency.has_value());
  EXPECT_EQ(c.tangency->codimension, 3u);
  EXPECT_TRUE(c.notEffective());
  std::vector<std::string> cites;
  for (const auto& i : c.inferences) cites.push_back(i.citation);
  EXPECT_EQ(cites, (std::vector<std::string>{"effective-doubling", "exceptional-twist", "doubled-section-tangency"}));
}

TEST(CheckMMinusH, TangencyIdealOracle) {
  // Derived: the tangency locus of the explicit quadric is a finite point set,
  // so its ideal has codimension 3 in four variables.
  const auto q = parsePolynomial(ring, "-48*X^2-72*X*Y-24*Y^2+150*X*Z+22*Y*Z-2*Z^2-3*X*W+Y*W+Z*W");
  auto gens = tangencyIdealGenerators(quartic.polynomial(), q);
  EXPECT_EQ(gens.size(), 2u + 6u);
  const auto h = hilbertDegreeCodim(buchberger(gens));
  EXPECT_EQ(h.codimension, 3u);
  // every node on Q lies on the locus: Q vanishes and grad f = 0 there
  for (const auto& l : allExcept(labels({"E23", "E25", "E34", "E45"})))
    for (const auto& g : gens) EXPECT_TRUE(g.evaluate(nodePoints(nodes, {l})[0]).isZero()) << l.name();
}

TEST(CheckMMinusH, SquareOfAQuadricIsNotReduced) {
  // A quadric tangent to X everywhere along Q.X would give a positive
  // dimensional locus; X = Q^2 itself is the extreme case.
  const auto q = parsePolynomial(ring, "X*Y-Z*W");
  const auto h = hilbertDegreeCodim(buchberger(tangencyIdealGenerators(q * q, q)));
  EXPECT_LT(h.codimension, 3u);
  EXPECT_FALSE((TangencyData{h.codimension, h.degree}.reduced()));
}

TEST(CheckMMinusH, UnsupportedShape) {
  EXPECT_THROW(checkMMinusH(quartic, nodes, polarizationClass()), UnsupportedShapeError);
}

TEST(CertifyUlrich, ReferenceClassIsCertified) {
  const auto cert = certifyUlrich(curve, quartic, M);
  EXPECT_EQ(cert.verdict, Verdict::Certified) << cert.reason;
  for (const auto& c : cert.checks) EXPECT_TRUE(c.pass) << c.name;
  for (const char* name : {"singular-locus", "H_X^2", "M.H_X", "M^2", "chi(M-H_X)", "chi(M-2H_X)", "theta*H_X",
                           "theta*M", "2H_X-M not effective", "M-H_X not effective"})
    EXPECT_NE(cert.find(name), nullptr) << name;
  EXPECT_EQ(cert.find("even-eight"), nullptr);
  EXPECT_EQ(cert.hx2, 8);
  EXPECT_EQ(cert.mDotH, 12);
  EXPECT_EQ(cert.m2, 12);
  ASSERT_TRUE(cert.enriques.has_value());
  EXPECT_EQ(cert.enriques->conclusion, "N is H_Y-Ulrich");
  for (const auto& i : cert.inferences) EXPECT_TRUE(isWhitelistedCitation(i.citation));
}

TEST(CertifyUlrich, EvenEightClassIsRefutedWithoutGeometry) {
  const DivisorClass m = twoLMinusHalfEight(labels({"E0", "E12", "E34", "E35", "E36", "E45", "E46", "E56"}));
  const auto cert = certifyUlrich(curve, quartic, m);
  EXPECT_EQ(cert.verdict, Verdict::RefutedEvenEight);
  EXPECT_NE(cert.reason.find("effective by even-eight criterion"), std::string::npos);
  for (const char* name : {"H_X^2", "M.H_X", "M^2", "chi(M-H_X)", "chi(M-2H_X)"}) {
    ASSERT_NE(cert.find(name), nullptr);
    EXPECT_TRUE(cert.find(name)->pass) << name;
  }
  EXPECT_EQ(cert.find("2H_X-M not effective"), nullptr);
  EXPECT_EQ(cert.find("M-H_X not effective"), nullptr);
  EXPECT_FALSE(cert.enriques.has_value());
}

TEST(CertifyUlrich, ElevenNodesFailNumerically) {
  auto eleven = referenceUlrichNodes();
  eleven.pop_back();
  const DivisorClass m = threeLMinusNodes(eleven);
  EXPECT_NE(selfIntersection(m), 12);  // pairing oracle: 36 - 22 = 14
  EXPECT_EQ(selfIntersection(m), 14);
  const auto cert = certifyUlrich(curve, quartic, m);
  EXPECT_EQ(cert.verdict, Verdict::RefutedNumerical);
  EXPECT_FALSE(cert.find("M^2")->pass);
}

TEST(CertifyUlrich, NonInvariantClassIsRefuted) {
  const DivisorClass mPrime = threeLMinusNodes(allExcept(labels({"E16", "E26", "E36", "E46"})));
  const auto cert = certifyUlrich(curve, quartic, mPrime);
  EXPECT_EQ(cert.verdict, Verdict::RefutedInvariance);
  EXPECT_FALSE(cert.mInvariant);
  EXPECT_THROW(descendToEnriques(cert), DescentError);
}

TEST(CertifyUlrich, BadSurfaceThrows) {
  KummerQuartic<PrimeField> fermat(parsePolynomial(ring, "X^4+Y^4+Z^4+W^4"));
  EXPECT_THROW(certifyUlrich(curve, fermat, M), NodeVerificationError);
}

TEST(CertifyUlrich, BodyIsDeterministic) {
  const auto a = certificateBody(certifyUlrich(curve, quartic, M)).dump();
  const auto b = certificateBody(certifyUlrich(curve, quartic, M)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(sha256Hex(a), sha256Hex(b));
}

TEST(CertifyUlrich, BodyRoundTripsForDescent) {
  const auto cert = certifyUlrich(curve, quartic, M);
  const auto back = certificateFromBody(certificateBody(cert));
  EXPECT_EQ(back.verdict, Verdict::Certified);
  EXPECT_EQ(back.m, M);
  EXPECT_EQ(back.checks.size(), cert.checks.size());
  const auto r = descendToEnriques(back);
  EXPECT_EQ(r.hY2, 4);
  EXPECT_EQ(r.nDotH, 6);
  EXPECT_EQ(r.n2, 6);
  EXPECT_EQ(r.h0HY, 3);
  EXPECT_EQ(r.conclusion, "N is H_Y-Ulrich");
  EXPECT_THROW(certificateFromBody(nlohmann::ordered_json::object()), IntegrityError);
}

TEST(DescendToEnriques, RequiresCertifiedInvariantInput) {
  auto cert = certifyUlrich(curve, quartic, M);
  auto notCertified = cert;
  notCertified.verdict = Verdict::RefutedEffectivity;
  EXPECT_THROW(descendToEnriques(notCertified), DescentError);
  auto notInvariant = cert;
  notInvariant.mInvariant = false;
  EXPECT_THROW(descendToEnriques(notInvariant), DescentError);
}

TEST(DescendToEnriques, EveryNumberIsHalfTheCoverPairing) {
  const auto cert = certifyUlrich(curve, quartic, M);
  const auto r = descendToEnriques(cert);
  const DivisorClass h = polarizationClass();
  EXPECT_EQ(2 * r.hY2, asInteger(selfIntersection(h)));
  EXPECT_EQ(2 * r.nDotH, asInteger(pairing(M, h)));
  EXPECT_EQ(2 * r.n2, asInteger(selfIntersection(M)));
}

TEST(VerdictNames, RoundTrip) {
  for (auto v : {Verdict::Certified, Verdict::RefutedNumerical, Verdict::RefutedEvenEight, Verdict::RefutedInvariance,
                 Verdict::RefutedEffectivity, Verdict::UndecidedEffectivity})
    EXPECT_EQ(parseVerdict(verdictName(v)), v);
  EXPECT_THROW(parseVerdict("maybe"), std::invalid_argument);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
