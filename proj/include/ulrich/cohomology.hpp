#pragma once

// Effectivity checks for the two class shapes the Ulrich criterion needs, and
// assembly of the certificate. A class L - (nodes) is effective iff some form
// of degree 1 passes through those node points; 2L - (nodes) likewise in
// degree 2. Forms of degree <= 3 restrict injectively to the quartic.

#include "ulrich/enriques.hpp"
#include "ulrich/exactalg/matrix.hpp"
#include "ulrich/groebner/buchberger.hpp"
#include "ulrich/groebner/hilbert.hpp"
#include "ulrich/kummer.hpp"
#include "ulrich/piclattice.hpp"
#include "ulrich/polyring/monomial.hpp"
#include "ulrich/polyring/polynomial.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulrich {

// ---------------------------------------------------------------------------
// Forms through points

/// Row i holds the values of the degree-d monomials (monomialBasis order) at
/// point i.
template <ExactField F>
Matrix<F> evaluationMatrix(const F& field, int d, const std::vector<ProjectivePoint<F>>& points,
                           std::size_t nvars = 4) {
  const auto basis = monomialBasis(d, nvars);
  Matrix<F> m(field, points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].dimension() != nvars) throw std::invalid_argument("point has the wrong number of coordinates");
    for (std::size_t c = 0; c < basis.size(); ++c) {
      auto v = field.one();
      for (std::size_t k = 0; k < nvars; ++k)
        for (int e = 0; e < basis[c][k]; ++e) v = v * points[r][k];
      m(r, c) = v;
    }
  }
  return m;
}

template <ExactField F>
void requireDistinct(const std::vector<ProjectivePoint<F>>& points) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a] == points[b])
        throw std::invalid_argument("repeated point " + points[a].toString() + " at positions " +
                                    std::to_string(a) + " and " + std::to_string(b));
}

template <ExactField F>
struct FormsThroughPoints {
  std::size_t dimension = 0;
  std::vector<Polynomial<F>> basis;  // a basis of the forms, from the kernel
};

/// Degree-d forms in ring's variables vanishing at every point.
template <ExactField F>
FormsThroughPoints<F> formsThroughPoints(const RingPtr<F>& ring, int d, const std::vector<ProjectivePoint<F>>& points) {
  if (d < 0) throw std::invalid_argument("negative degree");
  requireDistinct(points);
  const auto monomials = monomialBasis(d, ring->nvars());
  FormsThroughPoints<F> out;
  if (points.empty()) {
    out.dimension = monomials.size();
    for (const auto& m : monomials) out.basis.push_back(Polynomial<F>::monomial(ring, m, ring->field.one()));
    return out;
  }
  const auto kernel = kernelBasis(evaluationMatrix(ring->field, d, points, ring->nvars()));
  out.dimension = kernel.size();
  for (const auto& v : kernel) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!F::isZero(v[c])) terms.push_back({monomials[c], v[c]});
    out.basis.push_back(Polynomial<F>::fromTerms(ring, std::move(terms)));
  }
  return out;
}

/// dim of degree-d forms in nvars variables through the points: the number
/// of monomials minus the rank of the evaluation matrix.
template <ExactField F>
std::size_t h0FormsThroughPoints(const F& field, int d, const std::vector<ProjectivePoint<F>>& points,
                                 std::size_t nvars = 4) {
  if (d < 0) throw std::invalid_argument("negative degree");
  requireDistinct(points);
  const std::size_t count = monomialBasis(d, nvars).size();
  if (points.empty()) return count;
  return count - rank(evaluationMatrix(field, d, points, nvars));
}

/// Generators of the vanishing ideal of a finite point set: all forms through
/// the points in degrees 1 .. r+1, where r is the first degree in which the
/// points impose independent conditions. This agrees with the radical ideal
/// in every degree >= r+1, which is all the Hilbert polynomial sees.
template <ExactField F>
std::vector<Polynomial<F>> vanishingIdealGenerators(const RingPtr<F>& ring, const std::vector<ProjectivePoint<F>>& points) {
  if (points.empty()) throw std::invalid_argument("vanishing ideal of the empty set is the irrelevant ideal");
  requireDistinct(points);
  int r = 0;
  while (rank(evaluationMatrix(ring->field, r, points, ring->nvars())) < points.size()) ++r;
  std::vector<Polynomial<F>> gens;
  for (int d = 1; d <= r + 1; ++d) {
    auto forms = formsThroughPoints(ring, d, points);
    gens.insert(gens.end(), forms.basis.begin(), forms.basis.end());
  }
  return gens;
}

// ---------------------------------------------------------------------------
// The two effectivity checks

class UnsupportedShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// If d = a L - (sum of distinct nodes), those nodes in basis order.
inline std::optional<std::vector<NodeLabel>> multipleOfLMinusNodes(const DivisorClass& d, long a) {
  if (d.coeffL() != a) return std::nullopt;
  std::vector<NodeLabel> out;
  for (const auto& l : allNodeLabels()) {
    const Rational& c = d.coeffE(l);
    if (c == -1) out.push_back(l);
    else if (c != 0) return std::nullopt;
  }
  return out;
}

template <ExactField F>
std::vector<ProjectivePoint<F>> nodePoints(const std::vector<Node<F>>& nodes, const std::vector<NodeLabel>& labels) {
  std::vector<ProjectivePoint<F>> out;
  for (const auto& l : labels) {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node<F>& n) { return n.label == l; });
    if (it == nodes.end()) throw std::invalid_argument("no node point for " + l.name());
    out.push_back(it->point);
  }
  return out;
}

enum class Effectivity { NotEffective, Effective, Undecided };

inline std::string effectivityName(Effectivity e) {
  switch (e) {
    case Effectivity::NotEffective: return "not-effective";
    case Effectivity::Effective: return "effective";
    case Effectivity::Undecided: return "undecided";
  }
  throw std::logic_error("bad effectivity");
}

/// Locus where the quadric q and the surface f = 0 meet non-transversally:
/// <q, f, 2x2 minors of (grad q; grad f)>.
template <ExactField F>
std::vector<Polynomial<F>> tangencyIdealGenerators(const Polynomial<F>& f, const Polynomial<F>& q) {
  const auto dq = partialDerivatives(q), df = partialDerivatives(f);
  std::vector<Polynomial<F>> gens{q, f};
  for (std::size_t i = 0; i < dq.size(); ++i)
    for (std::size_t j = i + 1; j < dq.size(); ++j) {
      auto m = dq[i] * df[j] - dq[j] * df[i];
      if (!m.isZero()) gens.push_back(std::move(m));
    }
  return gens;
}

struct TangencyData {
  std::size_t codimension = 0;
  Integer degree = 0;
  /// Finite tangency locus: every component of q.X is reduced.
  bool reduced() const { return codimension >= 3; }
};

template <ExactField F>
struct EffectivityCheck {
  std::string className;
  std::vector<NodeLabel> nodes;  // the points the forms must pass through
  int degree = 0;
  std::size_t h0 = 0;
  Effectivity decision = Effectivity::Undecided;
  bool effective() const { return decision == Effectivity::Effective; }
  bool notEffective() const { return decision == Effectivity::NotEffective; }
  std::vector<Polynomial<F>> witnesses;  // a basis of the forms when h0 > 0
  std::optional<TangencyData> tangency;  // set when the single-quadric test ran
  std::vector<CitedInference> inferences;
};

/// 2H_X - M must equal L minus four distinct nodes; h0 is then the number of
/// independent planes through those four points.
template <ExactField F>
EffectivityCheck<F> checkTwoHMinusM(const RingPtr<F>& ring, const std::vector<Node<F>>& nodes, const DivisorClass& m) {
  const DivisorClass d = Rational(2) * polarizationClass() - m;
  auto four = multipleOfLMinusNodes(d, 1);
  if (!four || four->size() != 4)
    throw UnsupportedShapeError("2H_X - M = " + d.toString() + " is not L minus four distinct nodes");
  EffectivityCheck<F> out;
  out.className = "2H_X - M = " + d.toString();
  out.nodes = *four;
  out.degree = 1;
  auto forms = formsThroughPoints(ring, 1, nodePoints(nodes, *four));
  out.h0 = forms.dimension;
  out.decision = out.h0 == 0 ? Effectivity::NotEffective : Effectivity::Effective;
  out.witnesses = std::move(forms.basis);
  return out;
}

/// 2(M - H_X) must equal 2L - (twelve nodes) + (the four other nodes). The
/// four are fixed components, so h0 equals the number of quadrics through the
/// twelve; if that is 0 then M - H_X is not effective either. If there is
/// exactly one such quadric Q and D were in |M - H_X|, then 2D would be its
/// unique divisor, so every curve in Q.X would be doubled and Q tangent to X
/// along it. A finite tangency locus therefore also rules D out.
template <ExactField F>
EffectivityCheck<F> checkMMinusH(const KummerQuartic<F>& quartic, const std::vector<Node<F>>& nodes,
                                 const DivisorClass& m) {
  const RingPtr<F>& ring = quartic.polynomial().ring();
  const DivisorClass d = Rational(2) * (m - polarizationClass());
  std::vector<NodeLabel> plus, minus;
  bool ok = d.coeffL() == 2;
  for (const auto& l : allNodeLabels()) {
    const Rational& c = d.coeffE(l);
    if (c == 1) plus.push_back(l);
    else if (c == -1) minus.push_back(l);
    else ok = false;
  }
  if (!ok || minus.size() != 12 || plus.size() != 4)
    throw UnsupportedShapeError("2(M - H_X) = " + d.toString() + " is not 2L - (twelve nodes) + (four nodes)");
  const DivisorClass twisted = d - DivisorClass::sumOfNodes(plus);

  EffectivityCheck<F> out;
  out.className = "2L - twelve nodes = " + twisted.toString();
  out.nodes = minus;
  out.degree = 2;
  auto forms = formsThroughPoints(ring, 2, nodePoints(nodes, minus));
  out.h0 = forms.dimension;
  out.witnesses = std::move(forms.basis);
  out.inferences.emplace_back("|M - H_X| nonempty", "|2(M - H_X)| nonempty", "effective-doubling");
  std::string fixed;
  for (const auto& l : plus) fixed += (fixed.empty() ? "" : ", ") + l.name();
  out.inferences.emplace_back("2(M - H_X).E = -2 for E in {" + fixed + "}",
                              "H^0(2(M - H_X)) = H^0(" + twisted.toString() + ")", "exceptional-twist");
  if (out.h0 == 0) {
    out.decision = Effectivity::NotEffective;
  } else if (out.h0 == 1) {
    auto gb = buchberger(tangencyIdealGenerators(quartic.polynomial(), out.witnesses.front()));
    try {
      const HilbertData h = hilbertDegreeCodim(gb);
      out.tangency = TangencyData{h.codimension, h.degree};
    } catch (const std::domain_error&) {
      out.tangency = TangencyData{ring->nvars(), 0};  // empty locus
    }
    if (out.tangency->reduced()) {
      out.decision = Effectivity::NotEffective;
      out.inferences.emplace_back("D in |M - H_X| gives 2D = Q.X - (twelve nodes) + (four nodes) for the unique quadric Q",
                                  "Q is tangent to X along every curve of Q.X; the tangency locus is finite, so no D",
                                  "doubled-section-tangency");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Digests

inline std::string sha256Hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

// ---------------------------------------------------------------------------
// Certificate

enum class Verdict {
  Certified,
  RefutedNumerical,
  RefutedEvenEight,
  RefutedInvariance,
  RefutedEffectivity,
  UndecidedEffectivity
};

inline std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::RefutedNumerical: return "refuted-numerical";
    case Verdict::RefutedEvenEight: return "refuted-even-eight";
    case Verdict::RefutedInvariance: return "refuted-invariance";
    case Verdict::RefutedEffectivity: return "refuted-effectivity";
    case Verdict::UndecidedEffectivity: return "undecided-effectivity";
  }
  throw std::logic_error("bad verdict");
}

inline Verdict parseVerdict(const std::string& s) {
  for (auto v : {Verdict::Certified, Verdict::RefutedNumerical, Verdict::RefutedEvenEight, Verdict::RefutedInvariance,
                 Verdict::RefutedEffectivity, Verdict::UndecidedEffectivity})
    if (verdictName(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

class NodeVerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DescentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckRecord {
  std::string name;
  std::string reference;  // the statement being checked
  std::string inputsDigest;
  nlohmann::ordered_json value;
  bool pass = false;
};

struct UlrichCertificate {
  std::array<Rational, 6> roots;
  std::uint32_t prime = kDefaultPrime;
  std::string quartic;  // canonical form over F_p
  DivisorClass m;
  std::vector<CheckRecord> checks;
  std::vector<CitedInference> inferences;
  Verdict verdict = Verdict::RefutedNumerical;
  std::string reason;

  // Pairings and flags the descent step reads back.
  Integer hx2 = 0, mDotH = 0, m2 = 0;
  bool hInvariant = false, mInvariant = false;
  std::optional<EnriquesReport> enriques;

  bool certified() const { return verdict == Verdict::Certified; }
  const CheckRecord* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline Integer asInteger(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("expected an integral pairing, got " + r.str());
  return numerator(r);
}

/// Y-side report; requires a certified chain with both invariance flags.
inline EnriquesReport descendToEnriques(const UlrichCertificate& cert) {
  if (!cert.certified())
    throw DescentError("certificate verdict is " + verdictName(cert.verdict) + ", descent needs a certified M");
  if (!cert.hInvariant || !cert.mInvariant)
    throw DescentError("M and H_X must both be theta*-invariant to descend");
  return enriquesNumerics(cert.hx2, cert.mDotH, cert.m2, true, true);
}

namespace detail {

inline std::string joinLabels(const std::vector<NodeLabel>& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ",") + l.name();
  return s;
}

inline nlohmann::ordered_json labelsJson(const std::vector<NodeLabel>& labels) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& l : labels) a.push_back(l.name());
  return a;
}

}  // namespace detail

/// Chain: node verification, numerical conditions, the even-eight shortcut,
/// theta*-invariance, then the two effectivity checks. Stops at the first
/// failing step.
inline UlrichCertificate certifyUlrich(const Genus2Curve& curve, const KummerQuartic<PrimeField>& quartic,
                                       const DivisorClass& m) {
  using json = nlohmann::ordered_json;
  const PrimeField& field = quartic.polynomial().field();
  const RingPtr<PrimeField>& ring = quartic.polynomial().ring();
  UlrichCertificate cert;
  cert.roots = curve.roots();
  cert.prime = static_cast<std::uint32_t>(field.p);
  cert.quartic = quartic.polynomial().toString();
  cert.m = m;
  const std::string surfaceDigest =
      sha256Hex(cert.quartic + "|" + std::to_string(cert.prime) + "|" + [&] {
        std::string s;
        for (const auto& r : cert.roots) s += r.str() + ",";
        return s;
      }());
  auto digest = [&](const std::string& extra) { return sha256Hex(surfaceDigest + "|" + extra); };
  auto record = [&](std::string name, std::string ref, const std::string& inputs, json value, bool pass) {
    cert.checks.push_back({std::move(name), std::move(ref), digest(inputs), std::move(value), pass});
    return pass;
  };
  auto stop = [&](Verdict v, std::string why) {
    cert.verdict = v;
    cert.reason = std::move(why);
    return cert;
  };

  // Nodes.
  auto nodeReport = verifySixteenNodes(quartic, curve);
  if (!nodeReport.passed) throw NodeVerificationError(nodeReport.failure);
  {
    json v;
    v["codimension"] = nodeReport.hilbert->codimension;
    v["degree"] = nodeReport.hilbert->degree.convert_to<long>();
    v["groebner_basis_size"] = nodeReport.groebnerSize;
    json pts = json::object();
    for (const auto& n : nodeReport.nodes) pts[n.label.name()] = n.point.toString();
    v["points"] = std::move(pts);
    record("singular-locus", "Sing(f) is 16 distinct nodes: codim 3, degree 16", "nodes", std::move(v), true);
  }
  std::vector<Node<PrimeField>> nodes;
  for (const auto& n : nodeReport.nodes) nodes.push_back({n.label, n.point});

  // Numerical conditions with s = 4.
  const DivisorClass h = polarizationClass();
  const std::string mText = m.toString();
  cert.hx2 = asInteger(selfIntersection(h));
  const Rational mh = pairing(m, h), mm = selfIntersection(m);
  const Rational chi1 = chiK3(m - h), chi2 = chiK3(m - Rational(2) * h);
  bool numeric = true;
  numeric &= record("H_X^2", "H_X^2 = 8", h.toString(), json(cert.hx2.str()), cert.hx2 == 8);
  numeric &= record("M.H_X", "M.H_X = 3s = 12", mText, json(mh.str()), mh == 12);
  numeric &= record("M^2", "M^2 = 4s - 4 = 12", mText, json(mm.str()), mm == 12);
  numeric &= record("chi(M-H_X)", "chi(M - H_X) = 0", mText, json(chi1.str()), chi1 == 0);
  numeric &= record("chi(M-2H_X)", "chi(M - 2H_X) = 0", mText, json(chi2.str()), chi2 == 0);
  if (numeric) numeric = numericalUlrich(PolarizedSurfaceParams(4), h, m);
  if (!numeric) return stop(Verdict::RefutedNumerical, "numerical Ulrich conditions fail");
  cert.mDotH = asInteger(mh);
  cert.m2 = asInteger(mm);

  // M - H_X = 1/2 (eight nodes) is effective when those eight form an even eight.
  if (auto eight = halfEightShape(m - h)) {
    const bool even = evenEightTest(*eight, defaultPicGenerators());
    json v;
    v["nodes"] = detail::labelsJson(*eight);
    v["even_eight"] = even;
    record("even-eight", "M - H_X = 1/2 (eight nodes) is not an even eight", detail::joinLabels(*eight),
           std::move(v), !even);
    if (even)
      return stop(Verdict::RefutedEvenEight,
                  "effective by even-eight criterion: M - H_X = 1/2(" + detail::joinLabels(*eight) + ")");
  }

  // theta*-invariance.
  const Involution theta = buildThetaStar();
  cert.hInvariant = isInvariant(theta, h);
  cert.mInvariant = isInvariant(theta, m);
  record("theta*H_X", "theta* H_X = H_X", h.toString(), json(theta.apply(h).toString()), cert.hInvariant);
  record("theta*M", "theta* M = M", mText, json(theta.apply(m).toString()), cert.mInvariant);
  if (!cert.hInvariant || !cert.mInvariant) return stop(Verdict::RefutedInvariance, "M or H_X is not theta*-invariant");

  // Effectivity, over F_p.
  auto effectivityJson = [](const auto& c) {
    json v;
    v["class"] = c.className;
    v["degree"] = c.degree;
    v["nodes"] = detail::labelsJson(c.nodes);
    v["h0"] = c.h0;
    v["decision"] = effectivityName(c.decision);
    if (c.tangency) v["tangency_locus"] = {{"codimension", c.tangency->codimension}, {"degree", c.tangency->degree.str()}};
    if (c.h0 > 0) {
      json w = json::array();
      for (const auto& f : c.witnesses) w.push_back(f.toString());
      v["witnesses"] = std::move(w);
    }
    return v;
  };
  const auto twoHMinusM = checkTwoHMinusM(ring, nodes, m);
  record("2H_X-M not effective", "no plane through the four nodes of 2H_X - M", detail::joinLabels(twoHMinusM.nodes),
         effectivityJson(twoHMinusM), !twoHMinusM.effective());
  if (twoHMinusM.effective())
    return stop(Verdict::RefutedEffectivity, "2H_X - M is effective: a plane passes through " +
                                                 detail::joinLabels(twoHMinusM.nodes));
  const auto mMinusH = checkMMinusH(quartic, nodes, m);
  record("M-H_X not effective", "no quadric through the twelve complementary nodes, or one whose section is reduced",
         detail::joinLabels(mMinusH.nodes), effectivityJson(mMinusH), mMinusH.notEffective());
  cert.inferences.insert(cert.inferences.end(), mMinusH.inferences.begin(), mMinusH.inferences.end());
  if (!mMinusH.notEffective())
    return stop(Verdict::UndecidedEffectivity,
                "2(M - H_X) is effective (h0 = " + std::to_string(mMinusH.h0) + ") and M - H_X is not decided");
  cert.inferences.emplace_back("h0 = 0 for both classes over F_" + std::to_string(cert.prime),
                               "h0 = 0 for both classes in characteristic 0", "semicontinuity");
  cert.inferences.emplace_back("M numerically Ulrich, M - H_X and 2H_X - M not effective", "M is H_X-Ulrich",
                               "ulrich-certificate");

  cert.verdict = Verdict::Certified;
  cert.reason = "all checks pass";
  cert.enriques = descendToEnriques(cert);
  return cert;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json inferenceJson(const CitedInference& i) {
  return {{"premise", i.premise}, {"conclusion", i.conclusion}, {"citation", i.citation}};
}

inline nlohmann::ordered_json enriquesJson(const EnriquesReport& r) {
  using json = nlohmann::ordered_json;
  json e;
  e["H_Y^2"] = r.hY2.str();
  e["N.H_Y"] = r.nDotH.str();
  e["N^2"] = r.n2.str();
  e["chi(H_Y)"] = r.chiHY.str();
  e["h0(H_Y)"] = r.h0HY.str();
  e["h0(K_Y+H_Y)"] = r.h0HY.str();
  e["chi(N)"] = r.chiN.str();
  e["chi(N+K_Y)"] = r.chiNK.str();
  json steps = json::array();
  for (const auto& s : r.transfer.steps) steps.push_back(inferenceJson(s));
  for (const auto& s : r.supporting) steps.push_back(inferenceJson(s));
  e["inferences"] = std::move(steps);
  e["conclusion"] = r.conclusion;
  return e;
}

/// Deterministic body of the certificate: no timestamps, stable key order.
inline nlohmann::ordered_json certificateBody(const UlrichCertificate& c) {
  using json = nlohmann::ordered_json;
  json body;
  json roots = json::array();
  for (const auto& r : c.roots) roots.push_back(r.str());
  body["surface"] = {{"roots", roots},
                     {"prime", c.prime},
                     {"quartic", c.quartic},
                     {"quartic_sha256", sha256Hex(c.quartic)}};
  body["m_class"] = c.m.toString();
  json checks = json::array();
  for (const auto& k : c.checks)
    checks.push_back({{"name", k.name},
                      {"reference", k.reference},
                      {"inputs_digest", k.inputsDigest},
                      {"value", k.value},
                      {"pass", k.pass}});
  body["checks"] = std::move(checks);
  json inf = json::array();
  for (const auto& i : c.inferences) inf.push_back(inferenceJson(i));
  body["inferences"] = std::move(inf);
  body["summary"] = {{"H_X^2", c.hx2.str()},
                     {"M.H_X", c.mDotH.str()},
                     {"M^2", c.m2.str()},
                     {"theta_invariant_H", c.hInvariant},
                     {"theta_invariant_M", c.mInvariant}};
  body["verdict"] = verdictName(c.verdict);
  body["reason"] = c.reason;
  if (c.enriques) body["enriques"] = enriquesJson(*c.enriques);
  return body;
}

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rebuilds the fields descent needs from a certificate body.
inline UlrichCertificate certificateFromBody(const nlohmann::ordered_json& body) {
  try {
    UlrichCertificate c;
    const auto& roots = body.at("surface").at("roots");
    if (roots.size() != 6) throw std::invalid_argument("expected six roots");
    for (std::size_t i = 0; i < 6; ++i) c.roots[i] = Rational(roots[i].get<std::string>());
    c.prime = body.at("surface").at("prime").get<std::uint32_t>();
    c.quartic = body.at("surface").at("quartic").get<std::string>();
    c.m = parseDivisorClass(body.at("m_class").get<std::string>());
    const auto& s = body.at("summary");
    c.hx2 = Integer(s.at("H_X^2").get<std::string>());
    c.mDotH = Integer(s.at("M.H_X").get<std::string>());
    c.m2 = Integer(s.at("M^2").get<std::string>());
    c.hInvariant = s.at("theta_invariant_H").get<bool>();
    c.mInvariant = s.at("theta_invariant_M").get<bool>();
    c.verdict = parseVerdict(body.at("verdict").get<std::string>());
    c.reason = body.at("reason").get<std::string>();
    for (const auto& k : body.at("checks"))
      c.checks.push_back({k.at("name"), k.at("reference"), k.at("inputs_digest"), k.at("value"), k.at("pass")});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw IntegrityError(std::string("malformed certificate body: ") + e.what());
  }
}

}  // namespace ulrich
