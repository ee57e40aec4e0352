#pragma once

// Genus-2 curve y^2 = prod (x - s_j) and the sixteen nodes of its Kummer
// quartic in P^3. Node points come from the classical parametrization
//   {0}    -> (0 : 0 : 0 : 1)
//   {i,j}  -> (1 : s_i + s_j : s_i s_j : F0(s_i, s_j) / (s_i - s_j)^2)
// and are checked against a supplied quartic rather than trusted.

#include "ulrich/exactalg/scalar.hpp"
#include "ulrich/groebner/buchberger.hpp"
#include "ulrich/groebner/hilbert.hpp"
#include "ulrich/polyring/parse.hpp"
#include "ulrich/polyring/polynomial.hpp"

#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

/// {0} or an unordered pair {i, j} with 1 <= i < j <= 6.
class NodeLabel {
 public:
  NodeLabel() = default;  // {0}
  static NodeLabel zero() { return NodeLabel(0, 0); }
  static NodeLabel pair(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 6 || j > 6)
      throw std::invalid_argument("invalid node label {" + std::to_string(i) + "," +
                                  std::to_string(j) + "}");
    return i < j ? NodeLabel(i, j) : NodeLabel(j, i);
  }
  /// Accepts "E0", "E23", "0" or "23".
  static NodeLabel parse(std::string s) {
    if (!s.empty() && (s[0] == 'E' || s[0] == 'e')) s.erase(0, 1);
    if (s == "0") return zero();
    if (s.size() == 2 && std::isdigit(static_cast<unsigned char>(s[0])) &&
        std::isdigit(static_cast<unsigned char>(s[1])))
      return pair(s[0] - '0', s[1] - '0');
    throw std::invalid_argument("invalid node label '" + s + "'");
  }

  bool isZero() const { return i_ == 0; }
  int first() const { return i_; }
  int second() const { return j_; }

  /// Position in the basis order E0, E12, E13, ..., E56.
  std::size_t index() const {
    if (i_ == 0) return 0;
    std::size_t k = 1;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b, ++k)
        if (a == i_ && b == j_) return k;
    throw std::logic_error("unreachable node label");
  }

  std::string name() const {
    return i_ == 0 ? "E0" : "E" + std::to_string(i_) + std::to_string(j_);
  }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  friend auto operator<=>(const NodeLabel& a, const NodeLabel& b) { return a.index() <=> b.index(); }

 private:
  NodeLabel(int i, int j) : i_(i), j_(j) {}
  int i_ = 0;
  int j_ = 0;
};

/// The sixteen labels in basis order.
inline const std::array<NodeLabel, 16>& allNodeLabels() {
  static const std::array<NodeLabel, 16> labels = [] {
    std::array<NodeLabel, 16> out{};
    std::size_t k = 1;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b) out[k++] = NodeLabel::pair(a, b);
    return out;
  }();
  return labels;
}

class Genus2Curve {
 public:
  /// Weierstrass x-coordinates s_1..s_6; must be pairwise distinct.
  explicit Genus2Curve(std::array<Rational, 6> roots) : roots_(std::move(roots)) {
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b)
        if (roots_[a] == roots_[b])
          throw std::invalid_argument("repeated Weierstrass root " + roots_[a].str() +
                                      ": the curve is singular");
  }

  /// y^2 = (x-1)(x+1)(x-2)(x+2)(x-3)(x+3), roots in that order.
  static Genus2Curve reference() {
    return Genus2Curve({Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3), Rational(-3)});
  }

  const std::array<Rational, 6>& roots() const { return roots_; }
  const Rational& root(int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }

  /// f_0..f_6 of the monic sextic prod (x - s_j).
  std::array<Rational, 7> sexticCoefficients() const {
    std::array<Rational, 7> c{};
    c[0] = 1;
    for (const auto& s : roots_) {
      // multiply by (x - s)
      for (std::size_t k = 6; k > 0; --k) c[k] = c[k - 1] - s * c[k];
      c[0] = -s * c[0];
    }
    return c;
  }

 private:
  std::array<Rational, 6> roots_;
};

inline std::array<Rational, 7> sexticCoefficients(const Genus2Curve& curve) {
  return curve.sexticCoefficients();
}

/// F0(u, v) = 2f0 + f1(u+v) + 2f2 uv + f3 uv(u+v) + 2f4 (uv)^2 + f5 (uv)^2 (u+v) + 2f6 (uv)^3
template <ExactField F>
typename F::Element kummerF0(const F& field, const std::array<typename F::Element, 7>& f,
                             const typename F::Element& u, const typename F::Element& v) {
  using E = typename F::Element;
  const E two = field(2);
  const E t = u + v;
  const E e = u * v;
  const E e2 = e * e;
  return two * f[0] + f[1] * t + two * f[2] * e + f[3] * e * t + two * f[4] * e2 +
         f[5] * e2 * t + two * f[6] * e2 * e;
}

/// Node point of `label`, computed inside `field` (roots are mapped into it
/// first, so over F_p this fails if p divides a denominator or s_i = s_j mod p).
template <ExactField F>
ProjectivePoint<F> nodeCoordinates(const Genus2Curve& curve, const NodeLabel& label, const F& field) {
  using E = typename F::Element;
  if (label.isZero()) return ProjectivePoint<F>(field, {field.zero(), field.zero(), field.zero(), field.one()});
  const auto sextic = curve.sexticCoefficients();
  std::array<E, 7> f;
  for (std::size_t k = 0; k < 7; ++k) f[k] = field.fromRational(sextic[k]);
  const E u = field.fromRational(curve.root(label.first()));
  const E v = field.fromRational(curve.root(label.second()));
  const E diff = u - v;
  if (F::isZero(diff))
    throw std::domain_error("roots s_" + std::to_string(label.first()) + " and s_" +
                            std::to_string(label.second()) + " coincide in the coefficient field");
  const E w = kummerF0(field, f, u, v) / (diff * diff);
  return ProjectivePoint<F>(field, {field.one(), u + v, u * v, w});
}

inline ProjectivePoint<RationalField> nodeCoordinates(const Genus2Curve& curve, const NodeLabel& label) {
  return nodeCoordinates(curve, label, RationalField{});
}

/// Mod-p image of a rational projective point.
inline ProjectivePoint<PrimeField> reduceModP(const ProjectivePoint<RationalField>& pt, const PrimeField& field) {
  // Clear denominators first so a point like (1/p : 1) still has an image.
  Integer l = 1;
  for (const auto& c : pt.coordinates()) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<Integer> ints;
  for (const auto& c : pt.coordinates()) ints.push_back(numerator(c) * (l / denominator(c)));
  Integer g = 0;
  for (const auto& c : ints) g = boost::multiprecision::gcd(g, c);
  std::vector<Fp> coords;
  for (const auto& c : ints) coords.push_back(field.fromInteger(c / g));
  return ProjectivePoint<PrimeField>(field, std::move(coords));
}

template <ExactField F>
struct Node {
  NodeLabel label;
  ProjectivePoint<F> point;
};

template <ExactField F>
std::vector<Node<F>> allNodes(const Genus2Curve& curve, const F& field) {
  std::vector<Node<F>> out;
  for (const auto& l : allNodeLabels()) out.push_back({l, nodeCoordinates(curve, l, field)});
  return out;
}

/// Homogeneous quartic in four variables.
template <ExactField F>
class KummerQuartic {
 public:
  explicit KummerQuartic(Polynomial<F> f) : f_(std::move(f)) {
    if (f_.ring()->nvars() != 4) throw std::invalid_argument("Kummer quartic needs 4 variables");
    if (f_.isZero() || !f_.isHomogeneous() || f_.totalDegree() != 4)
      throw std::invalid_argument("Kummer quartic must be homogeneous of degree 4");
    partials_ = partialDerivatives(f_);
  }

  const Polynomial<F>& polynomial() const { return f_; }
  const std::vector<Polynomial<F>>& partials() const { return partials_; }

  /// f together with its four partial derivatives.
  std::vector<Polynomial<F>> singularLocusGenerators() const {
    std::vector<Polynomial<F>> gens{f_};
    for (const auto& p : partials_)
      if (!p.isZero()) gens.push_back(p);
    return gens;
  }

 private:
  Polynomial<F> f_;
  std::vector<Polynomial<F>> partials_;
};

/// The Kummer quartic of the reference curve, coefficients verbatim.
inline constexpr const char* kReferenceQuarticText =
    "7056*X^4-2016*X^2*Y^2+144*Y^4-288*X*Y^2*Z+2888*X^2*Z^2\n"
    "-196*Y^2*Z^2+56*Z^4+144*X^3*W-196*X^2*Z*W+56*X*Z^2*W-4*Z^3*W\n"
    "+Y^2*W^2-4*X*Z*W^2";

/// f(pt) = 0 and grad f(pt) = 0.
template <ExactField F>
bool verifyNode(const KummerQuartic<F>& q, const ProjectivePoint<F>& pt) {
  if (!F::isZero(q.polynomial().evaluate(pt))) return false;
  for (const auto& d : q.partials())
    if (!F::isZero(d.evaluate(pt))) return false;
  return true;
}

template <ExactField F>
struct NodeCheck {
  NodeLabel label;
  ProjectivePoint<F> point;
  typename F::Element value;                  // f(pt)
  std::vector<typename F::Element> gradient;  // grad f(pt)
  bool singular = false;
};

template <ExactField F>
struct NodeVerificationReport {
  bool passed = false;
  std::string failure;  // first counterexample, empty on success
  std::vector<NodeCheck<F>> nodes;
  bool pairwiseDistinct = false;
  bool allSingular = false;
  std::optional<HilbertData> hilbert;
  std::size_t groebnerSize = 0;
  BuchbergerStats stats;
};

inline constexpr std::size_t kExpectedNodeCodim = 3;
inline constexpr long kExpectedNodeDegree = 16;

/// (a) the sixteen formula points are pairwise distinct, (b) each is a
/// singular point of q, (c) <f, grad f> has codimension 3 and degree 16.
/// Together these force the reduced singular scheme to be exactly the nodes.
template <ExactField F>
NodeVerificationReport<F> verifySixteenNodes(const KummerQuartic<F>& q, const Genus2Curve& curve) {
  const F& field = q.polynomial().field();
  NodeVerificationReport<F> report;
  auto fail = [&](std::string why) {
    if (report.failure.empty()) report.failure = std::move(why);
  };

  try {
    for (const auto& n : allNodes(curve, field)) {
      NodeCheck<F> check{n.label, n.point, q.polynomial().evaluate(n.point), {}, false};
      for (const auto& d : q.partials()) check.gradient.push_back(d.evaluate(n.point));
      check.singular = verifyNode(q, n.point);
      report.nodes.push_back(std::move(check));
    }
  } catch (const std::domain_error& e) {
    report.failure = std::string("node coordinates undefined: ") + e.what();
    return report;
  }

  report.pairwiseDistinct = true;
  for (std::size_t a = 0; a < report.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < report.nodes.size(); ++b)
      if (report.nodes[a].point == report.nodes[b].point) {
        report.pairwiseDistinct = false;
        fail("nodes " + report.nodes[a].label.name() + " and " + report.nodes[b].label.name() +
             " coincide at " + report.nodes[a].point.toString());
      }

  report.allSingular = true;
  for (const auto& n : report.nodes)
    if (!n.singular) {
      report.allSingular = false;
      fail("node " + n.label.name() + " at " + n.point.toString() + " is not a singular point of f");
    }

  auto gb = buchberger(q.singularLocusGenerators(), &report.stats);
  report.groebnerSize = gb.generators.size();
  try {
    report.hilbert = hilbertDegreeCodim(gb);
    if (report.hilbert->codimension != kExpectedNodeCodim || report.hilbert->degree != kExpectedNodeDegree)
      fail("singular locus has codimension " + std::to_string(report.hilbert->codimension) +
           " and degree " + report.hilbert->degree.str() + ", expected 3 and 16");
  } catch (const std::domain_error&) {
    fail("singular locus ideal is the unit ideal");
  }

  report.passed = report.failure.empty();
  return report;
}

}  // namespace ulrich
