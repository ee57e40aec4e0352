#pragma once

#include "ulrich/exactalg/scalar.hpp"
#include "ulrich/polyring/monomial.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ulrich {

template <ExactField F>
struct PolyRing {
  F field;
  std::vector<std::string> variables;
  MonomialOrder order;

  std::size_t nvars() const { return variables.size(); }
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

template <ExactField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <ExactField F>
RingPtr<F> makeRing(F field, std::vector<std::string> vars = {"X", "Y", "Z", "W"},
                    MonomialOrder order = {}) {
  return std::make_shared<const PolyRing<F>>(
      PolyRing<F>{std::move(field), std::move(vars), order});
}

/// Point of projective space, scaled so its first nonzero coordinate is 1.
template <ExactField F>
class ProjectivePoint {
 public:
  using Element = typename F::Element;

  ProjectivePoint(const F& field, std::vector<Element> coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(),
                           [](const Element& x) { return !F::isZero(x); });
    if (it == coords_.end()) throw std::invalid_argument("projective point with all coordinates zero");
    const Element inv = field.one() / *it;
    for (auto& c : coords_) c = c * inv;
  }

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<Element>& coordinates() const { return coords_; }
  const Element& operator[](std::size_t i) const { return coords_[i]; }

  std::string toString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
      s += (i ? ":" : "") + F::toString(coords_[i]);
    return s + ")";
  }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Element> coords_;
};

/// Sparse polynomial; terms kept sorted by the ring's order, largest first,
/// with no zero coefficients.
template <ExactField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(ring);
    if (!F::isZero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, Element c) {
    if (m.size() != ring->nvars()) throw std::invalid_argument("monomial length mismatch");
    Polynomial p(ring);
    if (!F::isZero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    return monomial(ring, Monomial::variable(ring->nvars(), i), ring->field.one());
  }
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial fromTerms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  const Monomial& leadingMonomial() const { return nonzero().terms_.front().monomial; }
  const Element& leadingCoefficient() const { return nonzero().terms_.front().coeff; }

  int totalDegree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  bool isHomogeneous() const {
    for (const auto& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return field().zero();
  }

  Polynomial monic() const {
    if (isZero()) return *this;
    return scaled(field().one() / leadingCoefficient());
  }

  Polynomial scaled(const Element& c) const {
    if (F::isZero(c)) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coeff * c});
    return out;
  }

  /// c * m * this; term order is preserved by multiplication with a monomial.
  Polynomial shifted(const Monomial& m, const Element& c) const {
    if (F::isZero(c)) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
    return out;
  }

  /// this - c * m * g, merged in one pass.
  Polynomial minusMultiple(const Element& c, const Monomial& m, const Polynomial& g) const {
    sameRing(g);
    const MonomialOrder& ord = ring_->order;
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].monomial * m;
      if (i == terms_.size() || ord.greater(gm, terms_[i].monomial)) {
        out.terms_.push_back({std::move(gm), -(c * g.terms_[j].coeff)});
        ++j;
      } else if (gm == terms_[i].monomial) {
        Element v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!F::isZero(v)) out.terms_.push_back({std::move(gm), v});
        ++i;
        ++j;
      } else {
        out.terms_.push_back(terms_[i++]);
      }
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.minusMultiple(-a.field().one(), Monomial(a.ring_->nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.minusMultiple(a.field().one(), Monomial(a.ring_->nvars()), b);
  }
  Polynomial operator-() const { return scaled(-field().one()); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.sameRing(b);
    std::vector<Term> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return fromTerms(a.ring_, std::move(acc));
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw std::out_of_range("no such variable");
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      const int e = t.monomial[var];
      if (e == 0) continue;
      std::vector<int> ex = t.monomial.exponents();
      --ex[var];
      acc.push_back({Monomial(std::move(ex)), t.coeff * field()(e)});
    }
    return fromTerms(ring_, std::move(acc));
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != ring_->nvars())
      throw std::invalid_argument("point dimension " + std::to_string(point.size()) +
                                  " does not match " + std::to_string(ring_->nvars()) +
                                  " variables");
    Element sum = field().zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int k = 0; k < t.monomial[i]; ++k) v = v * point[i];
      sum = sum + v;
    }
    return sum;
  }
  Element evaluate(const ProjectivePoint<F>& pt) const {
    return evaluate(std::span<const Element>(pt.coordinates()));
  }

  /// Macaulay2-style text, e.g. "7056*X^4-2016*X^2*Y^2+Y^2*W^2". Coefficients
  /// of F_p are printed in the symmetric range.
  std::string toString() const {
    if (isZero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      std::string c = F::toString(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (negative) s += "-";
      else if (k) s += "+";
      std::string mon;
      for (std::size_t i = 0; i < t.monomial.size(); ++i) {
        if (t.monomial[i] == 0) continue;
        if (!mon.empty()) mon += "*";
        mon += ring_->variables[i];
        if (t.monomial[i] > 1) mon += "^" + std::to_string(t.monomial[i]);
      }
      if (mon.empty()) s += c;
      else if (c == "1") s += mon;
      else s += c + "*" + mon;
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
  }

  void sameRing(const Polynomial& other) const {
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
      throw std::invalid_argument("polynomials belong to different rings");
  }

  /// Same terms re-sorted for another ring with the same field and variables.
  Polynomial inRing(RingPtr<F> target) const {
    if (target->field != ring_->field || target->variables != ring_->variables)
      throw std::invalid_argument("incompatible ring change");
    return fromTerms(std::move(target), terms_);
  }

 private:
  const Polynomial& nonzero() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *this;
  }

  void normalize() {
    std::map<std::vector<int>, Element> acc;
    for (auto& t : terms_) {
      if (t.monomial.size() != ring_->nvars())
        throw std::invalid_argument("monomial length mismatch");
      auto [it, inserted] = acc.try_emplace(t.monomial.exponents(), t.coeff);
      if (!inserted) it->second = it->second + t.coeff;
    }
    terms_.clear();
    for (auto& [e, c] : acc)
      if (!F::isZero(c)) terms_.push_back({Monomial(e), c});
    const MonomialOrder& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <ExactField F>
std::vector<Polynomial<F>> partialDerivatives(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

}  // namespace ulrich
