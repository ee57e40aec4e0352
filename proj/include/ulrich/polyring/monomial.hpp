#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ulrich {

/// Exponent vector; length is fixed by the ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.exps_.at(i) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.exps_[i] = a.exps_[i] - b.exps_[i];
      if (r.exps_[i] < 0) throw std::logic_error("monomial quotient is not exact");
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.end(), 0);
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.end(), 0);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Plain lexicographic comparison of exponent vectors; used for containers and
  // tie-breaks, not as a term order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class OrderKind { GradedReverseLex, Lex };

/// Term order; variable precedence is the ring's variable order (first
/// variable largest).
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::GradedReverseLex) {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// All monomials of total degree d in n variables, largest first in grevlex.
inline std::vector<Monomial> monomialBasis(int d, std::size_t n) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (n == 0) return d == 0 ? std::vector<Monomial>{Monomial(0)} : std::vector<Monomial>{};
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  MonomialOrder grevlex;
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return grevlex.greater(a, b); });
  return out;
}

}  // namespace ulrich
