#pragma once

// Buchberger's algorithm over an exact field: normal selection strategy with
// the product and chain criteria, followed by full inter-reduction.

#include "ulrich/polyring/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ulrich {

template <ExactField F>
struct GroebnerBasis {
  std::vector<Polynomial<F>> generators;  // ascending by leading monomial
  MonomialOrder order;
  bool reduced = false;

  const RingPtr<F>& ring() const { return generators.front().ring(); }
};

struct BuchbergerStats {
  std::size_t pairsConsidered = 0;
  std::size_t productCriterion = 0;
  std::size_t chainCriterion = 0;
  std::size_t zeroReductions = 0;
};

/// Full multivariate division remainder: no term of the result is divisible
/// by a leading monomial of `divisors`.
template <ExactField F>
Polynomial<F> normalForm(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors) {
  for (const auto& g : divisors) {
    f.sameRing(g);
    if (g.isZero()) throw std::invalid_argument("zero divisor polynomial in normal form");
  }
  Polynomial<F> rest = f;
  std::vector<typename Polynomial<F>::Term> remainder;
  while (!rest.isZero()) {
    const auto& lt = rest.terms().front();
    const Polynomial<F>* hit = nullptr;
    for (const auto& g : divisors)
      if (g.leadingMonomial().divides(lt.monomial)) {
        hit = &g;
        break;
      }
    if (hit) {
      const auto c = lt.coeff / hit->leadingCoefficient();
      rest = rest.minusMultiple(c, lt.monomial / hit->leadingMonomial(), *hit);
    } else {
      remainder.push_back(lt);
      rest = rest.minusMultiple(rest.field().one(), Monomial(lt.monomial.size()),
                                Polynomial<F>::monomial(rest.ring(), lt.monomial, lt.coeff));
    }
  }
  // Collected in descending order already.
  return Polynomial<F>::fromTerms(f.ring(), std::move(remainder));
}

template <ExactField F>
Polynomial<F> normalForm(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  if (!g.generators.empty() && !(g.order == f.ring()->order))
    throw std::invalid_argument("polynomial and basis use different term orders");
  return normalForm(f, std::span<const Polynomial<F>>(g.generators));
}

template <ExactField F>
Polynomial<F> sPolynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial());
  auto a = f.shifted(l / f.leadingMonomial(), f.field().one() / f.leadingCoefficient());
  return a.minusMultiple(g.field().one() / g.leadingCoefficient(), l / g.leadingMonomial(), g);
}

namespace detail {

template <ExactField F>
std::vector<Polynomial<F>> interreduce(std::vector<Polynomial<F>> g) {
  const MonomialOrder& ord = g.front().ring()->order;
  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::sort(g.begin(), g.end(), [&](const auto& a, const auto& b) {
    return ord.greater(b.leadingMonomial(), a.leadingMonomial());
  });
  std::vector<Polynomial<F>> minimal;
  for (auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.leadingMonomial().divides(p.leadingMonomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading term is untouched since no other leading monomial divides it.
    const auto& lt = minimal[i].terms().front();
    auto tail = minimal[i] - Polynomial<F>::monomial(minimal[i].ring(), lt.monomial, lt.coeff);
    auto reducedTail = normalForm(tail, std::span<const Polynomial<F>>(others));
    out.push_back((reducedTail + Polynomial<F>::monomial(minimal[i].ring(), lt.monomial, lt.coeff)).monic());
  }
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` for the ring's
/// term order. Pairs are selected by smallest lcm degree, ties broken by
/// lexicographic comparison of the lcm exponent vector and then by indices.
template <ExactField F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, BuchbergerStats* stats = nullptr) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const RingPtr<F> ring = gens.front().ring();
  for (const auto& g : gens) g.sameRing(gens.front());

  std::vector<Polynomial<F>> basis;
  for (const auto& g : gens)
    if (!g.isZero()) basis.push_back(g.monic());
  if (basis.empty()) return {{Polynomial<F>(ring)}, ring->order, true};

  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  struct Pair {
    int degree;
    Monomial lcm;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (lcm != o.lcm) return lcm < o.lcm;
      return std::pair(i, j) < std::pair(o.i, o.j);
    }
  };
  std::set<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pendingIndex;

  auto addPairsFor = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(basis[i].leadingMonomial(), basis[k].leadingMonomial());
      pending.insert({l.degree(), l, i, k});
      pendingIndex.insert({i, k});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) addPairsFor(k);

  auto isPending = [&](std::size_t a, std::size_t b) {
    return pendingIndex.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    const Pair pair = *pending.begin();
    pending.erase(pending.begin());
    pendingIndex.erase({pair.i, pair.j});
    ++st.pairsConsidered;

    const Monomial& li = basis[pair.i].leadingMonomial();
    const Monomial& lj = basis[pair.j].leadingMonomial();
    if (coprime(li, lj)) {
      ++st.productCriterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leadingMonomial().divides(pair.lcm) && !isPending(pair.i, k) &&
          !isPending(pair.j, k))
        chain = true;
    }
    if (chain) {
      ++st.chainCriterion;
      continue;
    }
    auto h = normalForm(sPolynomial(basis[pair.i], basis[pair.j]),
                        std::span<const Polynomial<F>>(basis));
    if (h.isZero()) {
      ++st.zeroReductions;
      continue;
    }
    basis.push_back(h.monic());
    addPairsFor(basis.size() - 1);
  }
  return {detail::interreduce(std::move(basis)), ring->order, true};
}

template <ExactField F>
bool idealMembership(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gens) {
  return normalForm(f, buchberger(gens)).isZero();
}

/// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
template <ExactField F>
bool satisfiesBuchbergerCriterion(const GroebnerBasis<F>& g) {
  const auto& gs = g.generators;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!normalForm(sPolynomial(gs[i], gs[j]), std::span<const Polynomial<F>>(gs)).isZero())
        return false;
  return true;
}

template <ExactField F>
bool isReducedBasis(const GroebnerBasis<F>& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    const auto& p = g.generators[i];
    if (!(p.leadingCoefficient() == p.field().one())) return false;
    for (std::size_t j = 0; j < g.generators.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : p.terms())
        if (g.generators[j].leadingMonomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace ulrich
