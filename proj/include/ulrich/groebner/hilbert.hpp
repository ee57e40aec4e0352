#pragma once

// Hilbert series of monomial ideals. For S = k[x_1..x_n] and a monomial
// ideal I the series of S/I is N(t) / (1-t)^n; the numerator N is computed by
// pivot splitting N(I) = N(I + <p>) + t^deg(p) N(I : p) with p a variable
// power, and codimension/degree are read off N = (1-t)^c Q with Q(1) != 0.

#include "ulrich/exactalg/scalar.hpp"
#include "ulrich/groebner/buchberger.hpp"
#include "ulrich/polyring/monomial.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ulrich {

using IntPoly = std::vector<Integer>;  // coefficient of t^k at index k

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly addPoly(const IntPoly& a, const IntPoly& b, std::size_t shiftB = 0, int signB = 1) {
  IntPoly out(std::max(a.size(), b.size() + shiftB));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shiftB] += signB * b[i];
  trim(out);
  return out;
}

inline IntPoly mulPoly(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree() ||
                                                             (a.degree() == b.degree() && a < b); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& q) { return q.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

inline IntPoly hilbertNumeratorRec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().size();

  // Base case: pairwise coprime generators form a regular sequence.
  bool coprimeAll = true;
  for (std::size_t a = 0; a < gens.size() && coprimeAll; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprimeAll; ++b)
      if (!coprime(gens[a], gens[b])) coprimeAll = false;
  if (coprimeAll) {
    IntPoly out{1};
    for (const auto& m : gens) {
      IntPoly factor(m.degree() + 1);
      factor[0] = 1;
      factor[m.degree()] -= 1;
      out = mulPoly(out, factor);
    }
    return out;
  }

  // Pivot variable: occurring in the most generators.
  std::size_t var = 0, bestCount = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& m : gens)
      if (m[v] > 0) ++count;
    if (count > bestCount) {
      bestCount = count;
      var = v;
    }
  }
  // Exponent: median over generators that use `var` but are not pure powers
  // of it, so x^e is outside I and I : x^e strictly contains I.
  std::vector<int> exps;
  for (const auto& m : gens)
    if (m[var] > 0 && m[var] != m.degree()) exps.push_back(m[var]);
  std::sort(exps.begin(), exps.end());
  const int e = exps[exps.size() / 2];
  const Monomial pivot = Monomial::variable(n, var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& m : gens) colon.push_back(m / gcd(m, pivot));

  return addPoly(hilbertNumeratorRec(std::move(plus)), hilbertNumeratorRec(std::move(colon)),
                 static_cast<std::size_t>(e));
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series of S/I, I generated by `gens`.
inline IntPoly hilbertNumerator(const std::vector<Monomial>& gens) {
  return detail::hilbertNumeratorRec(gens);
}

struct HilbertData {
  std::size_t codimension = 0;
  Integer degree = 0;
  IntPoly numerator;    // N(t)
  IntPoly reducedNumerator;  // Q(t) with N = (1-t)^codim Q
};

/// Codimension and degree from a Hilbert numerator in n variables.
inline HilbertData hilbertDataFromNumerator(IntPoly numerator, std::size_t nvars) {
  detail::trim(numerator);
  if (numerator.empty()) throw std::domain_error("unit ideal has no Hilbert polynomial");
  HilbertData out;
  out.numerator = numerator;
  IntPoly q = numerator;
  auto valueAtOne = [](const IntPoly& p) {
    Integer s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (valueAtOne(q) == 0) {
    // q = (1-t) r  =>  r_k = q_0 + ... + q_k
    IntPoly r(q.size() - 1);
    Integer run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      r[k] = run;
    }
    detail::trim(r);
    q = std::move(r);
    ++out.codimension;
  }
  if (out.codimension > nvars) throw std::logic_error("inconsistent Hilbert numerator");
  out.degree = valueAtOne(q);
  out.reducedNumerator = std::move(q);
  return out;
}

/// Codimension and degree of a homogeneous ideal from its Groebner basis,
/// following the projective convention (a reduced set of k points has
/// codimension n-1 and degree k).
template <ExactField F>
HilbertData hilbertDegreeCodim(const GroebnerBasis<F>& g) {
  std::vector<Monomial> lead;
  for (const auto& p : g.generators) {
    if (p.isZero()) continue;
    if (!p.isHomogeneous()) throw std::invalid_argument("Hilbert data requested for a non-homogeneous ideal");
    lead.push_back(p.leadingMonomial());
  }
  const std::size_t n = g.generators.front().ring()->nvars();
  return hilbertDataFromNumerator(hilbertNumerator(lead), n);
}

}  // namespace ulrich
