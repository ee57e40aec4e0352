#pragma once

// Rank-17 Picard Q-space of the Kummer surface over the basis
// (L, E0, E12, E13, ..., E56): hyperplane class L with L^2 = 4, sixteen
// disjoint (-2)-curves over the nodes, the sixteen tropes, the switch
// involution for the even theta characteristic [p4 + p5 - p6], and the
// numerical side of the Ulrich criterion.

#include "ulrich/exactalg/integer_matrix.hpp"
#include "ulrich/exactalg/scalar.hpp"
#include "ulrich/kummer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

inline constexpr std::size_t kPicardRank = 17;

class DivisorClass {
 public:
  DivisorClass() { coeffs_.fill(Rational(0)); }

  static DivisorClass L() {
    DivisorClass d;
    d.coeffs_[0] = 1;
    return d;
  }
  static DivisorClass E(const NodeLabel& label) {
    DivisorClass d;
    d.coeffs_[1 + label.index()] = 1;
    return d;
  }
  static DivisorClass basis(std::size_t k) {
    DivisorClass d;
    d.coeffs_.at(k) = 1;
    return d;
  }
  static DivisorClass sumOfNodes(const std::vector<NodeLabel>& labels) {
    DivisorClass d;
    for (const auto& l : labels) d += E(l);
    return d;
  }

  const Rational& coeffL() const { return coeffs_[0]; }
  const Rational& coeffE(const NodeLabel& label) const { return coeffs_[1 + label.index()]; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::array<Rational, kPicardRank>& coefficients() const { return coeffs_; }

  bool isZero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }
  /// All coefficients have denominator 1 or 2.
  bool hasHalfIntegralCoefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return denominator(c) == 1 || denominator(c) == 2; });
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    for (std::size_t k = 0; k < kPicardRank; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    for (std::size_t k = 0; k < kPicardRank; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass d) {
    for (auto& c : d.coeffs_) c *= s;
    return d;
  }
  DivisorClass operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// e.g. "3L - E0 - E16" or "2L - 1/2E0 - ...".
  std::string toString() const {
    std::string s;
    auto emit = [&](const Rational& c, const std::string& name) {
      if (c == 0) return;
      Rational a = abs(c);
      if (s.empty()) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      if (a != 1) s += a.str() + (denominator(a) == 1 ? "" : "*");
      s += name;
    };
    emit(coeffs_[0], "L");
    for (const auto& l : allNodeLabels()) emit(coeffE(l), l.name());
    return s.empty() ? "0" : s;
  }

 private:
  std::array<Rational, kPicardRank> coeffs_;
};

/// L^2 = 4, L.E = 0, E_a.E_b = -2 delta_ab.
inline Rational pairing(const DivisorClass& a, const DivisorClass& b) {
  Rational s = 4 * a[0] * b[0];
  for (std::size_t k = 1; k < kPicardRank; ++k) s -= 2 * a[k] * b[k];
  return s;
}

inline Rational selfIntersection(const DivisorClass& d) { return pairing(d, d); }

// ---------------------------------------------------------------------------
// Tropes

/// Odd theta characteristic [p_i] (i = 1..6) or even [p_i + p_j - p_6]
/// (1 <= i < j <= 5), written T_i and T_ij6.
class TropeLabel {
 public:
  static TropeLabel odd(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("invalid trope T" + std::to_string(i));
    return TropeLabel(i, 0);
  }
  /// T_ijk for distinct i, j, k in 1..6; T_ijk = T_lmn for complementary
  /// triples, so this normalizes to the triple containing 6.
  static TropeLabel even(int i, int j, int k) {
    std::array<int, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > 6 || t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("invalid trope triple");
    if (t[2] != 6) {
      std::array<int, 3> c{};
      std::size_t n = 0;
      for (int a = 1; a <= 6; ++a)
        if (a != t[0] && a != t[1] && a != t[2]) c[n++] = a;
      t = c;
    }
    return TropeLabel(t[0], t[1]);
  }
  static TropeLabel parse(std::string s) {
    if (!s.empty() && (s[0] == 'T' || s[0] == 't')) s.erase(0, 1);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("invalid trope label");
    if (s.size() == 1) return odd(s[0] - '0');
    if (s.size() == 3) return even(s[0] - '0', s[1] - '0', s[2] - '0');
    throw std::invalid_argument("invalid trope label 'T" + s + "'");
  }

  bool isOdd() const { return j_ == 0; }
  int first() const { return i_; }
  int second() const { return j_; }

  std::string name() const {
    return isOdd() ? "T" + std::to_string(i_) : "T" + std::to_string(i_) + std::to_string(j_) + "6";
  }

  friend bool operator==(const TropeLabel&, const TropeLabel&) = default;

 private:
  TropeLabel(int i, int j) : i_(i), j_(j) {}
  int i_;
  int j_;
};

/// T1..T6 followed by T126, T136, ..., T456.
inline std::vector<TropeLabel> allTropeLabels() {
  std::vector<TropeLabel> out;
  for (int i = 1; i <= 6; ++i) out.push_back(TropeLabel::odd(i));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) out.push_back(TropeLabel::even(i, j, 6));
  return out;
}

/// The six nodes on a trope.
inline std::vector<NodeLabel> tropeNodes(const TropeLabel& t) {
  if (t.isOdd()) {
    std::vector<NodeLabel> out{NodeLabel::zero()};
    for (int k = 1; k <= 6; ++k)
      if (k != t.first()) out.push_back(NodeLabel::pair(t.first(), k));
    return out;
  }
  const int i = t.first(), j = t.second();
  std::vector<int> rest;
  for (int a = 1; a <= 5; ++a)
    if (a != i && a != j) rest.push_back(a);
  const int l = rest[0], m = rest[1], n = rest[2];
  return {NodeLabel::pair(i, 6), NodeLabel::pair(j, 6), NodeLabel::pair(i, j),
          NodeLabel::pair(l, m), NodeLabel::pair(m, n), NodeLabel::pair(l, n)};
}

/// T = 1/2 (L - sum of its six nodes).
inline DivisorClass trope(const TropeLabel& t) {
  return Rational(1, 2) * (DivisorClass::L() - DivisorClass::sumOfNodes(tropeNodes(t)));
}

// ---------------------------------------------------------------------------
// Distinguished classes

/// H_X = 2L - 1/2 sum of all sixteen nodes.
inline DivisorClass polarizationClass() {
  std::vector<NodeLabel> all(allNodeLabels().begin(), allNodeLabels().end());
  return Rational(2) * DivisorClass::L() - Rational(1, 2) * DivisorClass::sumOfNodes(all);
}

/// The twelve nodes subtracted from 3L in the reference Ulrich class.
inline std::vector<NodeLabel> referenceUlrichNodes() {
  std::vector<NodeLabel> out;
  for (const char* s : {"E0", "E16", "E26", "E36", "E46", "E56", "E12", "E13", "E14", "E15", "E24", "E35"})
    out.push_back(NodeLabel::parse(s));
  return out;
}

/// 3L minus the given nodes.
inline DivisorClass threeLMinusNodes(const std::vector<NodeLabel>& nodes) {
  return Rational(3) * DivisorClass::L() - DivisorClass::sumOfNodes(nodes);
}

/// 2L - 1/2 sum of eight nodes.
inline DivisorClass twoLMinusHalfEight(const std::vector<NodeLabel>& nodes) {
  return Rational(2) * DivisorClass::L() - Rational(1, 2) * DivisorClass::sumOfNodes(nodes);
}

// ---------------------------------------------------------------------------
// Involution

class Involution {
 public:
  /// images[k] is the image of basis vector k.
  explicit Involution(std::array<DivisorClass, kPicardRank> images) : images_(std::move(images)) {}

  DivisorClass apply(const DivisorClass& d) const {
    DivisorClass out;
    for (std::size_t k = 0; k < kPicardRank; ++k)
      if (d[k] != 0) out += d[k] * images_[k];
    return out;
  }
  const DivisorClass& image(std::size_t k) const { return images_.at(k); }

  /// Matrix whose column k holds the coordinates of the image of basis k.
  std::array<std::array<Rational, kPicardRank>, kPicardRank> matrix() const {
    std::array<std::array<Rational, kPicardRank>, kPicardRank> m;
    for (std::size_t r = 0; r < kPicardRank; ++r)
      for (std::size_t c = 0; c < kPicardRank; ++c) m[r][c] = images_[c][r];
    return m;
  }

  bool squaresToIdentity() const {
    for (std::size_t k = 0; k < kPicardRank; ++k)
      if (apply(images_[k]) != DivisorClass::basis(k)) return false;
    return true;
  }
  /// Number of basis pairs (a <= b) whose pairing is preserved; 153 when an isometry.
  std::size_t preservedPairs() const {
    std::size_t n = 0;
    for (std::size_t a = 0; a < kPicardRank; ++a)
      for (std::size_t b = a; b < kPicardRank; ++b)
        if (pairing(images_[a], images_[b]) == pairing(DivisorClass::basis(a), DivisorClass::basis(b))) ++n;
    return n;
  }
  bool isIsometry() const { return preservedPairs() == kPicardRank * (kPicardRank + 1) / 2; }

 private:
  std::array<DivisorClass, kPicardRank> images_;
};

struct SwapRow {
  NodeLabel node;
  TropeLabel trope;
};

/// Node <-> trope exchange of the switch attached to [p4 + p5 - p6].
inline std::vector<SwapRow> thetaSwapTable() {
  auto row = [](const char* n, const char* t) { return SwapRow{NodeLabel::parse(n), TropeLabel::parse(t)}; };
  return {row("E0", "T456"),  row("E12", "T3"),   row("E13", "T2"),   row("E14", "T156"),
          row("E15", "T146"), row("E16", "T236"), row("E23", "T1"),   row("E24", "T256"),
          row("E25", "T246"), row("E26", "T136"), row("E34", "T356"), row("E35", "T346"),
          row("E36", "T126"), row("E45", "T6"),   row("E46", "T5"),   row("E56", "T4")};
}

/// theta*(E_a) = paired trope, theta*(L) = 3L - sum of all nodes.
inline Involution buildThetaStar() {
  std::array<DivisorClass, kPicardRank> images;
  std::vector<NodeLabel> all(allNodeLabels().begin(), allNodeLabels().end());
  images[0] = Rational(3) * DivisorClass::L() - DivisorClass::sumOfNodes(all);
  for (const auto& r : thetaSwapTable()) images[1 + r.node.index()] = trope(r.trope);
  return Involution(images);
}

inline bool isInvariant(const Involution& inv, const DivisorClass& d) { return inv.apply(d) == d; }

// ---------------------------------------------------------------------------
// Riemann-Roch and the numerical Ulrich conditions

/// chi(O(D)) = 2 + D^2 / 2 on a K3 surface.
inline Rational chiK3(const DivisorClass& d) { return Rational(2) + selfIntersection(d) / 2; }

struct PolarizedSurfaceParams {
  long s = 4;  // H^2 = 2s
  PolarizedSurfaceParams() = default;
  explicit PolarizedSurfaceParams(long sv) : s(sv) {
    if (s < 1) throw std::invalid_argument("polarization parameter s must be positive");
  }
};

/// H.M = 3s and M^2 = 4s - 4.
inline bool numericalUlrich(const PolarizedSurfaceParams& p, const DivisorClass& h, const DivisorClass& m) {
  if (selfIntersection(h) != Rational(2 * p.s))
    throw std::invalid_argument("polarization has H^2 = " + selfIntersection(h).str() + ", expected " +
                                std::to_string(2 * p.s));
  return pairing(h, m) == Rational(3 * p.s) && selfIntersection(m) == Rational(4 * p.s - 4);
}

// ---------------------------------------------------------------------------
// Even eights

/// Default working subgroup for divisibility questions: L, the sixteen nodes
/// and the sixteen tropes.
inline std::vector<DivisorClass> defaultPicGenerators() {
  std::vector<DivisorClass> g{DivisorClass::L()};
  for (const auto& l : allNodeLabels()) g.push_back(DivisorClass::E(l));
  for (const auto& t : allTropeLabels()) g.push_back(trope(t));
  return g;
}

inline std::vector<DivisorClass> nodeOnlyGenerators() {
  std::vector<DivisorClass> g;
  for (const auto& l : allNodeLabels()) g.push_back(DivisorClass::E(l));
  return g;
}

/// Integer coordinates of 2d; requires denominators dividing 2.
inline IntegerVector doubledCoordinates(const DivisorClass& d) {
  if (!d.hasHalfIntegralCoefficients())
    throw std::invalid_argument("class " + d.toString() + " is not half-integral");
  IntegerVector v;
  for (const auto& c : d.coefficients()) v.push_back(numerator(Rational(2) * c));
  return v;
}

/// Span of a generator set, preprocessed for repeated membership queries.
class DivisorLattice {
 public:
  explicit DivisorLattice(const std::vector<DivisorClass>& generators) {
    if (generators.empty()) throw std::invalid_argument("empty generator list");
    std::vector<IntegerVector> rows;
    for (const auto& g : generators) rows.push_back(doubledCoordinates(g));
    hnf_ = hermiteForm(IntegerMatrix::fromRows(rows));
  }
  bool contains(const DivisorClass& d) const {
    if (!d.hasHalfIntegralCoefficients()) return false;
    IntegerVector t = doubledCoordinates(d);
    return hnf_.contains(t);
  }
  const HermiteForm& hermite() const { return hnf_; }

 private:
  HermiteForm hnf_;
};

inline void checkEightDistinct(const std::vector<NodeLabel>& labels) {
  std::set<std::size_t> idx;
  for (const auto& l : labels) idx.insert(l.index());
  if (labels.size() != 8 || idx.size() != 8)
    throw std::invalid_argument("an even eight needs exactly 8 distinct nodes, got " +
                                std::to_string(labels.size()));
}

/// Whether 1/2 sum of the eight nodes lies in the span of `lattice`.
inline bool evenEightTest(const std::vector<NodeLabel>& labels, const DivisorLattice& lattice) {
  checkEightDistinct(labels);
  return lattice.contains(Rational(1, 2) * DivisorClass::sumOfNodes(labels));
}

inline bool evenEightTest(const std::vector<NodeLabel>& labels, const std::vector<DivisorClass>& generators) {
  checkEightDistinct(labels);
  return evenEightTest(labels, DivisorLattice(generators));
}

/// If d = 1/2 (sum of eight distinct nodes), those nodes.
inline std::optional<std::vector<NodeLabel>> halfEightShape(const DivisorClass& d) {
  if (d.coeffL() != 0) return std::nullopt;
  std::vector<NodeLabel> out;
  for (const auto& l : allNodeLabels()) {
    const Rational& c = d.coeffE(l);
    if (c == Rational(1, 2)) out.push_back(l);
    else if (c != 0) return std::nullopt;
  }
  if (out.size() != 8) return std::nullopt;
  return out;
}

inline std::vector<NodeLabel> complementNodes(const std::vector<NodeLabel>& labels) {
  std::vector<NodeLabel> out;
  for (const auto& l : allNodeLabels())
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) out.push_back(l);
  return out;
}

struct EvenEightSweep {
  std::size_t subsetsTested = 0;
  std::vector<std::vector<NodeLabel>> evenEights;
  bool closedUnderComplement = false;
};

/// All C(16, 8) subsets of nodes.
inline EvenEightSweep sweepEvenEights(const DivisorLattice& lattice) {
  EvenEightSweep out;
  std::set<unsigned> positive;
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    if (__builtin_popcount(mask) != 8) continue;
    std::vector<NodeLabel> labels;
    for (std::size_t k = 0; k < 16; ++k)
      if (mask & (1u << k)) labels.push_back(allNodeLabels()[k]);
    ++out.subsetsTested;
    if (evenEightTest(labels, lattice)) {
      positive.insert(mask);
      out.evenEights.push_back(std::move(labels));
    }
  }
  out.closedUnderComplement = std::all_of(positive.begin(), positive.end(),
                                          [&](unsigned m) { return positive.count(~m & 0xFFFFu) > 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Node/trope incidence

struct IncidenceTable {
  std::array<std::array<Rational, 16>, 16> entries;  // [node][trope]
  std::vector<TropeLabel> tropes;

  /// Every row and column has six entries 1 and ten entries 0.
  bool isSixteenSixConfiguration() const {
    for (std::size_t a = 0; a < 16; ++a) {
      int rowOnes = 0, colOnes = 0;
      for (std::size_t b = 0; b < 16; ++b) {
        if (entries[a][b] != 0 && entries[a][b] != 1) return false;
        rowOnes += entries[a][b] == 1;
        colOnes += entries[b][a] == 1;
      }
      if (rowOnes != 6 || colOnes != 6) return false;
    }
    return true;
  }
};

inline IncidenceTable incidenceConfiguration() {
  IncidenceTable t;
  t.tropes = allTropeLabels();
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b)
      t.entries[a][b] = pairing(DivisorClass::E(allNodeLabels()[a]), trope(t.tropes[b]));
  return t;
}

// ---------------------------------------------------------------------------
// Expression syntax

class DivisorParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear combinations over L, E0, E12..E56, T1..T6 and three-index tropes
/// with rational coefficients, e.g. "3L - E0 - 1/2*E12 + 2 T456". Tropes are
/// expanded into the standard basis.
inline DivisorClass parseDivisorClass(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DivisorParseError("empty divisor expression");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> DivisorParseError {
    return DivisorParseError("divisor expression: " + why + " at offset " + std::to_string(pos));
  };
  auto readInt = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw fail("expected a number");
    return Integer(s.substr(start, pos - start));
  };

  DivisorClass total;
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw fail("expected '+' or '-'");
    }
    Rational coeff(1);
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = Rational(readInt());
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        Integer den = readInt();
        if (den == 0) throw fail("zero denominator");
        coeff /= Rational(den);
      }
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size()) throw fail("missing class symbol");
    const char kind = s[pos];
    std::size_t start = pos++;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const std::string token = s.substr(start, pos - start);
    DivisorClass term;
    try {
      if (kind == 'L' && token == "L") term = DivisorClass::L();
      else if (kind == 'E') term = DivisorClass::E(NodeLabel::parse(token));
      else if (kind == 'T') term = trope(TropeLabel::parse(token));
      else throw fail("unknown symbol '" + token + "'");
    } catch (const DivisorParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    total += (sign * coeff) * term;
  }
  return total;
}

}  // namespace ulrich
