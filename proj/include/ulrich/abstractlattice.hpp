#pragma once

// The K3 lattice U+U+U+E8(-1)+E8(-1) with the Enriques involution
//   v_i -> -v_i,  v_i' <-> v_i'',  e_i' <-> e_i''
// and its invariant sublattice, which should be U(2) + E8(-2).

#include "ulrich/exactalg/integer_matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ulrich {

struct LatticeGram {
  IntegerMatrix gram;
  std::vector<std::string> labels;

  LatticeGram() = default;
  LatticeGram(IntegerMatrix g, std::vector<std::string> names) : gram(std::move(g)), labels(std::move(names)) {
    if (gram.rows() != gram.cols() || !gram.isSymmetric())
      throw std::invalid_argument("Gram matrix must be square and symmetric");
    if (labels.size() != gram.rows()) throw std::invalid_argument("one label per basis vector required");
  }

  std::size_t rank() const { return gram.rows(); }
  Integer determinant() const { return ulrich::determinant(gram); }
  Signature signature() const { return ulrich::signature(gram); }
  bool isEven() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }
  bool allEntriesEven() const {
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (gram(i, j) % 2 != 0) return false;
    return true;
  }
  /// Integer pairing of coordinate vectors.
  Integer pair(const IntegerVector& a, const IntegerVector& b) const {
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram(i, j) * b[j];
    return s;
  }
};

inline std::vector<std::string> suffixed(const std::vector<std::string>& names, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + suffix);
  return out;
}

/// Hyperbolic plane [[0,1],[1,0]].
inline LatticeGram hyperbolicPlane(std::vector<std::string> names = {"v1", "v2"}) {
  return LatticeGram(IntegerMatrix{{0, 1}, {1, 0}}, std::move(names));
}

/// Negative of the E8 Cartan matrix, Bourbaki numbering (node 2 attached to 4,
/// chain 1-3-4-5-6-7-8).
inline IntegerMatrix e8NegativeGram() {
  IntegerMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = 1;
    g(b - 1, a - 1) = 1;
  }
  return g;
}

inline LatticeGram e8Negative(std::vector<std::string> names = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"}) {
  return LatticeGram(e8NegativeGram(), std::move(names));
}

/// Same basis, form multiplied by k.
inline LatticeGram scaled(const LatticeGram& l, long k) {
  IntegerMatrix g = l.gram;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= k;
  return LatticeGram(std::move(g), l.labels);
}

inline LatticeGram directSum(const std::vector<LatticeGram>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntegerMatrix g(n, n);
  std::vector<std::string> labels;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram(i, j);
    labels.insert(labels.end(), p.labels.begin(), p.labels.end());
    off += p.rank();
  }
  return LatticeGram(std::move(g), std::move(labels));
}

/// Basis order v1 v2 v1' v2' v1'' v2'' e1'..e8' e1''..e8''.
inline LatticeGram k3Lattice(const LatticeGram& u = hyperbolicPlane(), const LatticeGram& e8 = e8Negative()) {
  if (u.rank() != 2 || e8.rank() != 8) throw std::invalid_argument("expected rank-2 U and rank-8 E8 blocks");
  LatticeGram u0(u.gram, {"v1", "v2"});
  LatticeGram u1(u.gram, {"v1'", "v2'"});
  LatticeGram u2(u.gram, {"v1''", "v2''"});
  std::vector<std::string> e = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"};
  return directSum({u0, u1, u2, LatticeGram(e8.gram, suffixed(e, "'")), LatticeGram(e8.gram, suffixed(e, "''"))});
}

/// Square integer matrix; row k is the image of basis vector k.
struct LatticeInvolution {
  IntegerMatrix matrix;

  IntegerVector apply(const IntegerVector& x) const {
    IntegerVector out(matrix.cols());
    for (std::size_t k = 0; k < matrix.rows(); ++k)
      for (std::size_t c = 0; c < matrix.cols(); ++c) out[c] += x[k] * matrix(k, c);
    return out;
  }
  bool squaresToIdentity() const { return matrix * matrix == IntegerMatrix::identity(matrix.rows()); }
  /// A G A^T = G.
  bool preserves(const LatticeGram& l) const { return matrix * l.gram * matrix.transposed() == l.gram; }
};

inline LatticeInvolution buildVartheta() {
  IntegerMatrix m(22, 22);
  m(0, 0) = -1;
  m(1, 1) = -1;
  for (std::size_t i = 0; i < 2; ++i) {
    m(2 + i, 4 + i) = 1;
    m(4 + i, 2 + i) = 1;
  }
  for (std::size_t i = 0; i < 8; ++i) {
    m(6 + i, 14 + i) = 1;
    m(14 + i, 6 + i) = 1;
  }
  return {std::move(m)};
}

struct InvariantSublattice {
  LatticeGram lattice;   // restricted form
  IntegerMatrix basis;   // rows, in coordinates of the ambient lattice
};

/// Integral basis of ker(inv - id), primitive in the ambient lattice, with
/// the restricted Gram matrix B G B^T.
inline InvariantSublattice invariantSublattice(const LatticeGram& lat, const LatticeInvolution& inv) {
  if (!inv.squaresToIdentity() || !inv.preserves(lat))
    throw std::invalid_argument("not an isometric involution of this lattice");
  IntegerMatrix b = leftIntegerKernel(inv.matrix - IntegerMatrix::identity(lat.rank()));
  IntegerMatrix restricted = b * lat.gram * b.transposed();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < b.rows(); ++i) names.push_back("f" + std::to_string(i + 1));
  return {LatticeGram(std::move(restricted), std::move(names)), std::move(b)};
}

/// v_i' + v_i'' and e_j' + e_j'': by construction a basis of the invariants
/// whose Gram matrix is U(2) + E8(-2).
inline IntegerMatrix explicitInvariantBasis() {
  IntegerMatrix b(10, 22);
  for (std::size_t i = 0; i < 2; ++i) {
    b(i, 2 + i) = 1;
    b(i, 4 + i) = 1;
  }
  for (std::size_t j = 0; j < 8; ++j) {
    b(2 + j, 6 + j) = 1;
    b(2 + j, 14 + j) = 1;
  }
  return b;
}

/// U(2) + E8(-2).
inline LatticeGram invariantModel() {
  return directSum({scaled(hyperbolicPlane({"u1", "u2"}), 2), scaled(e8Negative(), 2)});
}

/// Same row lattice: equal Hermite normal forms.
inline bool sameRowLattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const HermiteForm ha = hermiteForm(a), hb = hermiteForm(b);
  if (ha.rank() != hb.rank()) return false;
  for (std::size_t r = 0; r < ha.rank(); ++r)
    if (ha.form.row(r) != hb.form.row(r)) return false;
  return true;
}

}  // namespace ulrich
