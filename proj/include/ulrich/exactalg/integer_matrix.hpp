#pragma once

// Integer matrices: Hermite normal form (row style), lattice membership,
// integer kernels, Bareiss determinants and exact signatures of symmetric
// forms.

#include "ulrich/exactalg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ulrich {

using IntegerVector = std::vector<Integer>;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw std::invalid_argument("ragged integer matrix");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntegerMatrix fromRows(const std::vector<IntegerVector>& rows) {
    if (rows.empty()) return {};
    IntegerMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged integer matrix");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerVector row(std::size_t r) const {
    return IntegerVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  /// row[dst] -= q * row[src]
  void subtractRow(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) -= q * (*this)(src, c);
  }
  void negateRow(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  IntegerMatrix transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool isSymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("dimension mismatch in difference");
    IntegerMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  std::string toString() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
      os << '\n';
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Parses whitespace-separated integers, one matrix row per non-empty line.
/// '#' starts a comment that runs to the end of the line.
inline IntegerMatrix parseIntegerMatrix(const std::string& text) {
  std::vector<IntegerVector> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line);
    IntegerVector row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + tok + "' in matrix text");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("ragged rows in matrix text");
    rows.push_back(std::move(row));
  }
  return IntegerMatrix::fromRows(rows);
}

namespace detail {
// Floor division for arbitrary-precision integers.
inline Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace detail

/// Row-style Hermite normal form H = U * A with U unimodular. Nonzero rows of
/// H come first, pivots strictly increase to the right, pivots are positive,
/// and entries above a pivot lie in [0, pivot).
struct HermiteForm {
  IntegerMatrix form;                // all rows of U*A, zero rows last
  IntegerMatrix transform;           // U
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row

  std::size_t rank() const { return pivots.size(); }

  /// Whether `target` lies in the integer row span, by back-substitution.
  bool contains(std::span<const Integer> target) const {
    if (target.size() != form.cols())
      throw std::invalid_argument("target dimension does not match generators");
    IntegerVector rest(target.begin(), target.end());
    std::size_t col = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::size_t pc = pivots[i];
      for (; col < pc; ++col)
        if (rest[col] != 0) return false;
      const Integer& p = form(i, pc);
      if (rest[pc] % p != 0) return false;
      const Integer q = rest[pc] / p;
      for (std::size_t c = pc; c < form.cols(); ++c) rest[c] -= q * form(i, c);
      col = pc + 1;
    }
    for (; col < rest.size(); ++col)
      if (rest[col] != 0) return false;
    return true;
  }
};

/// Pivot selection per column: among the not-yet-fixed rows, the one with the
/// smallest nonzero absolute value (lowest index on ties); Euclidean steps
/// until that column has a single nonzero entry.
inline HermiteForm hermiteForm(IntegerMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntegerMatrix u = IntegerMatrix::identity(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a(i, c) == 0) continue;
        if (best == m || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == m) break;
      a.swapRows(r, best);
      u.swapRows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        const Integer q = detail::floorDiv(a(i, c), a(r, c));
        a.subtractRow(i, r, q);
        u.subtractRow(i, r, q);
        if (a(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negateRow(r);
      u.negateRow(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = detail::floorDiv(a(i, c), a(r, c));
      a.subtractRow(i, r, q);
      u.subtractRow(i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(u), std::move(pivots)};
}

/// True iff target is an integer combination of the rows of `generators`.
inline bool hermiteMembership(const IntegerMatrix& generators,
                              std::span<const Integer> target) {
  if (generators.rows() == 0) throw std::invalid_argument("empty generator set");
  if (target.size() != generators.cols())
    throw std::invalid_argument("target dimension does not match generators");
  return hermiteForm(generators).contains(target);
}

/// Basis (as rows) of the left integer kernel {x in Z^m : x A = 0}. The rows
/// come from a unimodular transform, so the result spans a primitive
/// sublattice of Z^m.
inline IntegerMatrix leftIntegerKernel(const IntegerMatrix& a) {
  HermiteForm h = hermiteForm(a);
  const std::size_t m = a.rows();
  IntegerMatrix k(m - h.rank(), m);
  for (std::size_t i = h.rank(); i < m; ++i)
    for (std::size_t c = 0; c < m; ++c) k(i - h.rank(), c) = h.transform(i, c);
  // Canonicalize the kernel basis itself.
  IntegerMatrix canon = hermiteForm(k).form;
  return canon;
}

/// Rows of `basis` span a primitive sublattice iff they generate Z^k after
/// transposition, i.e. the HNF of the transpose is the identity on top.
inline bool isPrimitive(const IntegerMatrix& basis) {
  HermiteForm h = hermiteForm(basis.transposed());
  if (h.rank() != basis.rows()) return false;
  for (std::size_t i = 0; i < h.rank(); ++i)
    for (std::size_t c = 0; c < basis.rows(); ++c)
      if (h.form(i, c) != (i == c ? 1 : 0)) return false;
  return true;
}

/// Fraction-free Gaussian elimination.
inline Integer determinant(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swapRows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by congruence diagonalization over Q. A zero pivot with
/// a nonzero off-diagonal entry is fixed by replacing e_i with e_i + e_j (or
/// e_i - e_j when that vanishes too).
inline Signature signature(const IntegerMatrix& gram) {
  if (!gram.isSymmetric()) throw std::invalid_argument("signature needs a symmetric form");
  const std::size_t n = gram.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram(i, j));

  auto addTo = [&](std::size_t i, std::size_t j, const Rational& s) {
    // e_i <- e_i + s e_j applied as a congruence.
    for (std::size_t k = 0; k < n; ++k) a[i][k] += s * a[j][k];
    for (std::size_t k = 0; k < n; ++k) a[k][i] += s * a[k][j];
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[k][j] == 0) ++j;
      if (j == n) {
        ++sig.zero;
        continue;
      }
      addTo(k, j, Rational(1));
      if (a[k][k] == 0) addTo(k, j, Rational(-2));
    }
    const Rational pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      addTo(i, k, -a[i][k] / pivot);
    }
    (pivot > 0 ? sig.positive : sig.negative)++;
  }
  return sig;
}

}  // namespace ulrich
