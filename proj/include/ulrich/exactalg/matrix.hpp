#pragma once

#include "ulrich/exactalg/scalar.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ulrich {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::vector<Element> apply(std::span<const Element> v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (F::isZero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <ExactField F>
struct EchelonForm {
  Matrix<F> reduced;                // reduced row echelon form, leading entries 1
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
  std::size_t rank() const { return pivots.size(); }
};

template <ExactField F>
EchelonForm<F> rowReduce(Matrix<F> m) {
  const F& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && F::isZero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swapRows(r, piv);
    const auto inv = field.one() / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || F::isZero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = m(i, k) - factor * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return rowReduce(m).rank();
}

/// Basis of the right null space {v : m v = 0}. One vector per free column in
/// ascending order, with that free coordinate set to 1 and the other free
/// coordinates 0.
template <ExactField F>
std::vector<std::vector<typename F::Element>> kernelBasis(const Matrix<F>& m) {
  const F& field = m.field();
  auto ech = rowReduce(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto c : ech.pivots) isPivot[c] = true;

  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ulrich
