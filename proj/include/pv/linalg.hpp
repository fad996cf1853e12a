#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pv/errors.hpp"
#include "pv/ratfunc.hpp"

namespace pv {

// Dense row-major matrix over a commutative ring T. Routines that divide
// (rref, inverse, kernel) require T to be a field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  explicit Matrix(std::vector<std::vector<T>> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows[0].size();
    a_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::ParseError, "ragged matrix rows");
      for (auto& x : r) a_.push_back(std::move(x));
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return a_; }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(a_[0]));
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::PreconditionFailed, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_, a.zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_value(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  T trace() const {
    T s = zero_like();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  Matrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    Matrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        r(ri, rj++) = (*this)(i, j);
      }
      ++ri;
    }
    return r;
  }

  // Cofactor expansion; valid over any commutative ring.
  T determinant_expansion() const {
    require_square();
    if (rows_ == 0) return one_like();
    if (rows_ == 1) return a_[0];
    if (rows_ == 2) return a_[0] * a_[3] - a_[1] * a_[2];
    T s = zero_like();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_zero_value((*this)(0, j))) continue;
      T term = (*this)(0, j) * minor_matrix(0, j).determinant_expansion();
      if (j % 2 == 0) s += term;
      else s -= term;
    }
    return s;
  }

  Matrix adjugate() const {
    require_square();
    Matrix r(rows_, cols_, zero_like());
    if (rows_ == 1) {
      r(0, 0) = one_like();
      return r;
    }
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        T c = minor_matrix(i, j).determinant_expansion();
        r(j, i) = (i + j) % 2 == 0 ? c : -c;
      }
    return r;
  }

  // Field-only operations.

  // Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && is_zero_value((*this)(p, col))) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      const T inv = one_like() / (*this)(row, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || is_zero_value((*this)(i, col))) continue;
        const T f = (*this)(i, col);
        for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  T determinant() const {
    require_square();
    Matrix m = *this;
    T det = one_like();
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t p = col;
      while (p < rows_ && is_zero_value(m(p, col))) ++p;
      if (p == rows_) return zero_like();
      if (p != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(col, j));
        det = -det;
      }
      det = det * m(col, col);
      const T inv = one_like() / m(col, col);
      for (std::size_t i = col + 1; i < rows_; ++i) {
        if (is_zero_value(m(i, col))) continue;
        const T f = m(i, col) * inv;
        for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return det;
  }

  std::optional<Matrix> inverse() const {
    require_square();
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n, zero_like());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = one_like();
    }
    auto piv = aug.rref_in_place();
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    Matrix r(n, n, zero_like());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
  }

  // Basis of {v : M v = 0}, one vector per free column, carrying 1 there
  // and 0 at the other free columns.
  std::vector<std::vector<T>> kernel() const {
    Matrix m = *this;
    auto piv = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(cols_, zero_like());
      v[f] = one_like();
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  T zero_like() const {
    if constexpr (requires { T::zero_like(std::declval<const T&>()); }) return a_.empty() ? T() : T::zero_like(a_[0]);
    else return T(0);
  }
  T one_like() const {
    if constexpr (requires { T::one_like(std::declval<const T&>()); }) return a_.empty() ? T() : T::one_like(a_[0]);
    else return T(1);
  }

 private:
  static bool is_zero_value(const T& x) { return x.is_zero(); }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::PreconditionFailed, "matrix shape mismatch");
  }
  void require_square() const {
    if (!is_square()) throw Error(ErrorKind::PreconditionFailed, "square matrix required");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

// Kronecker product a (x) b.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero_like());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

// Incrementally maintained reduced echelon form of a homogeneous linear
// system over k with sparse rows. Used for the large structured systems of
// the bounded searches.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Scalar>;

  explicit SparseEchelon(std::size_t unknowns) : n_(unknowns) {}

  std::size_t unknowns() const noexcept { return n_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  // Returns true if the equation was independent of the previous ones.
  bool add(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const std::size_t p = row.begin()->first;
    const Scalar inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    // Keep the stored rows fully reduced against the new pivot.
    for (auto& [q, r] : pivots_) {
      auto it = r.find(p);
      if (it == r.end()) continue;
      const Scalar f = it->second;
      axpy(r, row, -f);
    }
    pivots_.emplace(p, std::move(row));
    return true;
  }

  void reduce(Row& row) const {
    for (auto it = row.begin(); it != row.end();) {
      auto pv = pivots_.find(it->first);
      if (pv == pivots_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Scalar f = it->second;
      axpy(row, pv->second, -f);
      it = row.upper_bound(col);
    }
  }

  std::vector<std::vector<Scalar>> kernel() const {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n_; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<Scalar> v(n_, Scalar(0));
      v[f] = Scalar(1);
      for (const auto& [p, r] : pivots_) {
        auto it = r.find(f);
        if (it != r.end()) v[p] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static void axpy(Row& dst, const Row& src, const Scalar& f) {
    for (const auto& [c, v] : src) {
      auto [it, inserted] = dst.try_emplace(c, v * f);
      if (!inserted) {
        it->second += v * f;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  }

  std::size_t n_;
  std::map<std::size_t, Row> pivots_;
};

}  // namespace pv
