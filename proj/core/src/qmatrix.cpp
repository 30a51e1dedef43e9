#include "rumin/qmatrix.hpp"

#include <algorithm>

#include "rumin/errors.hpp"

namespace rumin {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<int> QMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int r = row; r < rows_; ++r) {
      if (!a_[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a_[sel], a_[row]);
    Rational inv = Rational(1) / a_[row][col];
    for (int c = col; c < cols_; ++c) a_[row][c] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || a_[r][col].is_zero()) continue;
      Rational f = a_[r][col];
      for (int c = col; c < cols_; ++c) a_[r][c] -= f * a_[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int QMatrix::rank() const {
  QMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_) throw PreconditionError("determinant of non-square matrix");
  QMatrix m = *this;
  Rational det(1);
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.a_[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) return Rational(0);
    if (sel != col) {
      std::swap(m.a_[sel], m.a_[col]);
      det = -det;
    }
    det *= m.a_[col][col];
    Rational inv = Rational(1) / m.a_[col][col];
    for (int r = col + 1; r < rows_; ++r) {
      if (m.a_[r][col].is_zero()) continue;
      Rational f = m.a_[r][col] * inv;
      for (int c = col; c < cols_; ++c) m.a_[r][c] -= f * m.a_[col][c];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
  QMatrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.a_[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw DimensionError("rhs size mismatch in solve");
  QMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = a_[r][c];
    aug.at(r, cols_) = b[r];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  std::vector<Rational> x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("inverse of non-square matrix");
  QMatrix aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = a_[r][c];
    aug.at(r, cols_ + r) = Rational(1);
  }
  std::vector<int> pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1)
    throw PreconditionError("matrix is singular");
  QMatrix inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionError("vector size mismatch in apply");
  std::vector<Rational> y(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational acc(0);
    for (int c = 0; c < cols_; ++c) {
      if (!a_[r][c].is_zero() && !x[c].is_zero()) acc += a_[r][c] * x[c];
    }
    y[r] = acc;
  }
  return y;
}

}  // namespace rumin
