#pragma once

#include <optional>
#include <vector>

#include "rumin/rational.hpp"

namespace rumin {

/// Dense exact rational matrix; row-major storage.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[r][c]; }
  const Rational& at(int r, int c) const { return a_[r][c]; }

  /// In-place reduced row echelon form; returns the pivot column of each
  /// pivot row, in order.
  std::vector<int> rref();

  int rank() const;
  Rational determinant() const;

  /// Kernel basis, one vector per free column in ascending column order.
  std::vector<std::vector<Rational>> kernel_basis() const;

  /// Particular solution of A x = b with free variables set to zero;
  /// nullopt if inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  /// Exact inverse; throws PreconditionError when singular.
  QMatrix inverse() const;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> a_;
};

}  // namespace rumin
