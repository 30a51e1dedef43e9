#pragma once

#include <vector>

#include "rumin/invariant_form.hpp"

namespace rumin {

/// Exact row-reduced basis of a subspace of Lambda^k. Rows are in reduced row
/// echelon form with respect to the lexicographic order on monomials; the
/// pivot (lex-smallest) monomial of each row has coefficient 1 and occurs in
/// no other row. Rows are sorted by pivot, making the basis canonical.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(int ambient, int degree) : ambient_(ambient), degree_(degree) {}

  int ambient() const { return ambient_; }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<InvariantForm>& rows() const { return rows_; }
  const std::vector<MultiIndex>& pivots() const { return pivots_; }

  /// Residual of w after eliminating every pivot monomial; w is in the span
  /// iff the residual is zero.
  InvariantForm reduce(const InvariantForm& w) const;
  bool contains(const InvariantForm& w) const { return reduce(w).is_zero(); }

  /// The non-pivot monomials of Lambda^degree, in lex order: the canonical
  /// complement of the subspace.
  std::vector<MultiIndex> complement_monomials() const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.degree_ == b.degree_ && a.rows_ == b.rows_;
  }

  friend SubspaceBasis span_reduce(std::vector<InvariantForm> gens, int ambient, int degree);

 private:
  int ambient_ = 0;
  int degree_ = 0;
  std::vector<InvariantForm> rows_;
  std::vector<MultiIndex> pivots_;
};

/// Canonical RREF basis of the span of the generators. All generators must
/// share ambient dimension and degree (DegreeError otherwise); zero
/// generators are dropped. The result is independent of generator order.
SubspaceBasis span_reduce(std::vector<InvariantForm> gens);

/// As above but with explicit dimensions, so an empty generating set yields
/// the zero subspace of the right Lambda^k.
SubspaceBasis span_reduce(std::vector<InvariantForm> gens, int ambient, int degree);

/// Basis of { alpha of degree target_degree : alpha ^ g = 0 for every
/// generator g }. Generators may have mixed degrees.
SubspaceBasis annihilator(const std::vector<InvariantForm>& gens, int ambient, int target_degree);

/// Convenience overload matching the SubspaceBasis-level signature.
SubspaceBasis annihilator(const SubspaceBasis& s, int target_degree);

}  // namespace rumin
