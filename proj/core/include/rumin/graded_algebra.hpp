#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rumin/invariant_form.hpp"

namespace rumin {

/// A graded nilpotent Lie algebra given on the coframe side: a partition of
/// {1..N} into layers and the differential table dtheta_i. Construction
/// validates weight homogeneity of each dtheta_i and d(d theta_i) = 0 (the
/// dual Jacobi identity); instances are immutable afterwards.
class GradedAlgebra {
 public:
  /// layers: contiguous, ordered partition of 1..N.
  /// dtheta: degree-2 form per index (1-based key); missing keys mean 0.
  GradedAlgebra(std::vector<std::vector<int>> layers, std::map<int, InvariantForm> dtheta);

  /// The n-th Heisenberg algebra: layers ({1..2n},{2n+1}) and
  /// dtheta_{2n+1} = sum_j theta_{2j-1} ^ theta_{2j}.
  static GradedAlgebra heisenberg(int n);

  /// Direct sum, with layers concatenated levelwise (horizontal indices
  /// first). Basis indices of both factors are relabelled accordingly.
  static GradedAlgebra product(const GradedAlgebra& a, const GradedAlgebra& b);

  int dim() const { return n_; }
  int step() const { return static_cast<int>(layers_.size()); }
  /// Homogeneous dimension: sum over layers of j * dim V_j.
  int nu() const { return nu_; }
  const std::vector<std::vector<int>>& layers() const { return layers_; }
  int layer_of(int index) const;
  int weight_of_index(int index) const { return -layer_of(index); }
  const InvariantForm& dtheta(int index) const;

  /// Indices in layers 2..s, ascending.
  const std::vector<int>& indices_geq2() const { return geq2_; }
  /// The monomial theta_{I_{>=2}} (wedge over indices_geq2 in order).
  InvariantForm theta_geq2() const;

  /// Rank n when this is (isomorphic as presented to) the n-th Heisenberg
  /// algebra built by heisenberg(); nullopt otherwise.
  std::optional<int> heisenberg_rank() const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  int n_ = 0;
  int nu_ = 0;
  std::vector<std::vector<int>> layers_;
  std::vector<int> layer_of_;           // 1-based index -> layer number
  std::vector<InvariantForm> dtheta_;   // 1-based index -> degree-2 form
  std::vector<int> geq2_;
};

GradedAlgebra make_heisenberg(int n);

/// Exterior derivative of an invariant form: the antiderivation extending
/// the dtheta table. Satisfies d(d w) = 0 by the construction-time check.
InvariantForm d_invariant(const GradedAlgebra& g, const InvariantForm& w);

/// Weight of a nonzero form: max over monomials of the summed index weights.
/// nullopt for the zero form.
std::optional<int> weight_of(const GradedAlgebra& g, const InvariantForm& w);

}  // namespace rumin
