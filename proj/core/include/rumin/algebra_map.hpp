#pragma once

#include <vector>

#include "rumin/invariant_form.hpp"

namespace rumin {

/// A linear map presented by pullback: for each basis covector theta'_j of
/// the target dual, a degree-1 form over the source giving Phi^* theta'_j.
struct AlgebraMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<InvariantForm> images;  // size target_dim, degree 1 over source

  static AlgebraMap identity(int n);
  void validate() const;
};

/// Pullback of an invariant form through the map: an algebra homomorphism,
/// so the pullback of a wedge is the wedge of the pullbacks.
InvariantForm pullback_invariant(const AlgebraMap& phi, const InvariantForm& w);

}  // namespace rumin
