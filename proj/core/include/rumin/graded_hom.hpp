#pragma once

#include <optional>
#include <string>

#include "rumin/algebra_map.hpp"
#include "rumin/graded_algebra.hpp"

namespace rumin {

/// A candidate graded homomorphism between graded algebras, presented by its
/// pullback action on the target coframe.
struct GradedHom {
  GradedAlgebra source;
  GradedAlgebra target;
  AlgebraMap map;
};

/// Validity report for a candidate hom. Valid means layer-preserving and
/// bracket-compatible (Phi^* d theta'_j = d Phi^* theta'_j for every j,
/// which encodes Phi[X,Y] = [Phi X, Phi Y] dually).
struct HomReport {
  bool layer_preserving = true;
  bool bracket_compatible = true;
  std::string first_violation;
  bool valid() const { return layer_preserving && bracket_compatible; }
};

HomReport check_graded_hom(const GradedHom& phi);

/// Result of testing whether Phi^* theta'_{I'_{>=2}} is a multiple of
/// theta_{I_{>=2}}. factor is set iff multiple (zero counts as a multiple).
struct JHypothesisResult {
  bool multiple = false;
  std::optional<Rational> factor;
};

/// Throws PreconditionError when the hom fails check_graded_hom.
JHypothesisResult j_hypothesis_check(const GradedHom& phi);

/// dim G - dim V_1 <= dim G' - dim V'_1, the sufficient condition for the
/// multiple property to hold for every graded homomorphism.
bool dimension_criterion(const GradedAlgebra& g, const GradedAlgebra& g_prime);

}  // namespace rumin
