#include "rumin/graded_hom.hpp"

#include "rumin/errors.hpp"

namespace rumin {

HomReport check_graded_hom(const GradedHom& phi) {
  if (phi.map.source_dim != phi.source.dim() || phi.map.target_dim != phi.target.dim())
    throw DimensionError("algebra map dimensions do not match source/target algebras");
  phi.map.validate();

  HomReport report;
  for (int j = 1; j <= phi.target.dim(); ++j) {
    int layer = phi.target.layer_of(j);
    for (const auto& [J, c] : phi.map.images[j - 1].terms()) {
      if (phi.source.layer_of(J[0]) != layer) {
        report.layer_preserving = false;
        report.first_violation = "image of theta'_" + std::to_string(j) +
                                 " meets theta_" + std::to_string(J[0]) +
                                 " outside layer " + std::to_string(layer);
        return report;
      }
    }
  }
  for (int j = 1; j <= phi.target.dim(); ++j) {
    InvariantForm lhs = pullback_invariant(phi.map, phi.target.dtheta(j));
    InvariantForm rhs = d_invariant(phi.source, phi.map.images[j - 1]);
    if (!(lhs == rhs)) {
      report.bracket_compatible = false;
      report.first_violation = "Phi*(dtheta'_" + std::to_string(j) + ") = " + lhs.to_string() +
                               " but d(Phi*theta'_" + std::to_string(j) + ") = " + rhs.to_string();
      return report;
    }
  }
  return report;
}

JHypothesisResult j_hypothesis_check(const GradedHom& phi) {
  HomReport hom = check_graded_hom(phi);
  if (!hom.valid())
    throw PreconditionError("j_hypothesis_check requires a valid graded hom: " +
                            hom.first_violation);

  InvariantForm pulled = InvariantForm::scalar(phi.source.dim(), Rational(1));
  for (int i : phi.target.indices_geq2()) {
    pulled = wedge(pulled, phi.map.images[i - 1]);
    if (pulled.is_zero()) break;
  }
  InvariantForm reference = phi.source.theta_geq2();

  JHypothesisResult result;
  if (pulled.is_zero()) {
    // Degree mismatch makes zero the only candidate multiple, and zero is one.
    result.multiple = true;
    result.factor = Rational(0);
    return result;
  }
  if (pulled.degree() != reference.degree()) return result;
  // reference is the single monomial theta_{I_{>=2}}.
  const MultiIndex& mono = reference.terms().begin()->first;
  Rational factor = pulled.coeff(mono);
  InvariantForm residue = pulled - factor * reference;
  if (!residue.is_zero()) return result;
  result.multiple = true;
  result.factor = factor;
  return result;
}

bool dimension_criterion(const GradedAlgebra& g, const GradedAlgebra& g_prime) {
  int lhs = g.dim() - static_cast<int>(g.layers()[0].size());
  int rhs = g_prime.dim() - static_cast<int>(g_prime.layers()[0].size());
  return lhs <= rhs;
}

}  // namespace rumin
