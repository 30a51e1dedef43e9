#include "rumin/algebra_map.hpp"

#include "rumin/errors.hpp"

namespace rumin {

AlgebraMap AlgebraMap::identity(int n) {
  AlgebraMap m;
  m.source_dim = m.target_dim = n;
  for (int j = 1; j <= n; ++j) m.images.push_back(InvariantForm::monomial(n, {j}));
  return m;
}

void AlgebraMap::validate() const {
  if (static_cast<int>(images.size()) != target_dim)
    throw DimensionError("algebra map must give one image per target covector");
  for (const auto& f : images) {
    if (f.degree() != 1) throw DegreeError("algebra map images must be 1-forms");
    if (f.ambient() != source_dim)
      throw DimensionError("algebra map image over wrong source basis");
  }
}

InvariantForm pullback_invariant(const AlgebraMap& phi, const InvariantForm& w) {
  if (w.ambient() != phi.target_dim)
    throw DimensionError("form is not over the map's target basis");
  InvariantForm out(phi.source_dim, w.degree());
  for (const auto& [J, c] : w.terms()) {
    InvariantForm prod = InvariantForm::scalar(phi.source_dim, c);
    for (int j : J) {
      prod = wedge(prod, phi.images[j - 1]);
      if (prod.is_zero()) break;
    }
    if (!prod.is_zero()) out += prod;
  }
  return out;
}

}  // namespace rumin
