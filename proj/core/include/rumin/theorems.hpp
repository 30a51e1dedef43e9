#pragma once

#include "rumin/contact_map.hpp"
#include "rumin/rumin_d.hpp"

namespace rumin {

/// Residual of the pullback/exterior-derivative exchange on the differential
/// ideal:  integral(f_P^* d alpha ^ eta) - (-1)^{k+1} integral(f_P^* alpha ^ d eta),
/// for alpha pointwise in J^k and a compactly supported test form eta of
/// degree N-k-1. Exactly zero for contact maps of the closed family.
Rational theorem_j_check(const RuminComplex& rc, const ContactMap& f, int k,
                         const PolyForm& alpha, const BumpForm& eta, const Box& domain);

/// Residual of the chain-map identity for the Rumin complex:
///   integral(f_P^* alpha ^ d_{2n-k} eta) - (-1)^{k+1} integral(f_P^* d_k alpha ^ eta)
/// with alpha a Rumin representative of degree k and eta a compactly
/// supported Rumin test form of degree 2n-k. Exactly zero for the closed
/// contact family.
Rational rumin_chain_check(const RuminComplex& rc, const ContactMap& f, int k,
                           const PolyForm& alpha, const BumpForm& eta, const Box& domain);

}  // namespace rumin
