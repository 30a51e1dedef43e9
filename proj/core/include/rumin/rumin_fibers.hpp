#pragma once

#include <string>
#include <vector>

#include "rumin/graded_algebra.hpp"
#include "rumin/qmatrix.hpp"
#include "rumin/subspace.hpp"

namespace rumin {

/// Fiber of I^k: the span of theta_i ^ Lambda^{k-1} + dtheta_i ^ Lambda^{k-2}
/// over i in I_{>=2}, as a canonical RREF basis.
SubspaceBasis ideal_I_fiber(const GradedAlgebra& g, int k);

/// Fiber of J^k: the simultaneous annihilator of { theta_i, dtheta_i } for
/// i in I_{>=2}. Every element factors as omega_0 ^ theta_{I_{>=2}}; this is
/// verified and an InternalError is raised if it ever fails.
SubspaceBasis ideal_J_fiber(const GradedAlgebra& g, int k);

/// Pointwise Rumin data in degree k: the quotient complement for k <= n, the
/// J fiber for k >= n+1, with the I fiber cached alongside.
struct RuminFiber {
  enum class Kind { quotient, ideal };
  int k = 0;
  Kind kind = Kind::quotient;
  SubspaceBasis basis;        // complement monomial basis (quotient) or J basis (ideal)
  SubspaceBasis ideal_basis;  // I^k fiber
  std::vector<MultiIndex> complement;  // non-pivot monomials of I^k
};

RuminFiber rumin_fiber(const GradedAlgebra& heis, int k);

/// The Lefschetz map W_k : Lambda^k V_1 -> Lambda^{k+2} V_1, alpha |->
/// dtheta_{2n+1} ^ alpha, in lex monomial bases, with its exact rank.
struct LefschetzReport {
  int n = 0;
  int k = 0;
  int dim_source = 0;
  int dim_target = 0;
  int rank = 0;
  bool injective = false;
  bool surjective = false;
  QMatrix matrix;
};

LefschetzReport lefschetz(int n, int k);

/// Wedge pairing between the canonical complement of I^k and J^{2n+1-k},
/// with coefficients relative to theta_{1..N}.
struct PairingReport {
  int k = 0;
  QMatrix matrix;
  Rational det;
  bool nondegenerate = false;
};

PairingReport duality_pairing(const GradedAlgebra& heis, int k);

/// dim R^k for k = 0..2n+1, computed from the actual fibers.
std::vector<int> rumin_fiber_dims(int n);

/// Checks wt(b) = -nu + N - k for every J^k basis element.
struct WeightCheck {
  bool pass = true;
  bool vacuous = false;  // J^k = 0
  std::string detail;
};

WeightCheck weight_codegree_check(const GradedAlgebra& g, int k);

}  // namespace rumin
