#pragma once

#include <cstdint>
#include <random>

#include "rumin/contact_map.hpp"
#include "rumin/graded_hom.hpp"
#include "rumin/rumin_d.hpp"

namespace rumin {

/// Deterministic random source for property tests and CLI trials. All draws
/// go through explicit helpers (no std distributions), so a seed pins the
/// sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform integer in [lo, hi], inclusive.
  int uniform(int lo, int hi);
  bool chance(int num, int den) { return uniform(1, den) <= num; }

  /// Small rational with |numerator| <= bound, denominator in 1..bound.
  Rational rational(int bound = 3);
  Rational nonzero_rational(int bound = 3);

 private:
  std::mt19937_64 eng_;
};

/// Sparse polynomial with a few random monomials of total degree <= max_deg.
Poly random_poly(Rng& rng, int nvars, int max_deg, int max_terms = 3);

/// Random invariant form of the given degree over 1..ambient.
InvariantForm random_invariant_form(Rng& rng, int ambient, int degree, int max_terms = 3);

/// Random valid graded endomorphism of h_n: a product of elementary
/// symplectic similitudes, occasionally degenerated to a rank-one horizontal
/// block with isotropic image (vertical multiplier zero).
GradedHom random_valid_endomorphism(Rng& rng, int n);

/// Random member of the closed contact family on H_n.
ContactMap random_contact_map(Rng& rng, int n, int max_primitives = 3, int max_shear_deg = 2);

/// Random axis-aligned box with small rational endpoints.
Box random_box(Rng& rng, int dim);

/// Random rational point inside a box.
HeisPoint random_point_in_box(Rng& rng, const Box& box);

/// Random polynomial form with arbitrary monomials of the given degree.
PolyForm random_poly_form(Rng& rng, int n, int degree, int poly_deg, int max_terms = 2);

/// Random Rumin representative of degree k: supported on the canonical
/// complement for k <= n, a polynomial combination of the J^k basis above.
PolyForm random_rumin_rep(Rng& rng, const RuminComplex& rc, int k, int poly_deg);

/// Random compactly supported Rumin test form of degree j on the box:
/// J-valued above the middle, a canonical-complement class at and below it
/// (with the extra smoothness the middle degree consumes).
BumpForm random_rumin_eta(Rng& rng, const RuminComplex& rc, int j, const Box& box, int poly_deg);

/// Random compactly supported form with arbitrary fiber directions.
BumpForm random_eta_arbitrary(Rng& rng, const RuminComplex& rc, int j, const Box& box,
                              int poly_deg);

}  // namespace rumin
