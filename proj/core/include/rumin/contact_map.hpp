#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rumin/algebra_map.hpp"
#include "rumin/graded_hom.hpp"
#include "rumin/heis_group.hpp"
#include "rumin/poly_form.hpp"
#include "rumin/qmatrix.hpp"

namespace rumin {

/// Closed family of exact contact self-maps of H_n: left translations,
/// dilations, linear symplectic maps (with multiplier), polynomial shears,
/// and their compositions. A raw polynomial map escape hatch exists for
/// testing non-contact inputs; it is not part of the closed family.
class ContactMap {
 public:
  struct Translation {
    HeisPoint g;
  };
  struct Dilation {
    Rational r;
  };
  struct LinearSymplectic {
    QMatrix a;    // 2n x 2n horizontal block
    Rational mu;  // A^T J A = mu J, mu != 0
  };
  struct Shear {
    int axis = 1;  // 1..2n; moves the symplectic partner of x_axis
    Poly p;        // univariate in x_axis
    Poly q;        // vertical compensation with q' = +-(p - x p')/2, q(0) = 0
  };
  struct Raw {
    std::vector<Poly> components;  // 2n+1 polynomials in (x, t)
  };

  using Primitive = std::variant<Translation, Dilation, LinearSymplectic, Shear, Raw>;

  static ContactMap identity(int n);
  static ContactMap translation(const HeisPoint& g);
  static ContactMap dilation(int n, const Rational& r);
  /// Verifies A^T J A = mu J for some rational mu != 0; PreconditionError
  /// otherwise. The map is (x, t) -> (A x, mu t).
  static ContactMap linear_symplectic(int n, const QMatrix& a);
  /// Shear along x_axis with a univariate polynomial p: the symplectic
  /// partner coordinate moves by p(x_axis) and t by the compensating q that
  /// keeps the pullback of theta_{2n+1} equal to theta_{2n+1}.
  static ContactMap shear(int n, int axis, const Poly& p_univariate);
  static ContactMap raw(int n, std::vector<Poly> components);

  /// Composition: (f.compose(g))(x) = f(g(x)).
  ContactMap compose(const ContactMap& inner) const;

  int n() const { return n_; }
  const std::vector<Primitive>& primitives() const { return prims_; }
  bool in_closed_family() const;

  HeisPoint apply(const HeisPoint& p) const;
  HeisPointD apply(const HeisPointD& p) const;

  /// Symbolic components of the map: 2n+1 polynomials in (x_1..x_{2n}, t).
  const std::vector<Poly>& components() const;

 private:
  ContactMap(int n, std::vector<Primitive> prims);
  int n_ = 0;
  std::vector<Primitive> prims_;
  std::vector<Poly> components_;  // composed once at construction
};

/// A 1-form in the coordinate coframe dx_1..dx_{2n}, dt (used only for the
/// symbolic contact verification).
struct CoordOneForm {
  std::vector<Poly> comp;  // size 2n+1, last slot is dt

  std::string to_string() const;
  bool is_zero() const;
};

/// Symbolic pullback of theta_{2n+1} factored as lambda * theta_{2n+1}.
struct ContactFactorReport {
  bool contact = false;
  Poly lambda;              // multiplier; constant for the closed family
  CoordOneForm residual;    // f^* theta - lambda * theta, zero iff contact
};

ContactFactorReport contact_factor(const ContactMap& f);

/// Pansu differential at a point: the graded endomorphism with the given
/// horizontal block and vertical scalar (the contact multiplier there).
struct PansuDifferential {
  QMatrix horizontal;  // 2n x 2n
  Rational vertical;

  /// Dual (pullback) presentation as a map of the Heisenberg coframe.
  AlgebraMap to_algebra_map(int n) const;
  GradedHom to_graded_hom(int n) const;
};

/// Exact Pansu differential; requires a symbolically verified contact map.
PansuDifferential pansu_exact(const ContactMap& f, const HeisPoint& p);

/// Difference-quotient estimate of the Pansu differential along decreasing
/// scales, with two-point Richardson extrapolation over the last two scales.
struct PansuNumericReport {
  bool diverged = false;
  std::vector<double> scales;
  std::vector<std::vector<std::vector<double>>> horizontal_at_scale;
  std::vector<double> vertical_at_scale;
  /// Rescaled t-component of the horizontal-direction quotients; a graded
  /// differential has none, so this must shrink to zero for valid maps.
  std::vector<double> vertical_defect_at_scale;
  std::vector<std::vector<double>> horizontal;  // extrapolated
  double vertical = 0;                          // extrapolated
  std::vector<double> scale_errors;  // max-entry deviation from extrapolant
  double slope = 0;                  // log-log fit of scale_errors vs scales
  bool errors_all_zero = false;      // exact at every scale (within fp noise)
};

PansuNumericReport pansu_numeric(const ContactMap& f, const HeisPointD& p,
                                 std::vector<double> scales = {1e-1, 1e-2, 1e-3, 1e-4});

/// Pansu pullback of a polynomial form: coefficients are composed with the
/// map and the coframe is pulled back through the pointwise differential,
/// all symbolically, so the result is again polynomial.
PolyForm pansu_pullback(const ContactMap& f, const PolyForm& w);

/// One-time consistency check of the coordinate model: the coframe matrix
/// over (dx, dt) is triangular with unit diagonal (so top-degree integration
/// may use dx_1 ... dx_{2n} dt), and the frame from horizontal_derive is
/// exactly dual to it. Throws InternalError on any violation; contact map
/// construction runs it once per rank.
void verify_coordinate_model(int n);

}  // namespace rumin
