#include "rumin/contact_map.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

QMatrix standard_symplectic_matrix(int n) {
  QMatrix j(2 * n, 2 * n);
  for (int b = 0; b < n; ++b) {
    j.at(2 * b, 2 * b + 1) = Rational(1);
    j.at(2 * b + 1, 2 * b) = Rational(-1);
  }
  return j;
}

std::vector<Poly> identity_components(int n) {
  int nvars = 2 * n + 1;
  std::vector<Poly> comps;
  for (int v = 0; v < nvars; ++v) comps.push_back(Poly::variable(nvars, v));
  return comps;
}

// theta_{2n+1} = dt + (1/2) sum_j (x_{2j-1} dx_{2j} - x_{2j} dx_{2j-1}),
// as coefficients over (dx_1..dx_{2n}, dt).
CoordOneForm theta_vertical_row(int n) {
  int nvars = 2 * n + 1;
  CoordOneForm row;
  row.comp.assign(nvars, Poly(nvars));
  for (int b = 0; b < n; ++b) {
    row.comp[2 * b] = Rational(-1, 2) * Poly::variable(nvars, 2 * b + 1);
    row.comp[2 * b + 1] = Rational(1, 2) * Poly::variable(nvars, 2 * b);
  }
  row.comp[nvars - 1] = Poly::constant(nvars, Rational(1));
  return row;
}

std::vector<Poly> primitive_components(int n, const ContactMap::Primitive& prim) {
  int nvars = 2 * n + 1;
  std::vector<Poly> comps = identity_components(n);
  if (const auto* tr = std::get_if<ContactMap::Translation>(&prim)) {
    if (tr->g.rank() != n) throw DimensionError("translation element of wrong rank");
    // g . x: horizontal shift plus the symplectic twist on t.
    for (int i = 0; i < 2 * n; ++i)
      comps[i].add_term(std::vector<int>(nvars, 0), tr->g.x[i]);
    Poly t = Poly::variable(nvars, nvars - 1);
    t.add_term(std::vector<int>(nvars, 0), tr->g.t);
    for (int b = 0; b < n; ++b) {
      Poly twist = tr->g.x[2 * b] * Poly::variable(nvars, 2 * b + 1) -
                   tr->g.x[2 * b + 1] * Poly::variable(nvars, 2 * b);
      twist *= Rational(1, 2);
      t -= twist;
    }
    comps[nvars - 1] = t;
  } else if (const auto* di = std::get_if<ContactMap::Dilation>(&prim)) {
    for (int i = 0; i < 2 * n; ++i) comps[i] *= di->r;
    comps[nvars - 1] *= di->r * di->r;
  } else if (const auto* ls = std::get_if<ContactMap::LinearSymplectic>(&prim)) {
    for (int i = 0; i < 2 * n; ++i) {
      Poly acc(nvars);
      for (int j = 0; j < 2 * n; ++j) {
        if (ls->a.at(i, j).is_zero()) continue;
        acc += ls->a.at(i, j) * Poly::variable(nvars, j);
      }
      comps[i] = acc;
    }
    comps[nvars - 1] *= ls->mu;
  } else if (const auto* sh = std::get_if<ContactMap::Shear>(&prim)) {
    int axis = sh->axis;
    int partner = (axis % 2 == 1) ? axis + 1 : axis - 1;
    std::vector<Poly> embed(1, Poly::variable(nvars, axis - 1));
    comps[partner - 1] += sh->p.substitute(embed);
    comps[nvars - 1] += sh->q.substitute(embed);
  } else if (const auto* raw = std::get_if<ContactMap::Raw>(&prim)) {
    if (static_cast<int>(raw->components.size()) != nvars)
      throw DimensionError("raw map needs 2n+1 components");
    for (const Poly& c : raw->components)
      if (c.nvars() != nvars) throw DimensionError("raw map component in wrong ring");
    comps = raw->components;
  }
  return comps;
}

}  // namespace

ContactMap::ContactMap(int n, std::vector<Primitive> prims)
    : n_(n), prims_(std::move(prims)) {
  if (n < 1) throw DimensionError("contact map needs rank >= 1");
  verify_coordinate_model(n_);
  components_ = identity_components(n_);
  for (const Primitive& prim : prims_) {
    std::vector<Poly> step = primitive_components(n_, prim);
    for (Poly& c : step) c = c.substitute(components_);
    components_ = std::move(step);
  }
}

ContactMap ContactMap::identity(int n) { return ContactMap(n, {}); }

ContactMap ContactMap::translation(const HeisPoint& g) {
  return ContactMap(g.rank(), {Translation{g}});
}

ContactMap ContactMap::dilation(int n, const Rational& r) {
  if (r.is_zero()) throw PreconditionError("dilation factor must be nonzero");
  return ContactMap(n, {Dilation{r}});
}

ContactMap ContactMap::linear_symplectic(int n, const QMatrix& a) {
  if (a.rows() != 2 * n || a.cols() != 2 * n)
    throw DimensionError("symplectic block must be 2n x 2n");
  // A^T J A = mu J, read mu off the (1,2) slot and verify the whole matrix.
  QMatrix j = standard_symplectic_matrix(n);
  QMatrix m(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) {
      Rational acc(0);
      for (int k = 0; k < 2 * n; ++k)
        for (int l = 0; l < 2 * n; ++l) acc += a.at(k, r) * j.at(k, l) * a.at(l, c);
      m.at(r, c) = acc;
    }
  Rational mu = m.at(0, 1);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c)
      if (m.at(r, c) != mu * j.at(r, c))
        throw PreconditionError("matrix is not symplectic up to a multiplier");
  if (mu.is_zero())
    throw PreconditionError("symplectic multiplier must be nonzero for an invertible map");
  return ContactMap(n, {LinearSymplectic{a, mu}});
}

ContactMap ContactMap::shear(int n, int axis, const Poly& p_univariate) {
  if (axis < 1 || axis > 2 * n) throw DimensionError("shear axis out of range 1..2n");
  if (p_univariate.nvars() != 1) throw PreconditionError("shear polynomial must be univariate");
  // Vertical compensation: q' = (p - x p')/2 for odd axes and the negative
  // for even axes, fixed by q(0) = 0; this makes f* theta_{2n+1} = theta_{2n+1}.
  Poly x = Poly::variable(1, 0);
  Poly qprime = p_univariate - x * p_univariate.derivative(0);
  qprime *= Rational(1, 2);
  if (axis % 2 == 0) qprime *= Rational(-1);
  Poly q = qprime.antiderivative(0);
  return ContactMap(n, {Shear{axis, p_univariate, q}});
}

ContactMap ContactMap::raw(int n, std::vector<Poly> components) {
  return ContactMap(n, {Raw{std::move(components)}});
}

ContactMap ContactMap::compose(const ContactMap& inner) const {
  if (n_ != inner.n_) throw DimensionError("composing maps of different rank");
  std::vector<Primitive> prims = inner.prims_;
  prims.insert(prims.end(), prims_.begin(), prims_.end());
  return ContactMap(n_, std::move(prims));
}

bool ContactMap::in_closed_family() const {
  return std::none_of(prims_.begin(), prims_.end(), [](const Primitive& p) {
    return std::holds_alternative<Raw>(p);
  });
}

HeisPoint ContactMap::apply(const HeisPoint& p) const {
  if (p.rank() != n_) throw DimensionError("point of wrong rank");
  std::vector<Rational> coords = p.x;
  coords.push_back(p.t);
  HeisPoint out;
  for (int i = 0; i < 2 * n_; ++i) out.x.push_back(components_[i].eval(coords));
  out.t = components_[2 * n_].eval(coords);
  return out;
}

HeisPointD ContactMap::apply(const HeisPointD& p) const {
  if (p.rank() != n_) throw DimensionError("point of wrong rank");
  std::vector<double> coords = p.x;
  coords.push_back(p.t);
  HeisPointD out;
  for (int i = 0; i < 2 * n_; ++i) out.x.push_back(components_[i].eval_double(coords));
  out.t = components_[2 * n_].eval_double(coords);
  return out;
}

const std::vector<Poly>& ContactMap::components() const { return components_; }

std::string CoordOneForm::to_string() const {
  std::ostringstream os;
  bool wrote = false;
  int nvars = static_cast<int>(comp.size());
  auto names = heis_var_names(nvars);
  for (int v = 0; v < nvars; ++v) {
    if (comp[v].is_zero()) continue;
    if (wrote) os << " + ";
    os << "(" << comp[v].to_string() << ")*d" << names[v];
    wrote = true;
  }
  return wrote ? os.str() : "0";
}

bool CoordOneForm::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const Poly& p) { return p.is_zero(); });
}

ContactFactorReport contact_factor(const ContactMap& f) {
  int n = f.n();
  int nvars = 2 * n + 1;
  const std::vector<Poly>& F = f.components();
  const Poly& T = F[nvars - 1];

  // f* theta_{2n+1} in the coordinate coframe.
  CoordOneForm pulled;
  pulled.comp.resize(nvars, Poly(nvars));
  for (int v = 0; v < nvars; ++v) {
    Poly c = T.derivative(v);
    for (int b = 0; b < n; ++b) {
      Poly part = F[2 * b] * F[2 * b + 1].derivative(v) - F[2 * b + 1] * F[2 * b].derivative(v);
      part *= Rational(1, 2);
      c += part;
    }
    pulled.comp[v] = c;
  }

  CoordOneForm theta = theta_vertical_row(n);

  ContactFactorReport report;
  report.lambda = pulled.comp[nvars - 1];
  report.residual.comp.resize(nvars, Poly(nvars));
  for (int v = 0; v < nvars; ++v)
    report.residual.comp[v] = pulled.comp[v] - report.lambda * theta.comp[v];
  report.contact = report.residual.is_zero();
  return report;
}

AlgebraMap PansuDifferential::to_algebra_map(int n) const {
  int N = 2 * n + 1;
  AlgebraMap map;
  map.source_dim = map.target_dim = N;
  for (int j = 0; j < 2 * n; ++j) {
    InvariantForm img(N, 1);
    for (int i = 0; i < 2 * n; ++i) img.add_term({i + 1}, horizontal.at(j, i));
    map.images.push_back(std::move(img));
  }
  InvariantForm vert(N, 1);
  vert.add_term({N}, vertical);
  map.images.push_back(std::move(vert));
  return map;
}

GradedHom PansuDifferential::to_graded_hom(int n) const {
  return GradedHom{GradedAlgebra::heisenberg(n), GradedAlgebra::heisenberg(n),
                   to_algebra_map(n)};
}

PansuDifferential pansu_exact(const ContactMap& f, const HeisPoint& p) {
  int n = f.n();
  if (p.rank() != n) throw DimensionError("point of wrong rank");
  ContactFactorReport factor = contact_factor(f);
  if (!factor.contact)
    throw PreconditionError("pansu_exact requires a contact map; residual " +
                            factor.residual.to_string());
  std::vector<Rational> coords = p.x;
  coords.push_back(p.t);

  PansuDifferential d;
  d.horizontal = QMatrix(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j)
    for (int i = 0; i < 2 * n; ++i)
      d.horizontal.at(j, i) = horizontal_derive(n, i + 1, f.components()[j]).eval(coords);
  d.vertical = factor.lambda.eval(coords);
  return d;
}

PansuNumericReport pansu_numeric(const ContactMap& f, const HeisPointD& p,
                                 std::vector<double> scales) {
  int n = f.n();
  if (p.rank() != n) throw DimensionError("point of wrong rank");
  if (scales.size() < 2) throw PreconditionError("need at least two scales");

  for (size_t k = 1; k < scales.size(); ++k)
    if (!(scales[k] < scales[k - 1]) || scales[k] <= 0)
      throw PreconditionError("scales must decrease strictly toward zero");

  PansuNumericReport report;
  report.scales = scales;
  HeisPointD base = f.apply(p);
  HeisPointD base_inv = group_inverse(base);

  for (double s : scales) {
    std::vector<std::vector<double>> a(2 * n, std::vector<double>(2 * n, 0.0));
    double defect = 0;
    for (int i = 0; i < 2 * n; ++i) {
      HeisPointD dir = heis_identity<double>(n);
      dir.x[i] = s;
      HeisPointD q = dilate(1.0 / s, group_mul(base_inv, f.apply(group_mul(p, dir))));
      for (int j = 0; j < 2 * n; ++j) a[j][i] = q.x[j];
      defect = std::max(defect, std::abs(q.t));
    }
    HeisPointD vdir = heis_identity<double>(n);
    vdir.t = s * s;
    HeisPointD qv = dilate(1.0 / s, group_mul(base_inv, f.apply(group_mul(p, vdir))));
    report.horizontal_at_scale.push_back(std::move(a));
    report.vertical_at_scale.push_back(qv.t);
    report.vertical_defect_at_scale.push_back(defect);
  }

  // Two-point Richardson over the last two scales; first-order error model.
  size_t last = scales.size() - 1;
  double r = scales[last - 1] / scales[last];
  auto extrapolate = [r](double coarse, double fine) { return (r * fine - coarse) / (r - 1.0); };
  report.horizontal.assign(2 * n, std::vector<double>(2 * n, 0.0));
  for (int j = 0; j < 2 * n; ++j)
    for (int i = 0; i < 2 * n; ++i)
      report.horizontal[j][i] = extrapolate(report.horizontal_at_scale[last - 1][j][i],
                                            report.horizontal_at_scale[last][j][i]);
  report.vertical =
      extrapolate(report.vertical_at_scale[last - 1], report.vertical_at_scale[last]);

  double magnitude = std::abs(report.vertical);
  for (int j = 0; j < 2 * n; ++j)
    for (int i = 0; i < 2 * n; ++i)
      magnitude = std::max(magnitude, std::abs(report.horizontal[j][i]));

  for (size_t k = 0; k < scales.size(); ++k) {
    double err = std::abs(report.vertical_at_scale[k] - report.vertical);
    err = std::max(err, report.vertical_defect_at_scale[k]);  // limit is zero
    for (int j = 0; j < 2 * n; ++j)
      for (int i = 0; i < 2 * n; ++i)
        err = std::max(err, std::abs(report.horizontal_at_scale[k][j][i] -
                                     report.horizontal[j][i]));
    report.scale_errors.push_back(err);
  }

  // Deviations at the floating-point noise floor count as exact; the
  // vertical quotient divides by s^2 and amplifies roundoff accordingly.
  double noise_floor = 1e-7 * std::max(1.0, magnitude);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (size_t k = 0; k < scales.size(); ++k) {
    if (report.scale_errors[k] <= noise_floor) continue;
    double lx = std::log(scales[k]);
    double ly = std::log(report.scale_errors[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  report.errors_all_zero = (m == 0);

  // Quotients that blow up as the scale shrinks signal non-differentiability:
  // compare raw quotient magnitudes at the coarsest and finest scales.
  auto raw_magnitude = [&](size_t k) {
    double v = std::abs(report.vertical_at_scale[k]);
    v = std::max(v, report.vertical_defect_at_scale[k]);
    for (int j = 0; j < 2 * n; ++j)
      for (int i = 0; i < 2 * n; ++i) v = std::max(v, std::abs(report.horizontal_at_scale[k][j][i]));
    return v;
  };
  double coarse = raw_magnitude(0);
  double fine = raw_magnitude(scales.size() - 1);
  report.diverged = std::isnan(fine) || std::isinf(fine) ||
                    fine > 5.0 * std::max(coarse, 1e-9);
  return report;
}

void verify_coordinate_model(int n) {
  static std::mutex mu;
  static std::set<int> verified;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (verified.count(n)) return;
    // Mark first: the check itself builds an identity map, which re-enters.
    verified.insert(n);
  }

  int nvars = 2 * n + 1;
  // Coframe rows over (dx_1..dx_{2n}, dt): theta_j = dx_j plus the shared
  // vertical row, i.e. exactly what the contact factorization uses.
  std::vector<CoordOneForm> coframe;
  for (int j = 0; j < 2 * n; ++j) {
    CoordOneForm row;
    row.comp.assign(nvars, Poly(nvars));
    row.comp[j] = Poly::constant(nvars, Rational(1));
    coframe.push_back(std::move(row));
  }
  coframe.push_back(theta_vertical_row(n));
  ContactFactorReport id_factor = contact_factor(ContactMap::identity(n));
  if (!id_factor.contact || !(id_factor.lambda == Poly::constant(nvars, Rational(1))))
    throw InternalError("identity map fails its own contact factorization");

  // Triangular with unit diagonal, hence unimodular: top-degree integration
  // in the theta coframe equals coordinate integration.
  for (int i = 0; i < nvars; ++i) {
    if (!(coframe[i].comp[i] == Poly::constant(nvars, Rational(1))))
      throw InternalError("coframe matrix diagonal is not one");
    for (int v = i + 1; v < nvars; ++v)
      if (!coframe[i].comp[v].is_zero())
        throw InternalError("coframe matrix is not triangular");
  }

  // Frame columns from horizontal_derive: X_i = sum_v (X_i x_v) d/dx_v.
  // Duality theta_i(X_j) = delta_ij ties the frame to the coframe exactly.
  for (int i = 1; i <= nvars; ++i) {
    for (int j = 1; j <= nvars; ++j) {
      Poly pairing(nvars);
      for (int v = 0; v < nvars; ++v) {
        Poly xv = horizontal_derive(n, j, Poly::variable(nvars, v));
        if (xv.is_zero() || coframe[i - 1].comp[v].is_zero()) continue;
        pairing += coframe[i - 1].comp[v] * xv;
      }
      Poly expect =
          (i == j) ? Poly::constant(nvars, Rational(1)) : Poly(nvars);
      if (!(pairing == expect))
        throw InternalError("frame/coframe duality fails at theta_" + std::to_string(i) +
                            "(X_" + std::to_string(j) + ")");
    }
  }
}

PolyForm pansu_pullback(const ContactMap& f, const PolyForm& w) {
  int n = f.n();
  if (w.n() != n) throw DimensionError("form and map rank mismatch");
  ContactFactorReport factor = contact_factor(f);
  if (!factor.contact)
    throw PreconditionError("pansu_pullback requires a contact map; residual " +
                            factor.residual.to_string());
  int nvars = 2 * n + 1;

  // Pointwise pullback of the coframe, with polynomial entries.
  std::vector<PolyForm> rows;
  for (int j = 0; j < 2 * n; ++j) {
    PolyForm row(n, 1);
    for (int i = 0; i < 2 * n; ++i) {
      Poly entry = horizontal_derive(n, i + 1, f.components()[j]);
      if (!entry.is_zero()) row.add_term({i + 1}, entry);
    }
    rows.push_back(std::move(row));
  }
  PolyForm vert(n, 1);
  if (!factor.lambda.is_zero()) vert.add_term({nvars}, factor.lambda);
  rows.push_back(std::move(vert));

  PolyForm out(n, w.degree());
  for (const auto& [J, c] : w.terms()) {
    PolyForm prod = PolyForm::monomial(n, {}, Poly::constant(nvars, Rational(1)));
    for (int j : J) {
      prod = wedge(prod, rows[j - 1]);
      if (prod.is_zero()) break;
    }
    if (prod.is_zero()) continue;
    out += prod.scaled(c.substitute(f.components()));
  }
  return out;
}

}  // namespace rumin
