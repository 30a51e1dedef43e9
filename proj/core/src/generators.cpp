#include "rumin/generators.hpp"

#include "rumin/errors.hpp"

namespace rumin {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw PreconditionError("empty uniform range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Rational Rng::rational(int bound) {
  return Rational(uniform(-bound, bound), uniform(1, bound));
}

Rational Rng::nonzero_rational(int bound) {
  while (true) {
    Rational r = rational(bound);
    if (!r.is_zero()) return r;
  }
}

Poly random_poly(Rng& rng, int nvars, int max_deg, int max_terms) {
  Poly p(nvars);
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    int budget = rng.uniform(0, max_deg);
    for (int d = 0; d < budget; ++d) ++e[rng.uniform(0, nvars - 1)];
    p.add_term(e, rng.rational());
  }
  return p;
}

InvariantForm random_invariant_form(Rng& rng, int ambient, int degree, int max_terms) {
  std::vector<MultiIndex> monos = monomials_of_degree(ambient, degree);
  InvariantForm f(ambient, degree);
  if (monos.empty()) return f;
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    f.add_term(monos[rng.uniform(0, static_cast<int>(monos.size()) - 1)], rng.rational());
  return f;
}

GradedHom random_valid_endomorphism(Rng& rng, int n) {
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  QMatrix a = QMatrix::identity(2 * n);
  Rational mu(1);
  auto apply_left = [&](const QMatrix& e) {
    QMatrix out(2 * n, 2 * n);
    for (int r = 0; r < 2 * n; ++r)
      for (int c = 0; c < 2 * n; ++c) {
        Rational acc(0);
        for (int k = 0; k < 2 * n; ++k) acc += e.at(r, k) * a.at(k, c);
        out.at(r, c) = acc;
      }
    a = out;
  };

  if (rng.chance(1, 8)) {
    // Degenerate case: rank-one block with isotropic image, multiplier 0.
    QMatrix d(2 * n, 2 * n);
    std::vector<Rational> v(2 * n), w(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
      v[i] = rng.rational(2);
      w[i] = rng.rational(2);
    }
    for (int r = 0; r < 2 * n; ++r)
      for (int c = 0; c < 2 * n; ++c) d.at(r, c) = v[r] * w[c];
    a = d;
    mu = Rational(0);
  } else {
    int steps = rng.uniform(1, 4);
    for (int s = 0; s < steps; ++s) {
      switch (rng.uniform(0, 3)) {
        case 0: {  // scaling inside one symplectic pair
          int b = rng.uniform(0, n - 1);
          Rational lam = rng.nonzero_rational(2);
          QMatrix e = QMatrix::identity(2 * n);
          e.at(2 * b, 2 * b) = lam;
          e.at(2 * b + 1, 2 * b + 1) = Rational(1) / lam;
          apply_left(e);
          break;
        }
        case 1: {  // shear inside one symplectic pair
          int b = rng.uniform(0, n - 1);
          QMatrix e = QMatrix::identity(2 * n);
          e.at(2 * b, 2 * b + 1) = rng.rational(2);
          apply_left(e);
          break;
        }
        case 2: {  // quarter turn inside one pair
          int b = rng.uniform(0, n - 1);
          QMatrix e = QMatrix::identity(2 * n);
          e.at(2 * b, 2 * b) = Rational(0);
          e.at(2 * b + 1, 2 * b + 1) = Rational(0);
          e.at(2 * b, 2 * b + 1) = Rational(1);
          e.at(2 * b + 1, 2 * b) = Rational(-1);
          apply_left(e);
          break;
        }
        default: {  // global dilation
          Rational r = rng.nonzero_rational(2);
          QMatrix e = QMatrix::identity(2 * n);
          for (int i = 0; i < 2 * n; ++i) e.at(i, i) = r;
          apply_left(e);
          mu *= r * r;
          break;
        }
      }
    }
  }

  PansuDifferential d{a, mu};
  GradedHom hom{g, g, d.to_algebra_map(n)};
  return hom;
}

ContactMap random_contact_map(Rng& rng, int n, int max_primitives, int max_shear_deg) {
  ContactMap f = ContactMap::identity(n);
  int count = rng.uniform(1, max_primitives);
  for (int s = 0; s < count; ++s) {
    switch (rng.uniform(0, 3)) {
      case 0: {
        HeisPoint g;
        for (int i = 0; i < 2 * n; ++i) g.x.push_back(rng.rational(2));
        g.t = rng.rational(2);
        f = ContactMap::translation(g).compose(f);
        break;
      }
      case 1:
        f = ContactMap::dilation(n, rng.nonzero_rational(2)).compose(f);
        break;
      case 2: {  // elementary symplectic block in one coordinate pair
        int b = rng.uniform(0, n - 1);
        QMatrix e = QMatrix::identity(2 * n);
        if (rng.chance(1, 2)) {
          Rational lam = rng.nonzero_rational(2);
          e.at(2 * b, 2 * b) = lam;
          e.at(2 * b + 1, 2 * b + 1) = Rational(1) / lam;
        } else {
          e.at(2 * b, 2 * b + 1) = rng.rational(2);
        }
        f = ContactMap::linear_symplectic(n, e).compose(f);
        break;
      }
      default: {
        int axis = rng.uniform(1, 2 * n);
        Poly p(1);
        int deg = rng.uniform(1, max_shear_deg);
        for (int d = 0; d <= deg; ++d) p.add_term({d}, rng.rational(2));
        if (p.is_zero()) p.add_term({1}, Rational(1));
        f = ContactMap::shear(n, axis, p).compose(f);
        break;
      }
    }
  }
  return f;
}

Box random_box(Rng& rng, int dim) {
  std::vector<std::pair<Rational, Rational>> iv;
  for (int i = 0; i < dim; ++i) {
    Rational lo(rng.uniform(-2, 1), 2);        // -1, -1/2, 0, 1/2
    Rational width(rng.uniform(1, 2), 1);      // 1 or 2
    iv.emplace_back(lo, lo + width);
  }
  return Box(std::move(iv));
}

HeisPoint random_point_in_box(Rng& rng, const Box& box) {
  std::vector<Rational> coords;
  for (const auto& [a, b] : box.intervals) {
    Rational frac(rng.uniform(0, 4), 4);
    coords.push_back(a + frac * (b - a));
  }
  HeisPoint p;
  p.x.assign(coords.begin(), coords.end() - 1);
  p.t = coords.back();
  return p;
}

PolyForm random_poly_form(Rng& rng, int n, int degree, int poly_deg, int max_terms) {
  int N = 2 * n + 1;
  std::vector<MultiIndex> monos = monomials_of_degree(N, degree);
  PolyForm f(n, degree);
  if (monos.empty()) return f;
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t)
    f.add_term(monos[rng.uniform(0, static_cast<int>(monos.size()) - 1)],
               random_poly(rng, N, poly_deg));
  return f;
}

PolyForm random_rumin_rep(Rng& rng, const RuminComplex& rc, int k, int poly_deg) {
  int n = rc.n();
  int N = rc.N();
  PolyForm f(n, k);
  if (k <= n) {
    const auto& complement = rc.fiber(k).complement;
    if (complement.empty()) return f;
    int terms = rng.uniform(1, std::max<int>(1, static_cast<int>(complement.size()) / 2));
    for (int t = 0; t < terms; ++t)
      f.add_term(complement[rng.uniform(0, static_cast<int>(complement.size()) - 1)],
                 random_poly(rng, N, poly_deg));
  } else {
    const auto& rows = rc.fiber(k).basis.rows();
    if (rows.empty()) return f;
    int terms = rng.uniform(1, static_cast<int>(rows.size()));
    for (int t = 0; t < terms; ++t) {
      const InvariantForm& row = rows[rng.uniform(0, static_cast<int>(rows.size()) - 1)];
      f += PolyForm::from_invariant(n, row).scaled(random_poly(rng, N, poly_deg));
    }
  }
  return f;
}

BumpForm random_rumin_eta(Rng& rng, const RuminComplex& rc, int j, const Box& box,
                          int poly_deg) {
  int n = rc.n();
  int N = rc.N();
  PolyForm base(n, j);
  if (j > n) {
    const auto& rows = rc.fiber(j).basis.rows();
    if (!rows.empty()) {
      int terms = rng.uniform(1, static_cast<int>(rows.size()));
      for (int t = 0; t < terms; ++t) {
        const InvariantForm& row = rows[rng.uniform(0, static_cast<int>(rows.size()) - 1)];
        base += PolyForm::from_invariant(n, row).scaled(random_poly(rng, N, poly_deg));
      }
    }
    return BumpForm::make(box, base, BumpSmoothness::c1);
  }
  const auto& complement = rc.fiber(j).complement;
  if (!complement.empty()) {
    int terms = rng.uniform(1, static_cast<int>(complement.size()));
    for (int t = 0; t < terms; ++t)
      base.add_term(complement[rng.uniform(0, static_cast<int>(complement.size()) - 1)],
                    random_poly(rng, N, poly_deg));
  }
  // The middle degree consumes one extra derivative (the lift), so use the
  // smoother bump there.
  return BumpForm::make(box, base, j == n ? BumpSmoothness::c2 : BumpSmoothness::c1);
}

BumpForm random_eta_arbitrary(Rng& rng, const RuminComplex& rc, int j, const Box& box,
                              int poly_deg) {
  return BumpForm::make(box, random_poly_form(rng, rc.n(), j, poly_deg),
                        BumpSmoothness::c1);
}

}  // namespace rumin
