#include <doctest.h>

#include <cmath>

#include "rumin/generators.hpp"
#include "rumin/literals.hpp"
#include "rumin/theorems.hpp"

using namespace rumin;

namespace {

HeisPoint pt(std::initializer_list<long> xs, long num, long den = 1) {
  HeisPoint p;
  for (long v : xs) p.x.push_back(Rational(v));
  p.t = Rational(num, den);
  return p;
}

}  // namespace

TEST_CASE("group law on H_1") {
  // The twist side of the product is pinned by left-invariance of the
  // contact form in the fixed coordinate model.
  HeisPoint a = pt({1, 0}, 0);
  HeisPoint b = pt({0, 1}, 0);
  HeisPoint c = group_mul(a, b);
  CHECK(c.x[0] == Rational(1));
  CHECK(c.x[1] == Rational(1));
  CHECK(c.t == Rational(-1, 2));
  CHECK(group_mul(b, a).t == Rational(1, 2));

  Rng rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.uniform(1, 2);
    HeisPoint p, q, r;
    for (int i = 0; i < 2 * n; ++i) {
      p.x.push_back(rng.rational());
      q.x.push_back(rng.rational());
      r.x.push_back(rng.rational());
    }
    p.t = rng.rational();
    q.t = rng.rational();
    r.t = rng.rational();

    // Associativity and two-sided inverses.
    HeisPoint lhs = group_mul(group_mul(p, q), r);
    HeisPoint rhs = group_mul(p, group_mul(q, r));
    CHECK(lhs.x == rhs.x);
    CHECK(lhs.t == rhs.t);
    HeisPoint e = group_mul(p, group_inverse(p));
    for (const auto& v : e.x) CHECK(v == Rational(0));
    CHECK(e.t == Rational(0));

    // The center commutes.
    HeisPoint z = heis_identity<Rational>(n);
    z.t = Rational(1);
    HeisPoint pz = group_mul(p, z);
    HeisPoint zp = group_mul(z, p);
    CHECK(pz.x == zp.x);
    CHECK(pz.t == zp.t);

    // Dilations are automorphisms.
    Rational s(3, 2);
    HeisPoint d1 = dilate(s, group_mul(p, q));
    HeisPoint d2 = group_mul(dilate(s, p), dilate(s, q));
    CHECK(d1.x == d2.x);
    CHECK(d1.t == d2.t);
  }
}

TEST_CASE("dilation basics") {
  HeisPoint p = pt({1, 1}, 1);
  HeisPoint q = dilate(Rational(2), p);
  CHECK(q.x[0] == Rational(2));
  CHECK(q.t == Rational(4));
  HeisPoint rs = dilate(Rational(3), dilate(Rational(1, 2), p));
  HeisPoint direct = dilate(Rational(3, 2), p);
  CHECK(rs.x == direct.x);
  CHECK(rs.t == direct.t);
  CHECK_THROWS_AS(dilate(Rational(0), p), PreconditionError);
}

TEST_CASE("contact factors of the closed family") {
  ContactMap shear = ContactMap::shear(1, 1, parse_univariate("x^2"));
  ContactFactorReport rep = contact_factor(shear);
  CHECK(rep.contact);
  CHECK(rep.lambda == Poly::constant(3, Rational(1)));

  ContactMap dil = ContactMap::dilation(1, Rational(2));
  ContactFactorReport drep = contact_factor(dil);
  CHECK(drep.contact);
  CHECK(drep.lambda == Poly::constant(3, Rational(4)));

  ContactMap tr = ContactMap::translation(pt({1, -2}, 3));
  CHECK(contact_factor(tr).contact);
  CHECK(contact_factor(tr).lambda == Poly::constant(3, Rational(1)));

  // (x, y, t) -> (x, y, t + x) is not contact; the residual is dx1.
  std::vector<Poly> comps = {Poly::variable(3, 0), Poly::variable(3, 1),
                             Poly::variable(3, 2) + Poly::variable(3, 0)};
  ContactMap raw = ContactMap::raw(1, comps);
  CHECK_FALSE(raw.in_closed_family());
  ContactFactorReport rrep = contact_factor(raw);
  CHECK_FALSE(rrep.contact);
  CHECK(rrep.residual.comp[0] == Poly::constant(3, Rational(1)));
  CHECK(rrep.residual.comp[1].is_zero());

  // Shears on even axes compensate with the opposite sign.
  ContactMap shear2 = ContactMap::shear(1, 2, parse_univariate("x^3 - x"));
  CHECK(contact_factor(shear2).contact);

  // Linear symplectic maps with multipliers.
  QMatrix a = QMatrix::identity(2);
  a.at(0, 1) = Rational(3);
  ContactMap lin = ContactMap::linear_symplectic(1, a);
  CHECK(contact_factor(lin).contact);
  QMatrix similitude = QMatrix::identity(2);
  similitude.at(0, 0) = Rational(2);  // multiplier 2 in rank 1
  CHECK_NOTHROW(ContactMap::linear_symplectic(1, similitude));
  QMatrix really_bad(2, 2);
  really_bad.at(0, 0) = Rational(1);
  really_bad.at(1, 0) = Rational(1);
  CHECK_THROWS_AS(ContactMap::linear_symplectic(1, really_bad), PreconditionError);
}

TEST_CASE("exact pansu differentials") {
  ContactMap shear = ContactMap::shear(1, 1, parse_univariate("x^2"));
  PansuDifferential d = pansu_exact(shear, pt({1, 0}, 0));
  CHECK(d.horizontal.at(0, 0) == Rational(1));
  CHECK(d.horizontal.at(0, 1) == Rational(0));
  CHECK(d.horizontal.at(1, 0) == Rational(2));
  CHECK(d.horizontal.at(1, 1) == Rational(1));
  CHECK(d.vertical == Rational(1));

  ContactMap tr = ContactMap::translation(pt({1, 2}, -1));
  PansuDifferential dt = pansu_exact(tr, pt({5, 7}, 9));
  CHECK(dt.horizontal == QMatrix::identity(2));
  CHECK(dt.vertical == Rational(1));

  ContactMap dil = ContactMap::dilation(2, Rational(3));
  PansuDifferential dd = pansu_exact(dil, heis_identity<Rational>(2));
  for (int i = 0; i < 4; ++i) CHECK(dd.horizontal.at(i, i) == Rational(3));
  CHECK(dd.vertical == Rational(9));
}

TEST_CASE("pansu differentials are graded homs satisfying the multiple property") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.uniform(1, 2);
    ContactMap f = random_contact_map(rng, n);
    Box box = Box::cube(2 * n + 1, Rational(-1), Rational(1));
    HeisPoint p = random_point_in_box(rng, box);
    PansuDifferential d = pansu_exact(f, p);
    GradedHom hom = d.to_graded_hom(n);
    CHECK(check_graded_hom(hom).valid());
    JHypothesisResult j = j_hypothesis_check(hom);
    CHECK(j.multiple);
    CHECK(*j.factor == d.vertical);
  }
}

TEST_CASE("numeric pansu differentials converge at first order") {
  // Dilations are reproduced exactly at every scale.
  ContactMap dil = ContactMap::dilation(1, Rational(2));
  HeisPointD p{{0.3, -0.7}, 0.11};
  PansuNumericReport rep = pansu_numeric(dil, p);
  CHECK_FALSE(rep.diverged);
  CHECK(rep.errors_all_zero);
  CHECK(rep.horizontal[0][0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.vertical == doctest::Approx(4.0).epsilon(1e-6));

  // Translations are Pansu-linear: identity differential everywhere.
  ContactMap tr = ContactMap::translation(pt({1, 2}, 3));
  PansuNumericReport trep = pansu_numeric(tr, p);
  CHECK(trep.errors_all_zero);
  CHECK(trep.horizontal[0][1] == doctest::Approx(0.0));
  CHECK(trep.horizontal[1][1] == doctest::Approx(1.0));

  // The shear converges with slope ~1 and a tiny extrapolated error.
  ContactMap shear = ContactMap::shear(1, 1, parse_univariate("x^2"));
  HeisPointD q{{1.0, 0.0}, 0.0};
  PansuNumericReport srep = pansu_numeric(shear, q);
  CHECK_FALSE(srep.diverged);
  CHECK(srep.slope >= 0.999999);
  PansuDifferential exact = pansu_exact(shear, pt({1, 0}, 0));
  double err = std::abs(srep.horizontal[1][0] - exact.horizontal.at(1, 0).to_double());
  CHECK(err <= 1e-6);

  // Richardson halving: the extrapolant beats the raw scale-1e-3 estimate
  // by at least 10x against the exact differential.
  PansuNumericReport pair = pansu_numeric(shear, q, {1e-3, 5e-4});
  double raw_err = 0, extrap_err = 0;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      double exact_ji = exact.horizontal.at(j, i).to_double();
      raw_err = std::max(raw_err, std::abs(pair.horizontal_at_scale[0][j][i] - exact_ji));
      extrap_err = std::max(extrap_err, std::abs(pair.horizontal[j][i] - exact_ji));
    }
  CHECK(extrap_err * 10.0 <= raw_err + 1e-15);
  CHECK(extrap_err <= 1e-6);

  // A genuinely non-contact map produces a divergence report.
  std::vector<Poly> comps = {Poly::variable(3, 0), Poly::variable(3, 1),
                             Poly::variable(3, 2) + Poly::variable(3, 0)};
  ContactMap bad = ContactMap::raw(1, comps);
  PansuNumericReport brep = pansu_numeric(bad, p);
  CHECK(brep.diverged);
}

TEST_CASE("pansu pullback worked values") {
  // Dilation scales theta_{13} by r^3 (weights -1 and -2).
  ContactMap dil = ContactMap::dilation(1, Rational(2));
  CHECK(pansu_pullback(dil, parse_poly_form(1, "th[1,3]", 2)) ==
        parse_poly_form(1, "8*th[1,3]", 2));

  // Shears fix the contact form.
  ContactMap shear = ContactMap::shear(1, 1, parse_univariate("x^2"));
  CHECK(pansu_pullback(shear, parse_poly_form(1, "th[3]", 1)) ==
        parse_poly_form(1, "th[3]", 1));

  // Translations compose coefficients and fix invariant parts.
  ContactMap tr = ContactMap::translation(pt({1, 0}, 0));
  CHECK(pansu_pullback(tr, parse_poly_form(1, "x1*th[1]", 1)) ==
        parse_poly_form(1, "x1*th[1] + th[1]", 1));
}

TEST_CASE("pansu pullback is functorial and multiplicative") {
  Rng rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    int n = rng.uniform(1, 2);
    ContactMap f = random_contact_map(rng, n, 2);
    ContactMap g = random_contact_map(rng, n, 2);
    PolyForm w = random_poly_form(rng, n, rng.uniform(0, 2), 2);
    CHECK(pansu_pullback(f.compose(g), w) == pansu_pullback(g, pansu_pullback(f, w)));

    PolyForm v = random_poly_form(rng, n, rng.uniform(0, 2), 2);
    CHECK(pansu_pullback(f, wedge(w, v)) ==
          wedge(pansu_pullback(f, w), pansu_pullback(f, v)));
  }
}

TEST_CASE("coordinate model verifies for every rank in use") {
  for (int n = 1; n <= 4; ++n) CHECK_NOTHROW(verify_coordinate_model(n));
}

TEST_CASE("map literals parse into the closed family") {
  ContactMap m = parse_contact_map(1, "compose(shear:j=1,p=x^2; dilate:3/2)");
  CHECK(m.in_closed_family());
  // Composition applies the dilation first.
  HeisPoint p = pt({2, 0}, 0);
  HeisPoint expect = ContactMap::shear(1, 1, parse_univariate("x^2"))
                         .apply(ContactMap::dilation(1, Rational(3, 2)).apply(p));
  HeisPoint got = m.apply(p);
  CHECK(got.x == expect.x);
  CHECK(got.t == expect.t);

  ContactMap tr = parse_contact_map(1, "translate:1,0,-1/2");
  CHECK(contact_factor(tr).contact);
  CHECK_THROWS_AS(parse_contact_map(1, "translate:1,0"), ParseError);
  CHECK_THROWS_AS(parse_contact_map(1, "warp:2"), ParseError);
  CHECK_THROWS_AS(parse_contact_map(1, "shear:j=1"), ParseError);
  CHECK(parse_contact_map(2, "identity").in_closed_family());
}
