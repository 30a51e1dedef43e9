#include <doctest.h>

#include "rumin/generators.hpp"
#include "rumin/literals.hpp"
#include "rumin/rumin_d.hpp"

using namespace rumin;

TEST_CASE("middle lift worked values on h_1") {
  const RuminComplex& rc = RuminComplex::get(1);

  PolyForm alpha = parse_poly_form(1, "t*th[1]", 1);
  PolyForm lift = rc.rumin_lift(alpha);
  CHECK(lift == parse_poly_form(1, "t*th[1] - 1/2*x1*th[3]", 1));
  CHECK(rc.in_J_pointwise(2, d_poly(lift)));

  PolyForm alpha2 = parse_poly_form(1, "x2*th[1]", 1);
  PolyForm lift2 = rc.rumin_lift(alpha2);
  CHECK(lift2 == parse_poly_form(1, "x2*th[1] + th[3]", 1));
  CHECK(d_poly(lift2).is_zero());

  PolyForm alpha3 = parse_poly_form(1, "th[1]", 1);
  CHECK(rc.rumin_lift(alpha3) == alpha3);

  // The lift correction lies in the I fiber pointwise.
  CHECK(rc.in_I_pointwise(1, lift - alpha));
  // Degree bound: the correction never exceeds the input degree.
  CHECK((lift - alpha).max_poly_degree() <= alpha.max_poly_degree());
  CHECK_THROWS_AS(rc.rumin_lift(alpha, 0), PreconditionError);
}

TEST_CASE("lift system is injective and respects degree bounds") {
  for (int n = 1; n <= 2; ++n) {
    const RuminComplex& rc = RuminComplex::get(n);
    CHECK(rc.lift_system_injective());
    Rng rng(73 + n);
    for (int trial = 0; trial < 20; ++trial) {
      PolyForm alpha = random_rumin_rep(rng, rc, n, 3);
      int bound = std::max(0, alpha.max_poly_degree());
      PolyForm lift = rc.rumin_lift(alpha, bound);
      CHECK(rc.in_J_pointwise(n + 1, d_poly(lift)));
      CHECK(rc.in_I_pointwise(n, lift - alpha));
    }
  }
}

TEST_CASE("middle lift worked value on h_2") {
  // alpha = t theta_{13}: d_H alpha = (1/2) x1 theta_{123} - (1/2) x3 theta_{134},
  // the inverse symplectic wedge gives a = -(1/2) x1 theta_3 + (1/2) x3 theta_1,
  // and d(alpha + theta_5 ^ a) collapses to 2 theta_{135}.
  const RuminComplex& rc = RuminComplex::get(2);
  PolyForm alpha = parse_poly_form(2, "t*th[1,3]", 2);
  PolyForm lift = rc.rumin_lift(alpha);
  CHECK(lift == parse_poly_form(2, "t*th[1,3] + 1/2*x1*th[3,5] - 1/2*x3*th[1,5]", 2));
  CHECK(rc.rumin_d(2, alpha) == parse_poly_form(2, "2*th[1,3,5]", 3));
}

TEST_CASE("rumin_d worked values") {
  const RuminComplex& rc = RuminComplex::get(1);
  // d_1(t theta_1) = (3/2) theta_3 ^ theta_1 = -(3/2) theta_{13}.
  CHECK(rc.rumin_d(1, parse_poly_form(1, "t*th[1]", 1)) ==
        parse_poly_form(1, "-3/2*th[1,3]", 2));
  CHECK(rc.rumin_d(1, parse_poly_form(1, "x2*th[1]", 1)).is_zero());
  CHECK(rc.rumin_d(2, parse_poly_form(1, "x2*th[1,3]", 2)) ==
        parse_poly_form(1, "-th[1,2,3]", 3));

  // d_0 is the horizontal gradient class.
  PolyForm d0 = rc.rumin_d(0, parse_poly_form(1, "t", 0));
  PolyForm expect(1, 1);
  expect.add_term({1}, Rational(1, 2) * Poly::variable(3, 1));
  expect.add_term({2}, Rational(-1, 2) * Poly::variable(3, 0));
  CHECK(d0 == expect);

  // Membership is enforced above the middle.
  CHECK_THROWS_AS(rc.rumin_d(2, parse_poly_form(1, "th[1,2]", 2)), MembershipError);
  // The top differential is zero.
  CHECK(rc.rumin_d(3, parse_poly_form(1, "x1*th[1,2,3]", 3)).is_zero());
}

TEST_CASE("rumin_d squares to zero on random representatives") {
  Rng rng(79);
  for (int n = 1; n <= 2; ++n) {
    const RuminComplex& rc = RuminComplex::get(n);
    for (int k = 0; k < 2 * n; ++k) {
      for (int trial = 0; trial < 12; ++trial) {
        PolyForm w = random_rumin_rep(rng, rc, k, 3);
        PolyForm dw = rc.rumin_d(k, w);
        CHECK(rc.rumin_d(k + 1, dw).is_zero());
      }
    }
  }
}

TEST_CASE("rumin_d is independent of the representative") {
  Rng rng(83);
  for (int n = 1; n <= 2; ++n) {
    const RuminComplex& rc = RuminComplex::get(n);
    for (int k = 0; k <= n; ++k) {
      const SubspaceBasis& ideal = rc.fiber(k).ideal_basis;
      for (int trial = 0; trial < 10; ++trial) {
        PolyForm w = random_rumin_rep(rng, rc, k, 2);
        // Perturb by a polynomial I^k element.
        PolyForm iota(n, k);
        for (const InvariantForm& row : ideal.rows()) {
          if (!rng.chance(1, 2)) continue;
          iota += PolyForm::from_invariant(n, row).scaled(random_poly(rng, 2 * n + 1, 2));
        }
        if (k == n) {
          // Middle degree: d_n of both representatives agree on the nose.
          CHECK(rc.rumin_d(n, w + iota) == rc.rumin_d(n, w));
        } else {
          // Below: outputs are canonical representatives, also equal.
          CHECK(rc.rumin_d(k, w + iota) == rc.rumin_d(k, w));
        }
      }
    }
  }
}

TEST_CASE("rank-indexed free functions mirror the complex methods") {
  PolyForm alpha = parse_poly_form(1, "t*th[1]", 1);
  CHECK(rumin_lift(1, alpha) == RuminComplex::get(1).rumin_lift(alpha));
  CHECK(rumin_d(1, 1, alpha) == RuminComplex::get(1).rumin_d(1, alpha));

  Box box = Box::cube(3, Rational(0), Rational(1));
  Rng rng(91);
  BumpForm eta = random_rumin_eta(rng, RuminComplex::get(1), 1, box, 1);
  PolyForm gamma = rumin_d(1, 1, alpha);
  CHECK(weak_identity_check(1, 1, alpha, gamma, eta, box) == Rational(0));

  CHECK_THROWS_AS(rumin_d(1, 5, alpha), DegreeError);
  CHECK_THROWS_AS(rumin_d(1, 2, alpha), DegreeError);  // degree mismatch with k
}

TEST_CASE("canonical representatives live on complement monomials") {
  Rng rng(89);
  const RuminComplex& rc = RuminComplex::get(2);
  for (int k = 0; k <= 2; ++k) {
    for (int trial = 0; trial < 8; ++trial) {
      PolyForm w = random_poly_form(rng, 2, k, 2);
      PolyForm rep = rc.canonical_rep(k, w);
      for (const auto& [J, c] : rep.terms()) {
        bool in_complement = false;
        for (const MultiIndex& m : rc.fiber(k).complement) in_complement |= (m == J);
        CHECK(in_complement);
      }
      // Reduction only changes w by an ideal element.
      CHECK(rc.in_I_pointwise(k, w - rep));
    }
  }
}
