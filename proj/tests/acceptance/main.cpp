// Acceptance suite: every stated criterion runs standalone, prints one
// PASS/FAIL line, and the process exits with the number of failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rumin/generators.hpp"
#include "rumin/literals.hpp"
#include "rumin/theorems.hpp"

using namespace rumin;

namespace {

struct Criterion {
  int id;
  std::string name;
  double time_cap_s;  // <= 0 means no cap
  std::function<bool(std::string&)> run;
};

bool check_complex_axioms(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    GradedAlgebra g = GradedAlgebra::heisenberg(n);
    for (int k = 0; k <= g.dim(); ++k) {
      for (const MultiIndex& m : monomials_of_degree(g.dim(), k)) {
        InvariantForm f = InvariantForm::monomial(g.dim(), m);
        if (!d_invariant(g, d_invariant(g, f)).is_zero()) {
          detail = "d(d theta_J) != 0 at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

bool check_lefschetz_thresholds(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 2 * n; ++k) {
      LefschetzReport rep = lefschetz(n, k);
      if (rep.injective != (k <= n - 1) || rep.surjective != (k >= n - 1)) {
        detail = "threshold violated at n=" + std::to_string(n) + ", k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

bool check_duality(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    GradedAlgebra g = GradedAlgebra::heisenberg(n);
    std::vector<int> dims = rumin_fiber_dims(n);
    for (int k = 0; k <= n; ++k) {
      PairingReport rep = duality_pairing(g, k);
      if (rep.matrix.rows() != rep.matrix.cols() || !rep.nondegenerate) {
        detail = "degenerate pairing at n=" + std::to_string(n) + ", k=" + std::to_string(k);
        return false;
      }
      long formula = binomial(2 * n, k) - binomial(2 * n, k - 2);
      int quotient_dim = static_cast<int>(binomial(g.dim(), k)) - ideal_I_fiber(g, k).dim();
      int annihilator_dim = ideal_J_fiber(g, g.dim() - k).dim();
      if (formula != quotient_dim || formula != annihilator_dim || dims[k] != formula) {
        detail = "dimension formula mismatch at n=" + std::to_string(n) + ", k=" +
                 std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

bool check_weight_formula(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    GradedAlgebra g = GradedAlgebra::heisenberg(n);
    for (int k = 0; k <= g.dim(); ++k) {
      WeightCheck w = weight_codegree_check(g, k);
      if (!w.pass) {
        detail = "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": " + w.detail;
        return false;
      }
    }
  }
  return true;
}

bool check_rumin_complex(std::string& detail) {
  // Worked value first: d_1(t theta_1) = (3/2) theta_3 ^ theta_1.
  const RuminComplex& rc1 = RuminComplex::get(1);
  InvariantForm expected_inv =
      Rational(3, 2) * wedge(InvariantForm::monomial(3, {3}), InvariantForm::monomial(3, {1}));
  PolyForm expected = PolyForm::from_invariant(1, expected_inv);
  if (!(rc1.rumin_d(1, parse_poly_form(1, "t*th[1]", 1)) == expected)) {
    detail = "worked value d_1(t theta_1) not reproduced";
    return false;
  }

  Rng rng(2024);
  int instances = 0;
  for (int n = 1; n <= 2; ++n) {
    const RuminComplex& rc = RuminComplex::get(n);
    int per_degree = (n == 1) ? 25 : 13;
    for (int k = 0; k < 2 * n; ++k) {
      for (int t = 0; t < per_degree; ++t) {
        PolyForm w = random_rumin_rep(rng, rc, k, 3);
        PolyForm dw = rc.rumin_d(k, w);
        if (!rc.rumin_d(k + 1, dw).is_zero()) {
          detail = "d_{k+1} d_k != 0 at n=" + std::to_string(n) + ", k=" + std::to_string(k);
          return false;
        }
        if (!rc.lift_system_injective()) {
          detail = "lift system lost injectivity";
          return false;
        }
        if (k <= n) {
          // Representative independence under a random pointwise I^k shift.
          PolyForm iota(n, k);
          for (const InvariantForm& row : rc.fiber(k).ideal_basis.rows()) {
            if (!rng.chance(1, 2)) continue;
            iota += PolyForm::from_invariant(n, row).scaled(random_poly(rng, 2 * n + 1, 3));
          }
          if (!(rc.rumin_d(k, w + iota) == dw)) {
            detail = "representative dependence at n=" + std::to_string(n) + ", k=" +
                     std::to_string(k);
            return false;
          }
        }
        ++instances;
      }
    }
  }
  if (instances < 100) {
    detail = "only " + std::to_string(instances) + " instances";
    return false;
  }
  return true;
}

bool check_weak_identities(std::string& detail) {
  Rng rng(2025);
  int pairs = 0;
  // n = 1: all three cases (k = 0 low, 1 middle, 2 high).
  {
    const RuminComplex& rc = RuminComplex::get(1);
    Box box = Box::cube(3, Rational(0), Rational(1));
    for (int k = 0; k <= 2; ++k) {
      for (int t = 0; t < 10; ++t) {
        PolyForm beta = random_rumin_rep(rng, rc, k, 2);
        PolyForm gamma = rc.rumin_d(k, beta);
        BumpForm eta = (k > 1) ? random_eta_arbitrary(rng, rc, 2 - k, box, 1)
                               : random_rumin_eta(rng, rc, 2 - k, box, 1);
        Rational residual = weak_identity_check(rc, k, beta, gamma, eta, box);
        if (!residual.is_zero()) {
          detail = "nonzero residual at n=1, k=" + std::to_string(k) + ": " +
                   residual.to_string();
          return false;
        }
        ++pairs;
      }
    }

    // Falsification direction: a perturbed gamma is detected quickly.
    PolyForm beta = parse_poly_form(1, "t*th[1]", 1);
    PolyForm wrong_gamma = rc.rumin_d(1, beta) + parse_poly_form(1, "th[1,3]", 2);
    bool detected = false;
    for (int t = 0; t < 20 && !detected; ++t) {
      BumpForm eta = random_rumin_eta(rng, rc, 1, box, 1);
      detected = !weak_identity_check(rc, 1, beta, wrong_gamma, eta, box).is_zero();
    }
    if (!detected) {
      detail = "perturbed differential went undetected in 20 test forms";
      return false;
    }
  }
  // n = 2: low case (k = 0, 1) and high case (k = 3, 4).
  {
    const RuminComplex& rc = RuminComplex::get(2);
    Box box = Box::cube(5, Rational(0), Rational(1));
    for (int k : {0, 1, 3, 4}) {
      for (int t = 0; t < 6; ++t) {
        PolyForm beta = random_rumin_rep(rng, rc, k, 1);
        PolyForm gamma = rc.rumin_d(k, beta);
        BumpForm eta = (k > 2) ? random_eta_arbitrary(rng, rc, 4 - k, box, 1)
                               : random_rumin_eta(rng, rc, 4 - k, box, 1);
        Rational residual = weak_identity_check(rc, k, beta, gamma, eta, box);
        if (!residual.is_zero()) {
          detail = "nonzero residual at n=2, k=" + std::to_string(k) + ": " +
                   residual.to_string();
          return false;
        }
        ++pairs;
      }
    }
  }
  if (pairs < 50) {
    detail = "only " + std::to_string(pairs) + " pairs";
    return false;
  }
  return true;
}

bool check_j_theorem(std::string& detail) {
  Rng rng(2026);
  int instances = 0;
  struct Slot {
    int n, k, count;
  };
  for (const Slot& slot : {Slot{1, 2, 30}, Slot{2, 3, 12}, Slot{2, 4, 12}}) {
    const RuminComplex& rc = RuminComplex::get(slot.n);
    Box box = Box::cube(2 * slot.n + 1, Rational(0), Rational(1));
    for (int t = 0; t < slot.count; ++t) {
      ContactMap f = random_contact_map(rng, slot.n, 2);
      PolyForm alpha = random_rumin_rep(rng, rc, slot.k, slot.n == 1 ? 2 : 1);
      BumpForm eta = random_eta_arbitrary(rng, rc, rc.N() - slot.k - 1, box, 1);
      Rational residual = theorem_j_check(rc, f, slot.k, alpha, eta, box);
      if (!residual.is_zero()) {
        detail = "nonzero residual at n=" + std::to_string(slot.n) + ", k=" +
                 std::to_string(slot.k) + ": " + residual.to_string();
        return false;
      }
      ++instances;
    }
  }
  if (instances < 50) {
    detail = "only " + std::to_string(instances) + " instances";
    return false;
  }
  return true;
}

bool check_chain_theorem(std::string& detail) {
  Rng rng(2027);
  // n = 1: fifty instances for every degree.
  {
    const RuminComplex& rc = RuminComplex::get(1);
    Box box = Box::cube(3, Rational(0), Rational(1));
    for (int k = 0; k <= 2; ++k) {
      for (int t = 0; t < 50; ++t) {
        ContactMap f = random_contact_map(rng, 1, 2);
        PolyForm alpha = random_rumin_rep(rng, rc, k, 2);
        BumpForm eta = random_rumin_eta(rng, rc, 2 - k, box, 1);
        Rational residual = rumin_chain_check(rc, f, k, alpha, eta, box);
        if (!residual.is_zero()) {
          detail = "nonzero residual at n=1, k=" + std::to_string(k) + ", trial " +
                   std::to_string(t) + ": " + residual.to_string();
          return false;
        }
      }
    }
  }
  // n = 2: spot checks across every degree.
  {
    const RuminComplex& rc = RuminComplex::get(2);
    Box box = Box::cube(5, Rational(0), Rational(1));
    for (int k = 0; k <= 4; ++k) {
      for (int t = 0; t < 2; ++t) {
        ContactMap f = random_contact_map(rng, 2, 2);
        PolyForm alpha = random_rumin_rep(rng, rc, k, 1);
        BumpForm eta = random_rumin_eta(rng, rc, 4 - k, box, 1);
        Rational residual = rumin_chain_check(rc, f, k, alpha, eta, box);
        if (!residual.is_zero()) {
          detail = "nonzero residual at n=2, k=" + std::to_string(k) + ": " +
                   residual.to_string();
          return false;
        }
      }
    }
  }
  return true;
}

bool check_pansu_numeric(std::string& detail) {
  Rng rng(2028);
  for (int inst = 0; inst < 5; ++inst) {
    int n = 1 + inst % 2;
    int axis = rng.uniform(1, 2 * n);
    Poly p(1);
    p.add_term({2}, rng.nonzero_rational(2));
    if (rng.chance(1, 2)) p.add_term({1}, rng.rational(2));
    ContactMap f = ContactMap::shear(n, axis, p);
    Box box = Box::cube(2 * n + 1, Rational(-1), Rational(1));
    HeisPoint q = random_point_in_box(rng, box);
    PansuDifferential exact = pansu_exact(f, q);
    HeisPointD qd;
    for (const auto& v : q.x) qd.x.push_back(v.to_double());
    qd.t = q.t.to_double();
    PansuNumericReport rep = pansu_numeric(f, qd);
    double err = std::abs(rep.vertical - exact.vertical.to_double());
    for (int j = 0; j < 2 * n; ++j)
      for (int i = 0; i < 2 * n; ++i)
        err = std::max(err, std::abs(rep.horizontal[j][i] - exact.horizontal.at(j, i).to_double()));
    if (err > 1e-6) {
      detail = "extrapolated error " + std::to_string(err);
      return false;
    }
    if (!rep.errors_all_zero && rep.slope < 1.0 - 1e-6) {
      detail = "observed order " + std::to_string(rep.slope) + " < 1.0";
      return false;
    }
  }
  return true;
}

bool check_hypothesis_machinery(std::string& detail) {
  Rng rng(2029);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 3;
    GradedHom hom = random_valid_endomorphism(rng, n);
    if (!check_graded_hom(hom).valid()) {
      detail = "generator produced an invalid endomorphism";
      return false;
    }
    if (!j_hypothesis_check(hom).multiple) {
      detail = "valid endomorphism failed the multiple property";
      return false;
    }
  }

  // The product projection witness must fail the multiple property.
  GradedAlgebra h1 = GradedAlgebra::heisenberg(1);
  GradedAlgebra prod = GradedAlgebra::product(h1, h1);
  AlgebraMap proj;
  proj.source_dim = 6;
  proj.target_dim = 3;
  proj.images = {InvariantForm::monomial(6, {1}), InvariantForm::monomial(6, {2}),
                 InvariantForm::monomial(6, {5})};
  GradedHom projection{prod, h1, std::move(proj)};
  if (!check_graded_hom(projection).valid()) {
    detail = "projection witness unexpectedly invalid";
    return false;
  }
  if (j_hypothesis_check(projection).multiple) {
    detail = "projection witness not rejected";
    return false;
  }

  // Dimension criterion against the remark's inequality.
  GradedAlgebra h2 = GradedAlgebra::heisenberg(2);
  struct Pair {
    const GradedAlgebra& a;
    const GradedAlgebra& b;
    bool expect;
  };
  const Pair table[] = {{h1, h2, true},  {h2, h1, true},    {prod, h1, false},
                        {h1, prod, true}, {h1, h1, true},   {prod, prod, true}};
  for (const Pair& row : table) {
    if (dimension_criterion(row.a, row.b) != row.expect) {
      detail = "dimension criterion mismatch";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "complex axioms: d(d theta_J) = 0 for n <= 4", 10, check_complex_axioms},
      {2, "symplectic wedge maps: injectivity/surjectivity thresholds for n <= 4", 30,
       check_lefschetz_thresholds},
      {3, "duality pairings nondegenerate and dimension formulas agree for n <= 4", 0,
       check_duality},
      {4, "J-fiber weights equal -nu + N - k for n <= 4", 0, check_weight_formula},
      {5, "rumin differential: d^2 = 0, representative independence, unique lifts", 0,
       check_rumin_complex},
      {6, "weak identities: zero residuals and falsification direction", 0,
       check_weak_identities},
      {7, "pullback/derivative exchange on the differential ideal", 300, check_j_theorem},
      {8, "chain-map identity for pansu pullback", 600, check_chain_theorem},
      {9, "numeric pansu differentials: order >= 1, extrapolated error <= 1e-6", 10,
       check_pansu_numeric},
      {10, "hypothesis machinery: multiple property and dimension criterion", 0,
       check_hypothesis_machinery},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.time_cap_s > 0 && seconds > c.time_cap_s) {
      ok = false;
      detail = "exceeded time cap of " + std::to_string(c.time_cap_s) + " s";
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " ("
         << std::fixed << seconds << " s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
