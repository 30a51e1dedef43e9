#include "rumin/rumin_fibers.hpp"

#include <algorithm>

#include "rumin/errors.hpp"

namespace rumin {

SubspaceBasis ideal_I_fiber(const GradedAlgebra& g, int k) {
  int N = g.dim();
  if (k < 0 || k > N) throw DegreeError("ideal fiber degree out of range");
  std::vector<InvariantForm> gens;
  for (int i : g.indices_geq2()) {
    InvariantForm theta_i = InvariantForm::monomial(N, {i});
    for (const auto& m : monomials_of_degree(N, k - 1))
      gens.push_back(wedge(theta_i, InvariantForm::monomial(N, m)));
    const InvariantForm& di = g.dtheta(i);
    if (!di.is_zero()) {
      for (const auto& m : monomials_of_degree(N, k - 2))
        gens.push_back(wedge(di, InvariantForm::monomial(N, m)));
    }
  }
  return span_reduce(std::move(gens), N, k);
}

SubspaceBasis ideal_J_fiber(const GradedAlgebra& g, int k) {
  int N = g.dim();
  if (k < 0 || k > N) throw DegreeError("ideal fiber degree out of range");
  std::vector<InvariantForm> gens;
  for (int i : g.indices_geq2()) {
    gens.push_back(InvariantForm::monomial(N, {i}));
    if (!g.dtheta(i).is_zero()) gens.push_back(g.dtheta(i));
  }
  SubspaceBasis basis = annihilator(gens, N, k);

  // Every element must be divisible by theta_{I_{>=2}}.
  const std::vector<int>& geq2 = g.indices_geq2();
  for (const InvariantForm& row : basis.rows()) {
    for (const auto& [J, c] : row.terms()) {
      if (!std::includes(J.begin(), J.end(), geq2.begin(), geq2.end()))
        throw InternalError("J fiber element not divisible by theta_{I>=2}: " + row.to_string());
    }
  }
  return basis;
}

RuminFiber rumin_fiber(const GradedAlgebra& heis, int k) {
  auto n = heis.heisenberg_rank();
  if (!n) throw PreconditionError("rumin_fiber requires a Heisenberg algebra");
  if (k < 0 || k > heis.dim()) throw DegreeError("fiber degree out of range");
  RuminFiber fiber;
  fiber.k = k;
  fiber.ideal_basis = ideal_I_fiber(heis, k);
  fiber.complement = fiber.ideal_basis.complement_monomials();
  if (k <= *n) {
    fiber.kind = RuminFiber::Kind::quotient;
    std::vector<InvariantForm> rows;
    for (const auto& m : fiber.complement)
      rows.push_back(InvariantForm::monomial(heis.dim(), m));
    fiber.basis = span_reduce(std::move(rows), heis.dim(), k);
  } else {
    fiber.kind = RuminFiber::Kind::ideal;
    fiber.basis = ideal_J_fiber(heis, k);
  }
  return fiber;
}

LefschetzReport lefschetz(int n, int k) {
  if (n < 1) throw PreconditionError("heisenberg rank must be >= 1");
  if (k < 0 || k > 2 * n) throw DegreeError("lefschetz degree out of range 0..2n");
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  const InvariantForm& w = g.dtheta(2 * n + 1);

  std::vector<MultiIndex> source = monomials_of_degree(2 * n, k);
  std::vector<MultiIndex> target = monomials_of_degree(2 * n, k + 2);
  std::map<MultiIndex, int> row_of;
  for (size_t i = 0; i < target.size(); ++i) row_of[target[i]] = static_cast<int>(i);

  LefschetzReport report;
  report.n = n;
  report.k = k;
  report.dim_source = static_cast<int>(source.size());
  report.dim_target = static_cast<int>(target.size());
  report.matrix = QMatrix(report.dim_target, report.dim_source);
  for (size_t c = 0; c < source.size(); ++c) {
    InvariantForm img = wedge(w, InvariantForm::monomial(g.dim(), source[c]));
    for (const auto& [J, v] : img.terms()) {
      // Horizontal input against the horizontal 2-form keeps indices <= 2n.
      report.matrix.at(row_of.at(J), static_cast<int>(c)) = v;
    }
  }
  report.rank = report.matrix.rank();
  report.injective = report.rank == report.dim_source;
  report.surjective = report.rank == report.dim_target;
  return report;
}

PairingReport duality_pairing(const GradedAlgebra& heis, int k) {
  auto n = heis.heisenberg_rank();
  if (!n) throw PreconditionError("duality_pairing requires a Heisenberg algebra");
  if (k < 0 || k > *n) throw DegreeError("duality pairing needs 0 <= k <= n");
  int N = heis.dim();

  std::vector<MultiIndex> complement = ideal_I_fiber(heis, k).complement_monomials();
  SubspaceBasis j_basis = ideal_J_fiber(heis, N - k);
  if (static_cast<int>(complement.size()) != j_basis.dim())
    throw InternalError("duality pairing is not square");

  MultiIndex top(N);
  for (int i = 0; i < N; ++i) top[i] = i + 1;

  PairingReport report;
  report.k = k;
  report.matrix = QMatrix(static_cast<int>(complement.size()), j_basis.dim());
  for (size_t r = 0; r < complement.size(); ++r) {
    InvariantForm left = InvariantForm::monomial(N, complement[r]);
    for (int c = 0; c < j_basis.dim(); ++c)
      report.matrix.at(static_cast<int>(r), c) = wedge(left, j_basis.rows()[c]).coeff(top);
  }
  report.det = report.matrix.determinant();
  report.nondegenerate = !report.det.is_zero();
  return report;
}

std::vector<int> rumin_fiber_dims(int n) {
  if (n < 1) throw PreconditionError("heisenberg rank must be >= 1");
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  std::vector<int> dims;
  for (int k = 0; k <= g.dim(); ++k) {
    if (k <= n)
      dims.push_back(static_cast<int>(binomial(g.dim(), k)) - ideal_I_fiber(g, k).dim());
    else
      dims.push_back(ideal_J_fiber(g, k).dim());
  }
  return dims;
}

WeightCheck weight_codegree_check(const GradedAlgebra& g, int k) {
  WeightCheck check;
  SubspaceBasis basis = ideal_J_fiber(g, k);
  if (basis.dim() == 0) {
    check.vacuous = true;
    check.detail = "J fiber is zero in degree " + std::to_string(k);
    return check;
  }
  int want = -g.nu() + g.dim() - k;
  for (const InvariantForm& row : basis.rows()) {
    auto w = weight_of(g, row);
    if (!w || *w != want) {
      check.pass = false;
      check.detail = "wt(" + row.to_string() + ") = " +
                     (w ? std::to_string(*w) : std::string("undefined")) + ", expected " +
                     std::to_string(want);
      return check;
    }
  }
  return check;
}

}  // namespace rumin
