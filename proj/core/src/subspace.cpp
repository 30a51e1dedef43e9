#include "rumin/subspace.hpp"

#include <algorithm>
#include <map>

#include "rumin/errors.hpp"
#include "rumin/qmatrix.hpp"

namespace rumin {

InvariantForm SubspaceBasis::reduce(const InvariantForm& w) const {
  if (w.ambient() != ambient_) throw DimensionError("ambient mismatch in reduce");
  if (w.degree() != degree_) throw DegreeError("degree mismatch in reduce");
  InvariantForm out = w;
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational c = out.coeff(pivots_[r]);
    if (c.is_zero()) continue;
    out -= c * rows_[r];
  }
  return out;
}

std::vector<MultiIndex> SubspaceBasis::complement_monomials() const {
  std::vector<MultiIndex> out;
  size_t next_pivot = 0;
  for (const MultiIndex& m : monomials_of_degree(ambient_, degree_)) {
    if (next_pivot < pivots_.size() && pivots_[next_pivot] == m) {
      ++next_pivot;
      continue;
    }
    out.push_back(m);
  }
  return out;
}

SubspaceBasis span_reduce(std::vector<InvariantForm> gens) {
  std::erase_if(gens, [](const InvariantForm& f) { return f.is_zero(); });
  if (gens.empty()) return SubspaceBasis();
  int ambient = gens.front().ambient();
  int degree = gens.front().degree();
  return span_reduce(std::move(gens), ambient, degree);
}

SubspaceBasis span_reduce(std::vector<InvariantForm> gens, int ambient, int degree) {
  std::erase_if(gens, [](const InvariantForm& f) { return f.is_zero(); });
  for (const auto& g : gens) {
    if (g.ambient() != ambient) throw DimensionError("mixed ambient dimensions in span_reduce");
    if (g.degree() != degree) throw DegreeError("mixed degrees in span_reduce");
  }
  SubspaceBasis basis(ambient, degree);
  // Gaussian elimination keyed by lex-smallest monomial.
  std::map<MultiIndex, InvariantForm> rows;  // pivot -> row with that pivot, coefficient 1
  for (InvariantForm g : gens) {
    while (!g.is_zero()) {
      MultiIndex pivot = g.terms().begin()->first;
      auto it = rows.find(pivot);
      if (it == rows.end()) {
        g *= Rational(1) / g.terms().begin()->second;
        rows.emplace(pivot, std::move(g));
        break;
      }
      g -= g.terms().begin()->second * it->second;
    }
  }
  // Back-substitute to clear pivot monomials from the other rows.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (auto& [pivot, row] : rows) {
      if (pivot == it->first) continue;
      Rational c = row.coeff(it->first);
      if (!c.is_zero()) row -= c * it->second;
    }
  }
  for (auto& [pivot, row] : rows) {
    basis.pivots_.push_back(pivot);
    basis.rows_.push_back(std::move(row));
  }
  return basis;
}

SubspaceBasis annihilator(const std::vector<InvariantForm>& gens, int ambient, int target_degree) {
  if (target_degree < 0 || target_degree > ambient)
    throw DegreeError("annihilator target degree out of range");
  std::vector<MultiIndex> cols = monomials_of_degree(ambient, target_degree);
  std::map<MultiIndex, int> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  // One equation block per generator: rows indexed by monomials of
  // degree target_degree + deg g in the wedge theta_M ^ g.
  std::vector<std::vector<Rational>> eqs;
  for (const InvariantForm& g : gens) {
    if (g.ambient() != ambient) throw DimensionError("generator ambient mismatch in annihilator");
    if (g.is_zero()) continue;
    std::map<MultiIndex, std::vector<Rational>> block;  // output monomial -> equation row
    for (size_t m = 0; m < cols.size(); ++m) {
      InvariantForm w = wedge(InvariantForm::monomial(ambient, cols[m]), g);
      for (const auto& [K, c] : w.terms()) {
        auto [it, ins] = block.emplace(K, std::vector<Rational>(cols.size()));
        it->second[m] += c;
      }
    }
    for (auto& [K, row] : block) eqs.push_back(std::move(row));
  }

  if (eqs.empty()) {
    // Vacuous conditions: the annihilator is everything.
    std::vector<InvariantForm> all;
    for (const auto& m : cols) all.push_back(InvariantForm::monomial(ambient, m));
    return span_reduce(std::move(all), ambient, target_degree);
  }

  QMatrix a(static_cast<int>(eqs.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < eqs.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) a.at(static_cast<int>(r), static_cast<int>(c)) = eqs[r][c];

  std::vector<InvariantForm> kernel_forms;
  for (const auto& v : a.kernel_basis()) {
    InvariantForm f(ambient, target_degree);
    for (size_t c = 0; c < cols.size(); ++c) f.add_term(cols[c], v[c]);
    kernel_forms.push_back(std::move(f));
  }
  return span_reduce(std::move(kernel_forms), ambient, target_degree);
}

SubspaceBasis annihilator(const SubspaceBasis& s, int target_degree) {
  return annihilator(s.rows(), s.ambient(), target_degree);
}

}  // namespace rumin
