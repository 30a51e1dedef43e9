#include "rumin/graded_algebra.hpp"

#include <algorithm>

#include "rumin/errors.hpp"

namespace rumin {

GradedAlgebra::GradedAlgebra(std::vector<std::vector<int>> layers,
                             std::map<int, InvariantForm> dtheta)
    : layers_(std::move(layers)) {
  if (layers_.empty()) throw PreconditionError("algebra needs at least one layer");
  int expect = 1;
  for (size_t j = 0; j < layers_.size(); ++j) {
    if (layers_[j].empty()) throw PreconditionError("empty layer " + std::to_string(j + 1));
    for (int i : layers_[j]) {
      if (i != expect)
        throw PreconditionError("layers must partition 1..N contiguously in order");
      ++expect;
    }
  }
  n_ = expect - 1;
  layer_of_.assign(n_ + 1, 0);
  for (size_t j = 0; j < layers_.size(); ++j) {
    for (int i : layers_[j]) layer_of_[i] = static_cast<int>(j + 1);
    nu_ += static_cast<int>((j + 1) * layers_[j].size());
    if (j >= 1) geq2_.insert(geq2_.end(), layers_[j].begin(), layers_[j].end());
  }

  dtheta_.assign(n_ + 1, InvariantForm());
  for (int i = 1; i <= n_; ++i) dtheta_[i] = InvariantForm(n_, 2);
  for (auto& [i, form] : dtheta) {
    if (i < 1 || i > n_) throw DimensionError("dtheta index out of range");
    if (form.is_zero()) continue;
    if (form.degree() != 2 || form.ambient() != n_)
      throw DegreeError("dtheta entries must be degree-2 forms over the same basis");
    dtheta_[i] = form;
  }

  // Weight homogeneity: every monomial of dtheta_i has weight -layer(i).
  for (int i = 1; i <= n_; ++i) {
    int want = -layer_of_[i];
    for (const auto& [J, c] : dtheta_[i].terms()) {
      int w = 0;
      for (int idx : J) w -= layer_of_[idx];
      if (w != want)
        throw PreconditionError("dtheta_" + std::to_string(i) + " monomial of weight " +
                                std::to_string(w) + ", expected " + std::to_string(want));
    }
  }

  // Dual Jacobi identity: d extends to an antiderivation with d(d theta_i) = 0.
  for (int i = 1; i <= n_; ++i) {
    if (!d_invariant(*this, dtheta_[i]).is_zero())
      throw PreconditionError("d(d theta_" + std::to_string(i) +
                              ") != 0: table violates the Jacobi identity");
  }
}

GradedAlgebra GradedAlgebra::heisenberg(int n) {
  if (n < 1) throw PreconditionError("heisenberg rank must be >= 1");
  std::vector<int> v1(2 * n);
  for (int i = 0; i < 2 * n; ++i) v1[i] = i + 1;
  InvariantForm w(2 * n + 1, 2);
  for (int j = 1; j <= n; ++j) w.add_term({2 * j - 1, 2 * j}, Rational(1));
  std::map<int, InvariantForm> table;
  table.emplace(2 * n + 1, std::move(w));
  return GradedAlgebra({v1, {2 * n + 1}}, std::move(table));
}

GradedAlgebra GradedAlgebra::product(const GradedAlgebra& a, const GradedAlgebra& b) {
  size_t steps = std::max(a.layers_.size(), b.layers_.size());
  // New index of each factor's basis vector, levelwise with a's block first.
  std::vector<int> map_a(a.n_ + 1, 0), map_b(b.n_ + 1, 0);
  std::vector<std::vector<int>> layers(steps);
  int next = 1;
  for (size_t j = 0; j < steps; ++j) {
    if (j < a.layers_.size())
      for (int i : a.layers_[j]) {
        map_a[i] = next;
        layers[j].push_back(next++);
      }
    if (j < b.layers_.size())
      for (int i : b.layers_[j]) {
        map_b[i] = next;
        layers[j].push_back(next++);
      }
  }
  int total = next - 1;
  auto relabel = [total](const InvariantForm& f, const std::vector<int>& map) {
    InvariantForm out(total, f.degree());
    for (const auto& [J, c] : f.terms()) {
      std::vector<int> seq;
      seq.reserve(J.size());
      for (int i : J) seq.push_back(map[i]);
      auto [sign, M] = normalize_monomial(seq, total);
      out.add_term(M, sign < 0 ? -c : c);
    }
    return out;
  };
  std::map<int, InvariantForm> table;
  for (int i = 1; i <= a.n_; ++i)
    if (!a.dtheta_[i].is_zero()) table.emplace(map_a[i], relabel(a.dtheta_[i], map_a));
  for (int i = 1; i <= b.n_; ++i)
    if (!b.dtheta_[i].is_zero()) table.emplace(map_b[i], relabel(b.dtheta_[i], map_b));
  return GradedAlgebra(std::move(layers), std::move(table));
}

int GradedAlgebra::layer_of(int index) const {
  if (index < 1 || index > n_) throw DimensionError("basis index out of range");
  return layer_of_[index];
}

const InvariantForm& GradedAlgebra::dtheta(int index) const {
  if (index < 1 || index > n_) throw DimensionError("basis index out of range");
  return dtheta_[index];
}

InvariantForm GradedAlgebra::theta_geq2() const {
  return InvariantForm::monomial(n_, geq2_);
}

std::optional<int> GradedAlgebra::heisenberg_rank() const {
  if (layers_.size() != 2 || layers_[1].size() != 1 || layers_[0].size() % 2 != 0)
    return std::nullopt;
  int n = static_cast<int>(layers_[0].size()) / 2;
  if (!(*this == heisenberg(n))) return std::nullopt;
  return n;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  return a.layers_ == b.layers_ && a.dtheta_ == b.dtheta_;
}

GradedAlgebra make_heisenberg(int n) { return GradedAlgebra::heisenberg(n); }

InvariantForm d_invariant(const GradedAlgebra& g, const InvariantForm& w) {
  if (w.ambient() != g.dim()) throw DimensionError("form is not over the algebra's basis");
  InvariantForm out(g.dim(), w.degree() + 1);
  for (const auto& [J, c] : w.terms()) {
    // d(theta_J) = sum_i (-1)^(i-1) dtheta_{j_i} ^ theta_{J \ j_i}; the
    // degree-2 factor commutes past the leading 1-forms without signs.
    for (size_t i = 0; i < J.size(); ++i) {
      const InvariantForm& di = g.dtheta(J[i]);
      if (di.is_zero()) continue;
      MultiIndex rest;
      rest.reserve(J.size() - 1);
      for (size_t k = 0; k < J.size(); ++k)
        if (k != i) rest.push_back(J[k]);
      Rational sign_c = (i % 2 == 0) ? c : -c;
      out += sign_c * wedge(di, InvariantForm::monomial(g.dim(), rest));
    }
  }
  return out;
}

std::optional<int> weight_of(const GradedAlgebra& g, const InvariantForm& w) {
  if (w.ambient() != g.dim()) throw DimensionError("form is not over the algebra's basis");
  if (w.is_zero()) return std::nullopt;
  std::optional<int> best;
  for (const auto& [J, c] : w.terms()) {
    int s = 0;
    for (int i : J) s += g.weight_of_index(i);
    if (!best || s > *best) best = s;
  }
  return best;
}

}  // namespace rumin
