#pragma once

#include <span>
#include <utility>
#include <vector>

namespace rumin {

/// Strictly increasing sequence of 1-based basis indices; the empty sequence
/// is the degree-0 monomial. Ordered lexicographically (std::vector order).
using MultiIndex = std::vector<int>;

/// Sorts an arbitrary index sequence into a MultiIndex, returning the
/// permutation parity as +1/-1, or 0 when an index repeats (the MultiIndex is
/// then empty). Indices must lie in 1..ambient_dim.
std::pair<int, MultiIndex> normalize_monomial(std::span<const int> seq, int ambient_dim);

/// Parity sign of merging two disjoint strictly increasing sequences, i.e.
/// the sign of theta_a ^ theta_b relative to theta_{a union b}. Returns 0 if
/// the sequences share an index.
int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& merged);

/// All degree-k monomials over indices 1..n, in lexicographic order.
std::vector<MultiIndex> monomials_of_degree(int n, int k);

/// C(n, k) without overflow for the desk-scale sizes used here.
long binomial(int n, int k);

}  // namespace rumin
