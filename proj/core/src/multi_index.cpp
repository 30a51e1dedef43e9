#include "rumin/multi_index.hpp"

#include "rumin/errors.hpp"

namespace rumin {

std::pair<int, MultiIndex> normalize_monomial(std::span<const int> seq, int ambient_dim) {
  for (int i : seq) {
    if (i < 1 || i > ambient_dim)
      throw DimensionError("monomial index " + std::to_string(i) + " out of range 1.." +
                           std::to_string(ambient_dim));
  }
  MultiIndex out(seq.begin(), seq.end());
  int sign = 1;
  // Insertion sort; swap count parity is the permutation sign.
  for (size_t i = 1; i < out.size(); ++i) {
    int v = out[i];
    size_t j = i;
    while (j > 0 && out[j - 1] > v) {
      out[j] = out[j - 1];
      --j;
      sign = -sign;
    }
    out[j] = v;
  }
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) return {0, MultiIndex{}};
  return {sign, out};
}

int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& merged) {
  merged.clear();
  merged.reserve(a.size() + b.size());
  size_t ia = 0, ib = 0;
  long crossings = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;
    if (a[ia] < b[ib]) {
      merged.push_back(a[ia++]);
    } else {
      // b[ib] jumps over the remaining entries of a.
      crossings += static_cast<long>(a.size() - ia);
      merged.push_back(b[ib++]);
    }
  }
  while (ia < a.size()) merged.push_back(a[ia++]);
  while (ib < b.size()) merged.push_back(b[ib++]);
  return (crossings % 2 == 0) ? 1 : -1;
}

std::vector<MultiIndex> monomials_of_degree(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

}  // namespace rumin
