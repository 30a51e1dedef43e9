#pragma once

#include <vector>

#include "rumin/errors.hpp"
#include "rumin/rational.hpp"

namespace rumin {

/// Point of H_n: horizontal coordinates x_1..x_{2n} and vertical t. The
/// scalar is Rational for exact work and double for numeric estimation.
template <class S>
struct HeisPointT {
  std::vector<S> x;
  S t{};

  int rank() const { return static_cast<int>(x.size()) / 2; }
};

using HeisPoint = HeisPointT<Rational>;
using HeisPointD = HeisPointT<double>;

template <class S>
HeisPointT<S> heis_identity(int n) {
  return HeisPointT<S>{std::vector<S>(2 * n, S{}), S{}};
}

/// Standard symplectic form on the horizontal layer:
/// omega(x, y) = sum_j (x_{2j-1} y_{2j} - x_{2j} y_{2j-1}).
template <class S>
S symplectic_pairing(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size() || a.size() % 2 != 0)
    throw DimensionError("symplectic pairing needs matching even-dimensional vectors");
  S acc{};
  for (size_t j = 0; j + 1 < a.size(); j += 2)
    acc += a[j] * b[j + 1] - a[j + 1] * b[j];
  return acc;
}

/// Group law (x,t)(x',t') = (x + x', t + t' - omega(x,x')/2). The twist sign
/// is forced by the coordinate model: with theta_{2n+1} = dt +
/// (1/2) sum (x_{2j-1} dx_{2j} - x_{2j} dx_{2j-1}), this is the unique
/// bilinear twist making theta_{2n+1} left-invariant, so left translations
/// are contact maps with multiplier one.
template <class S>
HeisPointT<S> group_mul(const HeisPointT<S>& a, const HeisPointT<S>& b) {
  if (a.x.size() != b.x.size()) throw DimensionError("group elements of different rank");
  HeisPointT<S> out;
  out.x.resize(a.x.size());
  for (size_t i = 0; i < a.x.size(); ++i) out.x[i] = a.x[i] + b.x[i];
  S half = S(1) / S(2);
  out.t = a.t + b.t - half * symplectic_pairing(a.x, b.x);
  return out;
}

template <class S>
HeisPointT<S> group_inverse(const HeisPointT<S>& a) {
  HeisPointT<S> out;
  out.x.reserve(a.x.size());
  for (const S& v : a.x) out.x.push_back(-v);
  out.t = -a.t;
  return out;
}

/// Carnot dilation (x,t) -> (r x, r^2 t); a group automorphism. r = 0 is
/// rejected for the exact scalar type.
template <class S>
HeisPointT<S> dilate(const S& r, const HeisPointT<S>& p) {
  if constexpr (std::is_same_v<S, Rational>) {
    if (r.is_zero()) throw PreconditionError("dilation factor must be nonzero");
  }
  HeisPointT<S> out;
  out.x.reserve(p.x.size());
  for (const S& v : p.x) out.x.push_back(r * v);
  out.t = r * r * p.t;
  return out;
}

}  // namespace rumin
