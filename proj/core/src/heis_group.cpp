#include "rumin/heis_group.hpp"

// Header-only templates; this unit exists to anchor the module and force an
// instantiation error early if the templates regress.

namespace rumin {
namespace {

[[maybe_unused]] HeisPoint instantiate_rational() {
  return group_mul(heis_identity<Rational>(1), heis_identity<Rational>(1));
}

[[maybe_unused]] HeisPointD instantiate_double() {
  return dilate(2.0, heis_identity<double>(1));
}

}  // namespace
}  // namespace rumin
