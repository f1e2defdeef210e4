#include "moncentre/fixtures.hpp"

namespace moncentre::fixtures {

MonoidalPtr z2_discrete() { return discrete_group_monoidal(cyclic_group(2)); }
MonoidalPtr z3_discrete() { return discrete_group_monoidal(cyclic_group(3)); }
MonoidalPtr z4_discrete() { return discrete_group_monoidal(cyclic_group(4)); }
MonoidalPtr s3_discrete() { return discrete_group_monoidal(symmetric_group_3()); }
MonoidalPtr poset_min() { return poset_min_monoidal(); }

MonoidalPtr z2_signed() { return signed_group_monoidal(cyclic_group(2), std::vector<int>(8, 1)); }

MonoidalPtr z2_signed_twisted() {
  std::vector<int> sign(8, 1);
  sign[7] = -1;
  return signed_group_monoidal(cyclic_group(2), sign);
}

MonoidalPtr broken_pentagon() {
  std::vector<int> sign(27, 1);
  sign[(1 * 3 + 1) * 3 + 1] = -1;
  return signed_group_monoidal(cyclic_group(3), sign);
}

CentreObject corrupted_half_braiding() {
  // automorphisms of g in z2_signed: 2g is +1, 2g+1 is −1
  return CentreObject{0, {1, 2}};
}

Cocycle3 z3_noncocycle() {
  Cocycle3 w = trivial_cocycle(cyclic_group(3));
  w.at(1, 1, 1) = CycNumber::integer(2, -1);
  return w;
}

std::vector<CycNumber> z4_cochain() {
  std::vector<CycNumber> mu(16, CycNumber::integer(4, 1));
  mu[1 * 4 + 1] = CycNumber::zeta(4, 1);
  return mu;
}

Cocycle3 z4_twisted_by_coboundary() { return twist_by_coboundary(trivial_cocycle(cyclic_group(4)), z4_cochain()); }

CentreObject s3_identity_half_braiding() {
  const Group g = symmetric_group_3();
  CentreObject o{1, {}};
  // discrete category: morphism id = object id
  for (int x = 0; x < g.order(); ++x) o.half_braiding.push_back(g.mul(1, x));
  return o;
}

}  // namespace moncentre::fixtures
