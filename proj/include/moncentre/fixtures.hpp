#pragma once

#include <string>
#include <vector>

#include "moncentre/centre.hpp"
#include "moncentre/monoidal.hpp"
#include "moncentre/veck.hpp"

namespace moncentre::fixtures {

MonoidalPtr z2_discrete();
MonoidalPtr z3_discrete();
MonoidalPtr z4_discrete();
MonoidalPtr s3_discrete();
MonoidalPtr poset_min();
/// Sign lines over Z2, all associator signs +1.
MonoidalPtr z2_signed();
/// Sign lines over Z2 with α_{a,a,a} = −1.
MonoidalPtr z2_signed_twisted();

/// Sign lines over Z3 with α_{1,1,1} = −1 only; not a cocycle, so the pentagon fails.
MonoidalPtr broken_pentagon();

/// A half-braiding on the unit of z2_signed() with γ_e = −1; multiplicativity fails at x = y = e.
CentreObject corrupted_half_braiding();

/// ω on Z3 equal to −1 at (1, 1, 1) and 1 elsewhere.
Cocycle3 z3_noncocycle();

/// Normalized 2-cochain on Z4 with μ(1,1) = i and 1 elsewhere.
std::vector<CycNumber> z4_cochain();
/// The trivial cocycle on Z4 multiplied by dμ for the cochain above.
Cocycle3 z4_twisted_by_coboundary();

/// Object (12) of the discrete S3 with every γ_x an identity; ill-typed where (12) and x do not commute.
CentreObject s3_identity_half_braiding();

}  // namespace moncentre::fixtures
