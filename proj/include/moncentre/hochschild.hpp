#pragma once

#include "moncentre/bilimits.hpp"
#include "moncentre/centre.hpp"
#include "moncentre/monoidal.hpp"

namespace moncentre {

using LazyDiagram = TruncatedCosimplicial<FunctorCategory, FunctorCategory>;

/// The truncated cosimplicial diagram A ⇉ [A, A] ⇛ [A×A, A] of a monoidal category:
///   d0(a) = a⊗−,  d1(a) = −⊗a,
///   e0(F) = F(x)⊗y,  e1(F) = F(x⊗y),  e2(F) = x⊗F(y),
/// with coherence cells α_{a,x,y}, α_{x,a,y}, α⁻¹_{x,y,a}. The functor
/// categories are never materialized.
struct HochschildDiagram {
  MonoidalPtr A;
  ProductCategory square;  // A × A
  LazyDiagram diagram;
};

/// Throws GuardExceeded when |Ob A| exceeds guards.hochschild_max_objects.
HochschildDiagram build_hochschild(const MonoidalPtr& A, const Guards& guards = {});

/// The same diagram with X1 and X2 fully enumerated; only feasible for tiny A.
DiagramData materialize_hochschild(const MonoidalPtr& A, const Guards& guards = {});

struct DescentCentreVerdict {
  std::size_t descent_objects = 0;
  std::size_t centre_objects = 0;
  bool pipeline_agrees = false;
  bool bijective_on_objects = false;  // comparison matches the canonical centre order
  Report comparison_report;
  EquivalenceVerdict verdict;
  bool equivalence() const { return pipeline_agrees && comparison_report.ok() && verdict.equivalence(); }
};

/// Compares the descent object of the diagram with compute_centre(A) through
/// (a, φ) ↦ (a, x ↦ φ_x).
DescentCentreVerdict verify_descent_equals_centre(const MonoidalPtr& A, const Guards& guards = {});

}  // namespace moncentre
