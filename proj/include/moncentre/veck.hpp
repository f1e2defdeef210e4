#pragma once

#include <string>
#include <vector>

#include "moncentre/cyclo.hpp"
#include "moncentre/group.hpp"
#include "moncentre/parallel.hpp"
#include "moncentre/report.hpp"

namespace moncentre {

/// Scalar associator of Vec_G^ω: ω(g, h, k) for all triples, as roots of unity.
struct Cocycle3 {
  Group group;
  std::vector<CycNumber> omega;  // |G|³, index (g*n + h)*n + k

  const CycNumber& at(int g, int h, int k) const {
    const int n = group.order();
    return omega[(static_cast<std::size_t>(g) * n + h) * n + k];
  }
  CycNumber& at(int g, int h, int k) {
    const int n = group.order();
    return omega[(static_cast<std::size_t>(g) * n + h) * n + k];
  }
};

Cocycle3 trivial_cocycle(const Group& g);
/// Z2 = {e, a} with ω(a, a, a) = −1 and all other values 1.
Cocycle3 z2_nontrivial_cocycle();
/// ω · dμ with (dμ)(g,h,k) = μ(h,k) μ(g,hk) / (μ(gh,k) μ(g,h)); μ indexed g*n + h.
Cocycle3 twist_by_coboundary(const Cocycle3& w, const std::vector<CycNumber>& mu);

/// Normalization (ω = 1 when an argument is the unit), invertibility, and
///   ω(h,k,l) ω(g,hk,l) ω(g,h,k) = ω(gh,k,l) ω(g,h,kl).
Report check_cocycle(const Cocycle3& w);

/// Least m with every value an m-th root of unity; 0 if some value is not a root of unity.
int cocycle_order(const Cocycle3& w);
/// exponent(G) · cocycle_order(ω): every scalar the backend produces lies in ℚ(ζ_n).
int field_order(const Cocycle3& w);

/// Scalar in β_{xy}|g = s(g,x,y) · β_y|g' ∘ β_x|g, where g' = x⁻¹gx, g'' = y⁻¹g'y:
///   s(g,x,y) = ω(g,x,y)⁻¹ · ω(x,g',y) · ω(x,y,g'')⁻¹.
CycNumber multiplicativity_scalar(const Cocycle3& w, int g, int x, int y);

/// A G-graded space given by the grade of each basis vector.
struct GradedObject {
  std::vector<int> grades;

  int dim() const { return static_cast<int>(grades.size()); }
  /// Dimension of each homogeneous component.
  std::vector<int> dimension_vector(int group_order) const;
  static GradedObject from_dimensions(const std::vector<int>& dims);
};

/// A half-braiding on a graded space: β_x as a dim × dim matrix for every x,
/// sending grade g to grade x⁻¹gx.
struct HalfBraidingLin {
  GradedObject carrier;
  std::vector<CycMatrix> beta;  // indexed by group element
};

/// Sizes, grading, β_e = I, invertibility, and the ω-twisted multiplicativity for all pairs.
Report check_half_braiding(const HalfBraidingLin& v, const Cocycle3& w);

/// V ⊗ W with θ_x[(i',j'),(i,j)] = ω(g,h,x) ω(g,x,h')⁻¹ ω(x,g',h') β^V_x[i',i] β^W_x[j',j].
HalfBraidingLin tensor(const HalfBraidingLin& v, const HalfBraidingLin& w, const Cocycle3& om);
/// δ_e with β = 1.
HalfBraidingLin unit_object(const Cocycle3& w);

/// Whether a grade-preserving map T : V → W commutes with the half-braidings;
/// violations name the first failing (x, g).
Report check_intertwiner(const CycMatrix& t, const HalfBraidingLin& v, const HalfBraidingLin& w);
/// Basis of the intertwiners V → W.
std::vector<CycMatrix> intertwiners(const HalfBraidingLin& v, const HalfBraidingLin& w, int order);

/// c_{V,W} : V⊗W → W⊗V, v_i ⊗ w_k ↦ w_k ⊗ β^V_{|w_k|} v_i.
CycMatrix braiding_matrix(const HalfBraidingLin& v, const HalfBraidingLin& w, int order);

/// The constraint system of half-braidings on a carrier.
struct HalfBraidingSpace {
  bool feasible = false;    // the grading admits invertible blocks
  std::string witness;      // why not, when infeasible
  std::vector<int> generators;
  struct Equation {
    int x, y, g;
    CycNumber scalar;  // β_{xy}|g = scalar · β_y|g' ∘ β_x|g
  };
  std::vector<Equation> equations;
  /// All solutions, when every grade block is 1-dimensional; values are roots of unity of the field order.
  bool enumerated = false;
  std::vector<HalfBraidingLin> solutions;
};

HalfBraidingSpace half_braiding_space(const GradedObject& v, const Cocycle3& w);

struct SimpleObject {
  int class_rep = 0;            // least element of the supporting conjugacy class
  std::vector<int> dimensions;  // dimension vector over G
  HalfBraidingLin object;
  int projective_dim = 0;  // dimension at the class representative
};

struct SimpleList {
  std::vector<SimpleObject> simples;
  bool complete = false;           // every class closed its Σ d² = |centralizer| count
  std::vector<std::string> notes;  // classes left open by the dimension bound
  Report certificate;              // half-braiding axiom, End = scalars, Hom between distinct simples = 0
  bool sum_rule = false;           // Σ (total dim)² = |G|²
};

/// Simple objects of the centre of Vec_G^ω. Throws GuardExceeded when |G| > max_group_order.
SimpleList centre_simples(const Cocycle3& w, int dim_bound = 8, ExecPolicy policy = ExecPolicy::parallel,
                          int max_group_order = 8);

/// Braided monoidal certificates for the full subcategory on the given simples:
/// cocycle (pentagon), normalization (triangle), closure under tensor,
/// associator/unitors/braiding as centre morphisms, braiding naturality, both hexagons.
std::vector<Certificate> certify_linear_centre(const std::vector<SimpleObject>& simples, const Cocycle3& w,
                                               bool include_products = true);

struct CrossBackendVerdict {
  bool match = false;
  std::vector<int> set_level;  // elements g with a set-level half-braiding on g
  std::vector<int> linear;     // elements g with a linear half-braiding on δ_g
  std::string witness;
};

/// Compares the set-level centre of the discrete group category with
/// existence of linear half-braidings on one-dimensional carriers δ_g (trivial ω).
CrossBackendVerdict verify_linear_against_bruteforce(const Group& g);

}  // namespace moncentre
