#pragma once

#include <optional>
#include <vector>

#include "moncentre/fincat.hpp"
#include "moncentre/monoidal.hpp"
#include "moncentre/parallel.hpp"

namespace moncentre {

/// A functor u : U → A together with γ_{s,x} : u(s)⊗x → x⊗u(s) for every
/// object s of U and x of A (stored s-major).
struct CentrePiece {
  Functor u;
  MonoidalPtr A;
  std::vector<MorId> gamma;

  MorId at(ObjId s, ObjId x) const { return gamma[s * A->num_objects() + x]; }
};

/// Empty iff every γ_{s,x} is invertible, γ is natural in s and in x, and
///   γ_{s,x⊗y} = α⁻¹_{x,y,us} ∘ (1_x⊗γ_{s,y}) ∘ α_{x,us,y} ∘ (γ_{s,x}⊗1_y) ∘ α⁻¹_{us,x,y}
/// for all s, x, y. Violations with "structural:" prefix mean the family is
/// not even well-typed.
Report check_centre_piece(const CentrePiece& p);

/// Empty iff σ : u ⇒ v satisfies (1_x⊗σ_s) ∘ γ_{s,x} = δ_{s,x} ∘ (σ_s⊗1_x).
Report check_centre_piece_morphism(const NatTransf& sigma, const CentrePiece& p, const CentrePiece& q);

/// An object a of A with a half-braiding x ↦ γ_x : a⊗x → x⊗a.
struct CentreObject {
  ObjId a = kNone;
  std::vector<MorId> half_braiding;

  bool operator==(const CentreObject&) const = default;
  auto operator<=>(const CentreObject&) const = default;
};

/// The centre piece on the terminal category determined by a centre object.
CentrePiece as_centre_piece(const CentreObject& obj, const MonoidalPtr& a);

struct CentreCategory {
  MonoidalPtr A;
  std::vector<CentreObject> objects;
  std::vector<MorId> underlying;  // morphism of Z → morphism of A
  MonoidalPtr monoidal;           // monoidal->base is Z
  Braiding braiding;
  StrongMonoidalFunctor projection;
  std::vector<Certificate> certificates;

  const CategoryPtr& category() const { return monoidal->base; }
  std::optional<ObjId> find(const CentreObject& obj) const;
  /// Morphism of Z from x to y lying over the A-morphism f.
  std::optional<MorId> find_morphism(ObjId x, ObjId y, MorId f) const;

  struct Index;
  std::shared_ptr<const Index> index;
};

/// All half-braidings on the object a, in lexicographic order of components.
std::vector<CentreObject> enumerate_half_braidings(const MonoidalStructure& A, ObjId a,
                                                   const Guards& guards = {});

/// The centre Z_A with its braided monoidal structure and projection i. The
/// returned certificates re-verify every structural invariant.
CentreCategory compute_centre(const MonoidalPtr& A, const Guards& guards = {},
                              ExecPolicy policy = ExecPolicy::parallel);

/// The braided monoidal invariants of a computed centre.
std::vector<Certificate> certify_centre(const CentreCategory& z);

/// s ↦ (u(s), γ_{s,−}); composing with the projection gives back u.
Functor factor_through_centre(const CentrePiece& p, const CentreCategory& z);

/// The category CP(U, A) of centre pieces and their morphisms.
struct CentrePieceCategory {
  CategoryPtr category;
  std::vector<CentrePiece> pieces;
  std::vector<NatTransf> morphisms;

  std::optional<ObjId> find(const CentrePiece& p) const;
  std::optional<MorId> find_morphism(ObjId p, ObjId q, const std::vector<MorId>& components) const;

  struct Index;
  std::shared_ptr<const Index> index;
};

CentrePieceCategory centre_pieces(const CategoryPtr& U, const MonoidalPtr& A, const Guards& guards = {});

struct BirepresentationVerdict {
  EquivalenceVerdict verdict;
  std::size_t functor_objects = 0;  // |Ob [U, Z_A]|
  std::size_t piece_objects = 0;    // |Ob CP(U, A)|
  Report comparison_report;         // comparison functor well-defined
  bool equivalence() const { return comparison_report.ok() && verdict.equivalence(); }
};

/// Checks that composing with i : Z_A → A gives an equivalence [U, Z_A] ≃ CP(U, A).
BirepresentationVerdict check_birepresentation(const CategoryPtr& U, const MonoidalPtr& A,
                                               const Guards& guards = {});

/// Transport along the power functor [E, −].
struct TransportResult {
  PowerMonoidal power;                // [E, A], pointwise
  CentrePiece transported;            // [E, u] : [E, U] → [E, A]
  Report transported_report;
  CentreCategory centre_of_power;     // Z_{[E,A]}
  PowerMonoidal power_of_centre;      // [E, Z_A]
  StrongMonoidalFunctor comparison;   // [E, Z_A] → Z_{[E,A]}
  Report comparison_report;           // functor, strong monoidal, commutes with projections
  EquivalenceVerdict equivalence;
};

TransportResult transport_along_power(const CategoryPtr& E, const CentrePiece& p,
                                      const Guards& guards = {});

struct CoproductVerdict {
  EquivalenceVerdict verdict;
  Report comparison_report;
  std::size_t source_objects = 0;
  std::size_t target_objects = 0;
  bool equivalence() const { return comparison_report.ok() && verdict.equivalence(); }
};

/// Whether restriction CP(U ⊔ V, A) → CP(U, A) × CP(V, A) is an equivalence.
CoproductVerdict check_cp_preserves_coproducts(const CategoryPtr& U, const CategoryPtr& V,
                                               const MonoidalPtr& A, const Guards& guards = {});

}  // namespace moncentre
