#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moncentre/report.hpp"

namespace moncentre {

using ObjId = int;
using MorId = int;
inline constexpr int kNone = -1;

/// Caps on constructed categories and search effort. Exceeding one throws GuardExceeded.
struct Guards {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 4096;
  std::size_t hochschild_max_objects = 6;
  std::size_t max_search_nodes = 50'000'000;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MorphismData {
  ObjId src = kNone;
  ObjId dst = kNone;
};

/// A finite category stored as explicit tables over dense integer ids.
///
/// The constructor only builds lookup structures; it does not check the
/// category axioms (see validate_category), so malformed tables can be
/// represented and reported. Composition is stored only for composable pairs;
/// missing entries read back as kNone.
class FinCategory {
 public:
  using ComposeTriple = std::array<MorId, 3>;  // {g, f, g∘f}

  FinCategory() = default;
  FinCategory(int num_objects, std::vector<MorphismData> morphisms, std::vector<MorId> identity,
              const std::vector<ComposeTriple>& compose);

  int num_objects() const { return num_objects_; }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  ObjId src(MorId f) const { return morphisms_[f].src; }
  ObjId dst(MorId f) const { return morphisms_[f].dst; }
  MorId identity(ObjId a) const { return identity_[a]; }
  const std::vector<MorId>& identities() const { return identity_; }
  const std::vector<MorphismData>& morphisms() const { return morphisms_; }

  /// g∘f, or kNone when f, g are not composable or the entry is missing.
  MorId compose(MorId g, MorId f) const;
  bool composable(MorId g, MorId f) const { return dst(f) == src(g); }

  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return hom_[a * num_objects_ + b]; }
  /// Morphisms with the given codomain.
  const std::vector<MorId>& into(ObjId b) const { return into_[b]; }
  const std::vector<MorId>& out_of(ObjId a) const { return out_of_[a]; }

  bool is_invertible(MorId f) const { return inverse_[f] != kNone; }
  MorId inverse(MorId f) const { return inverse_[f]; }
  bool is_identity(MorId f) const { return f >= 0 && identity_[src(f)] == f; }

  std::vector<ComposeTriple> compose_triples() const;

  /// Copy with one composition entry overwritten (used to build corrupted fixtures).
  FinCategory with_compose_entry(MorId g, MorId f, MorId gf) const;

  bool operator==(const FinCategory& other) const;

 private:
  void build_indices();
  void compute_inverses();

  int num_objects_ = 0;
  std::vector<MorphismData> morphisms_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> hom_;
  std::vector<std::vector<MorId>> into_;
  std::vector<std::vector<MorId>> out_of_;
  std::vector<int> into_pos_;                // position of f in into(dst f)
  std::vector<std::vector<MorId>> compose_;  // compose_[g][into_pos_[f]]
  std::vector<MorId> inverse_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

CategoryPtr make_category(FinCategory c);
CategoryPtr terminal_category();
CategoryPtr empty_category();
CategoryPtr discrete_category(int n);
/// 0 → 1 with ids 0, 1 for the identities and 2 for the arrow.
CategoryPtr walking_arrow();
/// Preorder on n objects; leq[a*n+b] says whether a ≤ b. Must be reflexive and transitive.
CategoryPtr preorder_category(int n, const std::vector<bool>& leq);

Report validate_category(const FinCategory& c);

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct Functor {
  CategoryPtr src;
  CategoryPtr dst;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId obj(ObjId a) const { return obj_map[a]; }
  MorId mor(MorId f) const { return mor_map[f]; }
  bool operator==(const Functor& o) const { return obj_map == o.obj_map && mor_map == o.mor_map; }
};

Report validate_functor(const Functor& f);
Functor identity_functor(const CategoryPtr& c);
/// g∘f
Functor compose_functors(const Functor& g, const Functor& f);

struct NatTransf {
  Functor src;
  Functor dst;
  std::vector<MorId> components;

  bool operator==(const NatTransf& o) const {
    return components == o.components && src == o.src && dst == o.dst;
  }
};

Report validate_nat_transf(const NatTransf& t);
NatTransf identity_nat(const Functor& f);
/// Vertical composite g·f : f.src ⇒ g.dst.
NatTransf vertical_compose(const NatTransf& g, const NatTransf& f);
/// Whiskering H∘t.
NatTransf whisker_left(const Functor& h, const NatTransf& t);

/// All functors A → B in canonical order. Throws GuardExceeded past `cap` results.
std::vector<Functor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& b,
                                        std::size_t cap, std::size_t node_budget = 50'000'000);
/// All natural transformations F ⇒ G in canonical (lexicographic component) order.
std::vector<NatTransf> enumerate_nat_transfs(const Functor& f, const Functor& g);

// ---------------------------------------------------------------------------
// Constructions

struct ProductCategory {
  CategoryPtr category;
  CategoryPtr left;
  CategoryPtr right;
  Functor proj_left;
  Functor proj_right;

  ObjId object(ObjId a, ObjId b) const { return a * right->num_objects() + b; }
  MorId morphism(MorId f, MorId g) const { return f * right->num_morphisms() + g; }
  /// Pairing ⟨F, G⟩ : T → A × B.
  Functor pair(const Functor& f, const Functor& g) const;
};

ProductCategory product_category(const CategoryPtr& a, const CategoryPtr& b,
                                 const Guards& guards = {});

struct CoproductCategory {
  CategoryPtr category;
  Functor inj_left;
  Functor inj_right;
};

CoproductCategory coproduct_category(const CategoryPtr& a, const CategoryPtr& b,
                                     const Guards& guards = {});

/// The functor category [A, B], kept lazy: objects and hom-sets are produced on
/// demand, so it can be used where full materialization would be far too large.
class FunctorCategory {
 public:
  using Object = Functor;
  using Morphism = NatTransf;

  FunctorCategory(CategoryPtr src, CategoryPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {}

  const CategoryPtr& src() const { return src_; }
  const CategoryPtr& dst() const { return dst_; }

  std::vector<NatTransf> hom(const Functor& f, const Functor& g) const {
    return enumerate_nat_transfs(f, g);
  }
  NatTransf compose(const NatTransf& g, const NatTransf& f) const { return vertical_compose(g, f); }
  NatTransf identity(const Functor& f) const { return identity_nat(f); }
  const Functor& source(const NatTransf& t) const { return t.src; }
  const Functor& target(const NatTransf& t) const { return t.dst; }
  bool is_invertible(const NatTransf& t) const;
  NatTransf inverse(const NatTransf& t) const;

 private:
  CategoryPtr src_;
  CategoryPtr dst_;
};

/// [A, B] with every functor and natural transformation enumerated.
struct MaterializedFunctorCategory {
  CategoryPtr category;
  CategoryPtr src;
  CategoryPtr dst;
  std::vector<Functor> objects;
  std::vector<NatTransf> morphisms;

  std::optional<ObjId> find_object(const Functor& f) const;
  std::optional<MorId> find_morphism(const NatTransf& t) const;

  struct Index;
  std::shared_ptr<const Index> index;
};

MaterializedFunctorCategory functor_category(const CategoryPtr& a, const CategoryPtr& b,
                                             const Guards& guards = {});

/// ev : [A, B] × A → B, with ev(F, a) = F a and ev(σ, f) = G f ∘ σ_a.
struct Evaluation {
  ProductCategory domain;
  Functor functor;
};
Evaluation evaluation_functor(const MaterializedFunctorCategory& fc);

/// Currying H : A × B → C into A → [B, C] and back.
Functor curry(const Functor& h, const ProductCategory& ab, const MaterializedFunctorCategory& bc);
Functor uncurry(const Functor& k, const ProductCategory& ab, const MaterializedFunctorCategory& bc);

struct EquivalenceVerdict {
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
  std::string witness;

  bool equivalence() const { return full && faithful && essentially_surjective; }
};

EquivalenceVerdict check_equivalence(const Functor& f);

/// True iff F is bijective on objects and on morphisms.
bool is_isomorphism(const Functor& f);

}  // namespace moncentre
