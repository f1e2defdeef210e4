#pragma once

#include <memory>
#include <vector>

#include "moncentre/fincat.hpp"
#include "moncentre/group.hpp"

namespace moncentre {

/// Monoidal structure on a finite category: tensor tables, unit, and the
/// associator/unitor components. α_{a,b,c} : (a⊗b)⊗c → a⊗(b⊗c),
/// λ_a : e⊗a → a, ρ_a : a⊗e → a. Unitors are stored even when strict.
struct MonoidalStructure {
  CategoryPtr base;
  std::vector<ObjId> tensor_obj_table;  // n×n
  std::vector<MorId> tensor_mor_table;  // m×m
  ObjId unit = kNone;
  std::vector<MorId> alpha_table;  // n×n×n
  std::vector<MorId> lambda_table;
  std::vector<MorId> rho_table;

  int num_objects() const { return base->num_objects(); }
  ObjId tensor(ObjId a, ObjId b) const { return tensor_obj_table[a * num_objects() + b]; }
  MorId tensor_mor(MorId f, MorId g) const {
    return tensor_mor_table[static_cast<std::size_t>(f) * base->num_morphisms() + g];
  }
  MorId alpha(ObjId a, ObjId b, ObjId c) const {
    const int n = num_objects();
    return alpha_table[(static_cast<std::size_t>(a) * n + b) * n + c];
  }
  MorId alpha_inv(ObjId a, ObjId b, ObjId c) const { return base->inverse(alpha(a, b, c)); }
  MorId lambda(ObjId a) const { return lambda_table[a]; }
  MorId rho(ObjId a) const { return rho_table[a]; }
  MorId id(ObjId a) const { return base->identity(a); }
  MorId compose(MorId g, MorId f) const { return base->compose(g, f); }
  /// Composite of morphisms listed in diagrammatic order (first applied first).
  MorId then(std::initializer_list<MorId> chain) const;
};

using MonoidalPtr = std::shared_ptr<const MonoidalStructure>;

/// Empty iff the tensor is a bifunctor, the coherence cells are invertible and
/// natural, and the pentagon and triangle identities hold. Pentagon and
/// triangle checking stops at the first failing tuple.
Report check_pentagon_triangle(const MonoidalStructure& m);

/// Discrete category on the group elements, tensor = multiplication, strict.
MonoidalPtr discrete_group_monoidal(const Group& g);
MonoidalPtr discrete_group_monoidal(const std::vector<std::vector<int>>& mult_table);

/// Group-graded sign lines: object g has the two automorphisms +1 (id, 2g) and
/// −1 (2g+1); tensor multiplies grades and signs; the associator at (g,h,k) is
/// the sign sign[(g*n+h)*n+k]. Pentagon holds iff the signs form a 3-cocycle.
MonoidalPtr signed_group_monoidal(const Group& g, const std::vector<int>& sign);

/// ({0, 1}, ≤) with tensor = min and unit 1.
MonoidalPtr poset_min_monoidal();

/// Strict monoidal structure on a preorder category whose tensor is a monotone
/// operation on objects.
MonoidalPtr preorder_monoidal(const CategoryPtr& preorder, const std::vector<std::vector<int>>& op,
                              int unit);

/// Components c_{a,b} : a⊗b → b⊗a.
struct Braiding {
  std::vector<MorId> components;  // n×n
  MorId at(ObjId a, ObjId b, int n) const { return components[a * n + b]; }
};

/// Invertibility, naturality, and both hexagon identities.
Report check_braiding(const MonoidalStructure& m, const Braiding& c);
/// c_{b,a} ∘ c_{a,b} = id for all a, b.
bool is_symmetric(const MonoidalStructure& m, const Braiding& c);
/// The braiding whose components are all identities; requires a⊗b = b⊗a on objects.
Braiding identity_braiding(const MonoidalStructure& m);

struct StrongMonoidalFunctor {
  Functor functor;
  MonoidalPtr src;
  MonoidalPtr dst;
  std::vector<MorId> tensor_iso;  // per source pair: F a ⊗ F b → F(a⊗b)
  MorId unit_iso = kNone;         // e' → F e
};

/// Empty iff F is a functor, the structure cells are invertible, natural, and
/// satisfy the associativity hexagon and both unit squares.
Report check_strong_monoidal(const StrongMonoidalFunctor& f);

/// F with identity structure cells. Requires F strictly preserve tensor and unit on objects.
StrongMonoidalFunctor strict_monoidal_functor(Functor f, MonoidalPtr src, MonoidalPtr dst);

/// Pointwise monoidal structure on [E, M.base].
struct PowerMonoidal {
  MaterializedFunctorCategory functors;
  MonoidalPtr monoidal;
};
PowerMonoidal pointwise_monoidal(const CategoryPtr& e, const MonoidalPtr& m, const Guards& guards = {});

}  // namespace moncentre
