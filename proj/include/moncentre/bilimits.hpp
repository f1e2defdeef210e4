#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "moncentre/fincat.hpp"

namespace moncentre {

/// A FinCategory seen through the same interface as the lazy FunctorCategory,
/// so that limit constructions can be written once for both.
class ExplicitCategory {
 public:
  using Object = ObjId;
  using Morphism = MorId;

  explicit ExplicitCategory(CategoryPtr c) : c_(std::move(c)) {}

  const CategoryPtr& category() const { return c_; }
  std::vector<MorId> hom(ObjId a, ObjId b) const { return c_->hom(a, b); }
  MorId compose(MorId g, MorId f) const { return c_->compose(g, f); }
  MorId identity(ObjId a) const { return c_->identity(a); }
  ObjId source(MorId f) const { return c_->src(f); }
  ObjId target(MorId f) const { return c_->dst(f); }
  bool is_invertible(MorId f) const { return c_->is_invertible(f); }
  MorId inverse(MorId f) const { return c_->inverse(f); }

 private:
  CategoryPtr c_;
};

/// A functor between category models given by its action on objects and morphisms.
template <class C1, class C2>
struct LazyFunctor {
  std::function<typename C2::Object(const typename C1::Object&)> obj;
  std::function<typename C2::Morphism(const typename C1::Morphism&)> mor;
};

template <class C>
using FromExplicit = LazyFunctor<ExplicitCategory, C>;

/// X0 ⇉ X1 ⇛ X2 with cofaces d0, d1, e0, e1, e2 and the invertible 2-cells
///   coh00 : e0∘d0 ⇒ e1∘d0,  coh01 : e0∘d1 ⇒ e2∘d0,  coh21 : e2∘d1 ⇒ e1∘d1
/// given componentwise over the objects of X0.
template <class C1, class C2>
struct TruncatedCosimplicial {
  CategoryPtr x0;
  C1 x1;
  C2 x2;
  FromExplicit<C1> d0, d1;
  LazyFunctor<C1, C2> e0, e1, e2;
  std::function<typename C2::Morphism(ObjId)> coh00, coh01, coh21;
};

/// Subcategory data shared by the constructions below: a category whose
/// objects lie over objects of a base and whose morphisms are base morphisms.
struct FullSubcategory {
  CategoryPtr category;
  std::vector<ObjId> objects;  // id in the ambient category
  Functor inclusion;
};

FullSubcategory full_subcategory(const CategoryPtr& a, const std::vector<ObjId>& objects);

/// Builds the category with objects over[i] ∈ base and, from i to j, those
/// base morphisms f : over[i] → over[j] with keep(i, j, f). The predicate must
/// be closed under composition and hold on identities.
struct Assembled {
  CategoryPtr category;
  std::vector<MorId> underlying;
  Functor projection;
};
Assembled assemble_over(const CategoryPtr& base, const std::vector<ObjId>& over,
                        const std::function<bool(int, int, MorId)>& keep, const Guards& guards = {});

/// Objects (a, β : F a ≅ G a); morphisms f : a → a' with G f ∘ β = β' ∘ F f.
template <class C1>
struct InsertedCategory {
  CategoryPtr category;
  std::vector<std::pair<ObjId, typename C1::Morphism>> objects;
  std::vector<MorId> underlying;
  Functor projection;
};

template <class C1>
InsertedCategory<C1> iso_inserter(const CategoryPtr& a, const C1& b, const FromExplicit<C1>& f,
                                  const FromExplicit<C1>& g, const Guards& guards = {}) {
  InsertedCategory<C1> out;
  std::vector<ObjId> over;
  for (ObjId x = 0; x < a->num_objects(); ++x)
    for (auto& beta : b.hom(f.obj(x), g.obj(x))) {
      if (!b.is_invertible(beta)) continue;
      if (out.objects.size() >= guards.max_objects)
        throw GuardExceeded("iso-inserter has more than " + std::to_string(guards.max_objects) + " objects");
      out.objects.emplace_back(x, beta);
      over.push_back(x);
    }
  auto keep = [&](int i, int j, MorId h) {
    return b.compose(g.mor(h), out.objects[i].second) == b.compose(out.objects[j].second, f.mor(h));
  };
  Assembled as = assemble_over(a, over, keep, guards);
  out.category = as.category;
  out.underlying = std::move(as.underlying);
  out.projection = std::move(as.projection);
  return out;
}

/// Explicit iso-inserter of F, G : A → B.
InsertedCategory<ExplicitCategory> iso_inserter(const Functor& f, const Functor& g, const Guards& guards = {});

/// Full subcategory of A on the objects where the two 2-cells have equal components.
template <class Component>
FullSubcategory equifier(const CategoryPtr& a, Component&& sigma, Component&& tau) {
  std::vector<ObjId> keep;
  for (ObjId x = 0; x < a->num_objects(); ++x)
    if (sigma(x) == tau(x)) keep.push_back(x);
  return full_subcategory(a, keep);
}

/// Explicit equifier of σ, τ : F ⇒ G.
FullSubcategory equifier(const NatTransf& sigma, const NatTransf& tau);

/// The category of morphisms of A and commuting squares, with domain and codomain projections.
struct ArrowCategory {
  CategoryPtr category;
  std::vector<std::pair<MorId, MorId>> squares;  // morphism k = (top, bottom)
  Functor dom;
  Functor cod;
};
ArrowCategory cotensor_with_arrow(const CategoryPtr& a, const Guards& guards = {});

/// Objects (x, φ : d0 x ≅ d1 x) satisfying the cocycle condition
///   e1φ = coh21 ∘ e2φ ∘ coh01 ∘ e0φ ∘ coh00⁻¹;
/// morphisms are X0-morphisms f with d1 f ∘ φ = φ' ∘ d0 f.
template <class C1>
struct DescentCategory {
  CategoryPtr category;
  std::vector<std::pair<ObjId, typename C1::Morphism>> objects;
  std::vector<MorId> underlying;
  Functor forget;
};

template <class C1, class C2>
typename C2::Morphism cocycle_composite(const TruncatedCosimplicial<C1, C2>& d, ObjId x,
                                        const typename C1::Morphism& phi) {
  const C2& c = d.x2;
  auto m = c.compose(d.coh01(x), c.compose(d.e0.mor(phi), c.inverse(d.coh00(x))));
  return c.compose(d.coh21(x), c.compose(d.e2.mor(phi), m));
}

template <class C1, class C2>
bool cocycle_holds(const TruncatedCosimplicial<C1, C2>& d, ObjId x, const typename C1::Morphism& phi) {
  return d.e1.mor(phi) == cocycle_composite(d, x, phi);
}

/// Straight from the definition: candidates are filtered by invertibility and
/// the cocycle condition in one pass.
template <class C1, class C2>
DescentCategory<C1> descent_direct(const TruncatedCosimplicial<C1, C2>& d, const Guards& guards = {}) {
  DescentCategory<C1> out;
  std::vector<ObjId> over;
  for (ObjId x = 0; x < d.x0->num_objects(); ++x)
    for (auto& phi : d.x1.hom(d.d0.obj(x), d.d1.obj(x))) {
      if (!d.x1.is_invertible(phi) || !cocycle_holds(d, x, phi)) continue;
      if (out.objects.size() >= guards.max_objects)
        throw GuardExceeded("descent category has more than " + std::to_string(guards.max_objects) + " objects");
      out.objects.emplace_back(x, phi);
      over.push_back(x);
    }
  auto keep = [&](int i, int j, MorId f) {
    return d.x1.compose(d.d1.mor(f), out.objects[i].second) == d.x1.compose(out.objects[j].second, d.d0.mor(f));
  };
  Assembled as = assemble_over(d.x0, over, keep, guards);
  out.category = as.category;
  out.underlying = std::move(as.underlying);
  out.forget = std::move(as.projection);
  return out;
}

/// iso_inserter(d0, d1) followed by the equifier of e1φ and the coherence composite.
template <class C1, class C2>
DescentCategory<C1> descent_pipeline(const TruncatedCosimplicial<C1, C2>& d, const Guards& guards = {}) {
  InsertedCategory<C1> ins = iso_inserter(d.x0, d.x1, d.d0, d.d1, guards);
  std::function<typename C2::Morphism(ObjId)> sigma = [&](ObjId i) { return d.e1.mor(ins.objects[i].second); };
  std::function<typename C2::Morphism(ObjId)> tau = [&](ObjId i) {
    return cocycle_composite(d, ins.objects[i].first, ins.objects[i].second);
  };
  FullSubcategory eq = equifier(ins.category, sigma, tau);
  DescentCategory<C1> out;
  out.category = eq.category;
  for (ObjId k : eq.objects) out.objects.push_back(ins.objects[k]);
  for (MorId k : eq.inclusion.mor_map) out.underlying.push_back(ins.underlying[k]);
  out.forget = compose_functors(ins.projection, eq.inclusion);
  return out;
}

/// The functor matching objects and morphisms of `from` to equal data in `to`,
/// or nullopt when some object or morphism has no counterpart.
template <class C1>
std::optional<Functor> match_descent(const DescentCategory<C1>& from, const DescentCategory<C1>& to) {
  Functor f{from.category, to.category, {}, {}};
  for (const auto& o : from.objects) {
    auto it = std::find(to.objects.begin(), to.objects.end(), o);
    if (it == to.objects.end()) return std::nullopt;
    f.obj_map.push_back(static_cast<ObjId>(it - to.objects.begin()));
  }
  std::map<std::tuple<ObjId, ObjId, MorId>, MorId> lookup;
  for (MorId k = 0; k < to.category->num_morphisms(); ++k)
    lookup[{to.category->src(k), to.category->dst(k), to.underlying[k]}] = k;
  for (MorId k = 0; k < from.category->num_morphisms(); ++k) {
    auto it = lookup.find({f.obj(from.category->src(k)), f.obj(from.category->dst(k)), from.underlying[k]});
    if (it == lookup.end()) return std::nullopt;
    f.mor_map.push_back(it->second);
  }
  return f;
}

/// Both constructions, cross-checked. Throws std::logic_error if they are not isomorphic.
template <class C1, class C2>
DescentCategory<C1> descent_object(const TruncatedCosimplicial<C1, C2>& d, const Guards& guards = {}) {
  DescentCategory<C1> direct = descent_direct(d, guards);
  DescentCategory<C1> piped = descent_pipeline(d, guards);
  auto f = match_descent(piped, direct);
  if (!f || !is_isomorphism(*f) || validate_functor(*f).count() != 0)
    throw std::logic_error("descent pipeline disagrees with the direct construction");
  return direct;
}

using ExplicitDiagram = TruncatedCosimplicial<ExplicitCategory, ExplicitCategory>;

/// A diagram of explicit categories, functors and natural transformations.
struct DiagramData {
  CategoryPtr x0, x1, x2;
  Functor d0, d1, e0, e1, e2;
  NatTransf coh00, coh01, coh21;
};

/// Endpoints, functoriality, and naturality/invertibility of the coherence cells.
Report validate_diagram(const DiagramData& d);
ExplicitDiagram explicit_diagram(const DiagramData& d);

/// Descent data on a category T: a functor T → X0 and, for each t, an invertible
/// φ_t : d0 X t → d1 X t natural in t and satisfying the cocycle condition.
/// Returns how many there are; used to spot-check the universal property.
std::size_t count_descent_data(const ExplicitDiagram& d, const CategoryPtr& t, const Guards& guards = {});

}  // namespace moncentre
