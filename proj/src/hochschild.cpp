#include "moncentre/hochschild.hpp"

#include <stdexcept>
#include <string>

namespace moncentre {

HochschildDiagram build_hochschild(const MonoidalPtr& ap, const Guards& guards) {
  const int n = ap->num_objects();
  if (static_cast<std::size_t>(n) > guards.hochschild_max_objects)
    throw GuardExceeded("descent route limited to " + std::to_string(guards.hochschild_max_objects) +
                        " objects; A has " + std::to_string(n));
  const CategoryPtr a = ap->base;
  Guards wide = guards;
  wide.max_objects = std::max<std::size_t>(guards.max_objects, static_cast<std::size_t>(n) * n);
  wide.max_morphisms = std::max<std::size_t>(guards.max_morphisms,
                                             static_cast<std::size_t>(a->num_morphisms()) * a->num_morphisms());
  ProductCategory sq = product_category(a, a, wide);
  const int ma = a->num_morphisms();
  const CategoryPtr sqc = sq.category;

  FunctorCategory x1(a, a);
  FunctorCategory x2(sqc, a);

  auto d0_obj = [ap, a](const ObjId& x) {
    const MonoidalStructure& m = *ap;
    Functor f{a, a, {}, {}};
    for (int y = 0; y < a->num_objects(); ++y) f.obj_map.push_back(m.tensor(x, y));
    for (int g = 0; g < a->num_morphisms(); ++g) f.mor_map.push_back(m.tensor_mor(m.id(x), g));
    return f;
  };
  auto d1_obj = [ap, a](const ObjId& x) {
    const MonoidalStructure& m = *ap;
    Functor f{a, a, {}, {}};
    for (int y = 0; y < a->num_objects(); ++y) f.obj_map.push_back(m.tensor(y, x));
    for (int g = 0; g < a->num_morphisms(); ++g) f.mor_map.push_back(m.tensor_mor(g, m.id(x)));
    return f;
  };
  FromExplicit<FunctorCategory> d0{d0_obj, [ap, a, d0_obj](const MorId& h) {
                                     NatTransf t{d0_obj(a->src(h)), d0_obj(a->dst(h)), {}};
                                     for (int y = 0; y < a->num_objects(); ++y)
                                       t.components.push_back(ap->tensor_mor(h, ap->id(y)));
                                     return t;
                                   }};
  FromExplicit<FunctorCategory> d1{d1_obj, [ap, a, d1_obj](const MorId& h) {
                                     NatTransf t{d1_obj(a->src(h)), d1_obj(a->dst(h)), {}};
                                     for (int y = 0; y < a->num_objects(); ++y)
                                       t.components.push_back(ap->tensor_mor(ap->id(y), h));
                                     return t;
                                   }};

  // e_k(F) on (x, y) and on (f, g), and e_k(φ) at (x, y).
  enum Face { kE0, kE1, kE2 };
  auto e_obj = [ap, a, sqc, n, ma](Face k, const Functor& F) {
    const MonoidalStructure& m = *ap;
    Functor out{sqc, a, {}, {}};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out.obj_map.push_back(k == kE0   ? m.tensor(F.obj(x), y)
                              : k == kE1 ? F.obj(m.tensor(x, y))
                                         : m.tensor(x, F.obj(y)));
    for (int f = 0; f < ma; ++f)
      for (int g = 0; g < ma; ++g)
        out.mor_map.push_back(k == kE0   ? m.tensor_mor(F.mor(f), g)
                              : k == kE1 ? F.mor(m.tensor_mor(f, g))
                                         : m.tensor_mor(f, F.mor(g)));
    return out;
  };
  auto e_mor = [ap, n, e_obj](Face k, const NatTransf& phi) {
    const MonoidalStructure& m = *ap;
    NatTransf out{e_obj(k, phi.src), e_obj(k, phi.dst), {}};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out.components.push_back(k == kE0   ? m.tensor_mor(phi.components[x], m.id(y))
                                 : k == kE1 ? phi.components[m.tensor(x, y)]
                                            : m.tensor_mor(m.id(x), phi.components[y]));
    return out;
  };
  auto face = [e_obj, e_mor](Face k) {
    return LazyFunctor<FunctorCategory, FunctorCategory>{[e_obj, k](const Functor& F) { return e_obj(k, F); },
                                                         [e_mor, k](const NatTransf& t) { return e_mor(k, t); }};
  };
  auto e0 = face(kE0), e1 = face(kE1), e2 = face(kE2);

  // coherence cells between composites e_k∘d_j, componentwise at (x, y)
  auto coh00 = [ap, n, e0, e1, d0](ObjId x) {
    const Functor dx = d0.obj(x);
    NatTransf t{e0.obj(dx), e1.obj(dx), {}};
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) t.components.push_back(ap->alpha(x, y, z));
    return t;
  };
  auto coh01 = [ap, n, e0, e2, d0, d1](ObjId x) {
    NatTransf t{e0.obj(d1.obj(x)), e2.obj(d0.obj(x)), {}};
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) t.components.push_back(ap->alpha(y, x, z));
    return t;
  };
  auto coh21 = [ap, n, e1, e2, d1](ObjId x) {
    const Functor dx = d1.obj(x);
    NatTransf t{e2.obj(dx), e1.obj(dx), {}};
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) t.components.push_back(ap->alpha_inv(y, z, x));
    return t;
  };

  return HochschildDiagram{ap, sq, LazyDiagram{a, x1, x2, d0, d1, e0, e1, e2, coh00, coh01, coh21}};
}

DiagramData materialize_hochschild(const MonoidalPtr& ap, const Guards& guards) {
  HochschildDiagram h = build_hochschild(ap, guards);
  const LazyDiagram& d = h.diagram;
  MaterializedFunctorCategory x1 = functor_category(ap->base, ap->base, guards);
  MaterializedFunctorCategory x2 = functor_category(h.square.category, ap->base, guards);
  auto obj1 = [&](const Functor& f) {
    auto id = x1.find_object(f);
    if (!id) throw std::logic_error("coface lands outside [A, A]");
    return *id;
  };
  auto mor1 = [&](const NatTransf& t) {
    auto id = x1.find_morphism(t);
    if (!id) throw std::logic_error("coface lands outside [A, A]");
    return *id;
  };
  auto obj2 = [&](const Functor& f) {
    auto id = x2.find_object(f);
    if (!id) throw std::logic_error("coface lands outside [A×A, A]");
    return *id;
  };
  auto mor2 = [&](const NatTransf& t) {
    auto id = x2.find_morphism(t);
    if (!id) throw std::logic_error("coface lands outside [A×A, A]");
    return *id;
  };

  DiagramData out;
  out.x0 = ap->base;
  out.x1 = x1.category;
  out.x2 = x2.category;
  auto first = [&](const FromExplicit<FunctorCategory>& f) {
    Functor r{out.x0, out.x1, {}, {}};
    for (int x = 0; x < out.x0->num_objects(); ++x) r.obj_map.push_back(obj1(f.obj(x)));
    for (int k = 0; k < out.x0->num_morphisms(); ++k) r.mor_map.push_back(mor1(f.mor(k)));
    return r;
  };
  auto second = [&](const LazyFunctor<FunctorCategory, FunctorCategory>& f) {
    Functor r{out.x1, out.x2, {}, {}};
    for (const auto& o : x1.objects) r.obj_map.push_back(obj2(f.obj(o)));
    for (const auto& t : x1.morphisms) r.mor_map.push_back(mor2(f.mor(t)));
    return r;
  };
  out.d0 = first(d.d0);
  out.d1 = first(d.d1);
  out.e0 = second(d.e0);
  out.e1 = second(d.e1);
  out.e2 = second(d.e2);
  auto cell = [&](const std::function<NatTransf(ObjId)>& c, const Functor& from, const Functor& to) {
    NatTransf r{from, to, {}};
    for (int x = 0; x < out.x0->num_objects(); ++x) r.components.push_back(mor2(c(x)));
    return r;
  };
  out.coh00 = cell(d.coh00, compose_functors(out.e0, out.d0), compose_functors(out.e1, out.d0));
  out.coh01 = cell(d.coh01, compose_functors(out.e0, out.d1), compose_functors(out.e2, out.d0));
  out.coh21 = cell(d.coh21, compose_functors(out.e2, out.d1), compose_functors(out.e1, out.d1));
  return out;
}

DescentCentreVerdict verify_descent_equals_centre(const MonoidalPtr& ap, const Guards& guards) {
  DescentCentreVerdict out;
  HochschildDiagram h = build_hochschild(ap, guards);
  DescentCategory<FunctorCategory> desc;
  try {
    desc = descent_object(h.diagram, guards);
    out.pipeline_agrees = true;
  } catch (const std::logic_error& e) {
    out.comparison_report.add(e.what());
    return out;
  }
  CentreCategory z = compute_centre(ap, guards);
  out.descent_objects = desc.objects.size();
  out.centre_objects = z.objects.size();

  Functor cmp{desc.category, z.category(), {}, {}};
  for (const auto& [a, phi] : desc.objects) {
    auto id = z.find(CentreObject{a, phi.components});
    if (!id) {
      out.comparison_report.add("descent datum on object " + std::to_string(a) + " is not a half-braiding");
      return out;
    }
    cmp.obj_map.push_back(*id);
  }
  for (MorId k = 0; k < desc.category->num_morphisms(); ++k) {
    auto id = z.find_morphism(cmp.obj(desc.category->src(k)), cmp.obj(desc.category->dst(k)), desc.underlying[k]);
    if (!id) {
      out.comparison_report.add("descent morphism does not commute with half-braidings");
      return out;
    }
    cmp.mor_map.push_back(*id);
  }
  out.comparison_report.merge(validate_functor(cmp));
  out.verdict = check_equivalence(cmp);
  out.bijective_on_objects = desc.objects.size() == z.objects.size();
  for (std::size_t i = 0; out.bijective_on_objects && i < cmp.obj_map.size(); ++i)
    out.bijective_on_objects = cmp.obj_map[i] == static_cast<ObjId>(i);
  return out;
}

}  // namespace moncentre
