#include "moncentre/bilimits.hpp"

#include <map>
#include <string>

namespace moncentre {

Assembled assemble_over(const CategoryPtr& base, const std::vector<ObjId>& over,
                        const std::function<bool(int, int, MorId)>& keep, const Guards& guards) {
  const int n = static_cast<int>(over.size());
  std::vector<MorphismData> mors;
  std::vector<MorId> ids(n, kNone);
  Assembled out;
  std::map<std::tuple<int, int, MorId>, MorId> lookup;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (MorId f : base->hom(over[i], over[j])) {
        if (!keep(i, j, f)) continue;
        if (mors.size() >= guards.max_morphisms)
          throw GuardExceeded("constructed category has more than " + std::to_string(guards.max_morphisms) +
                              " morphisms");
        const MorId id = static_cast<MorId>(mors.size());
        lookup[{i, j, f}] = id;
        if (i == j && f == base->identity(over[i])) ids[i] = id;
        mors.push_back({i, j});
        out.underlying.push_back(f);
      }
  for (int i = 0; i < n; ++i)
    if (ids[i] == kNone) throw std::logic_error("subcategory predicate rejects an identity");
  std::vector<FinCategory::ComposeTriple> comp;
  const int m = static_cast<int>(mors.size());
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (mors[f].dst != mors[g].src) continue;
      auto it = lookup.find({mors[f].src, mors[g].dst, base->compose(out.underlying[g], out.underlying[f])});
      if (it == lookup.end()) throw std::logic_error("subcategory predicate is not closed under composition");
      comp.push_back({g, f, it->second});
    }
  out.category = make_category(FinCategory(n, std::move(mors), std::move(ids), comp));
  out.projection = Functor{out.category, base, over, out.underlying};
  return out;
}

FullSubcategory full_subcategory(const CategoryPtr& a, const std::vector<ObjId>& objects) {
  Assembled as = assemble_over(a, objects, [](int, int, MorId) { return true; },
                               Guards{.max_objects = ~std::size_t{0}, .max_morphisms = ~std::size_t{0}});
  return FullSubcategory{as.category, objects, std::move(as.projection)};
}

InsertedCategory<ExplicitCategory> iso_inserter(const Functor& f, const Functor& g, const Guards& guards) {
  if (f.src.get() != g.src.get() && !(*f.src == *g.src))
    throw std::invalid_argument("iso_inserter: functors have different domains");
  if (f.dst.get() != g.dst.get() && !(*f.dst == *g.dst))
    throw std::invalid_argument("iso_inserter: functors have different codomains");
  ExplicitCategory b(f.dst);
  FromExplicit<ExplicitCategory> lf{[&](const ObjId& x) { return f.obj(x); }, [&](const MorId& h) { return f.mor(h); }};
  FromExplicit<ExplicitCategory> lg{[&](const ObjId& x) { return g.obj(x); }, [&](const MorId& h) { return g.mor(h); }};
  return iso_inserter(f.src, b, lf, lg, guards);
}

FullSubcategory equifier(const NatTransf& sigma, const NatTransf& tau) {
  if (!(sigma.src == tau.src) || !(sigma.dst == tau.dst))
    throw std::invalid_argument("equifier: 2-cells are not parallel");
  std::function<MorId(ObjId)> s = [&](ObjId x) { return sigma.components[x]; };
  std::function<MorId(ObjId)> t = [&](ObjId x) { return tau.components[x]; };
  return equifier(sigma.src.src, s, t);
}

ArrowCategory cotensor_with_arrow(const CategoryPtr& a, const Guards& guards) {
  const int m = a->num_morphisms();
  if (static_cast<std::size_t>(m) > guards.max_objects)
    throw GuardExceeded("arrow category would have more than " + std::to_string(guards.max_objects) + " objects");
  ArrowCategory out;
  std::vector<MorphismData> mors;
  std::vector<MorId> ids(m, kNone);
  std::map<std::tuple<MorId, MorId, MorId, MorId>, MorId> lookup;  // (f, g, top, bottom)
  for (MorId f = 0; f < m; ++f)
    for (MorId g = 0; g < m; ++g)
      for (MorId top : a->hom(a->src(f), a->src(g)))
        for (MorId bottom : a->hom(a->dst(f), a->dst(g))) {
          if (a->compose(bottom, f) != a->compose(g, top)) continue;
          if (mors.size() >= guards.max_morphisms)
            throw GuardExceeded("arrow category has more than " + std::to_string(guards.max_morphisms) + " morphisms");
          const MorId id = static_cast<MorId>(mors.size());
          lookup[{f, g, top, bottom}] = id;
          if (f == g && a->is_identity(top) && a->is_identity(bottom)) ids[f] = id;
          mors.push_back({f, g});
          out.squares.push_back({top, bottom});
        }
  std::vector<FinCategory::ComposeTriple> comp;
  const int k = static_cast<int>(mors.size());
  for (int q = 0; q < k; ++q)
    for (int p = 0; p < k; ++p) {
      if (mors[p].dst != mors[q].src) continue;
      comp.push_back({q, p,
                      lookup.at({mors[p].src, mors[q].dst, a->compose(out.squares[q].first, out.squares[p].first),
                                 a->compose(out.squares[q].second, out.squares[p].second)})});
    }
  out.category = make_category(FinCategory(m, std::move(mors), std::move(ids), comp));
  out.dom = Functor{out.category, a, {}, {}};
  out.cod = Functor{out.category, a, {}, {}};
  for (MorId f = 0; f < m; ++f) {
    out.dom.obj_map.push_back(a->src(f));
    out.cod.obj_map.push_back(a->dst(f));
  }
  for (const auto& [top, bottom] : out.squares) {
    out.dom.mor_map.push_back(top);
    out.cod.mor_map.push_back(bottom);
  }
  return out;
}

namespace {

bool same_category(const CategoryPtr& a, const CategoryPtr& b) { return a.get() == b.get() || *a == *b; }

void check_functor_between(Report& r, const std::string& name, const Functor& f, const CategoryPtr& src,
                           const CategoryPtr& dst) {
  if (!same_category(f.src, src) || !same_category(f.dst, dst)) {
    r.add(name + ": wrong endpoints");
    return;
  }
  r.merge(validate_functor(f), name + ": ");
}

void check_cell(Report& r, const std::string& name, const NatTransf& t, const Functor& from, const Functor& to) {
  if (!(t.src == from) || !(t.dst == to)) {
    r.add(name + ": wrong source or target functor");
    return;
  }
  Report nat = validate_nat_transf(t);
  r.merge(nat, name + ": ");
  if (!nat.ok()) return;
  for (std::size_t x = 0; x < t.components.size(); ++x)
    if (!t.dst.dst->is_invertible(t.components[x])) r.add(name + ": component at " + std::to_string(x) + " is not invertible");
}

}  // namespace

Report validate_diagram(const DiagramData& d) {
  Report r;
  r.merge(validate_category(*d.x0), "X0: ");
  r.merge(validate_category(*d.x1), "X1: ");
  r.merge(validate_category(*d.x2), "X2: ");
  if (!r.ok()) return r;
  check_functor_between(r, "d0", d.d0, d.x0, d.x1);
  check_functor_between(r, "d1", d.d1, d.x0, d.x1);
  check_functor_between(r, "e0", d.e0, d.x1, d.x2);
  check_functor_between(r, "e1", d.e1, d.x1, d.x2);
  check_functor_between(r, "e2", d.e2, d.x1, d.x2);
  if (!r.ok()) return r;
  check_cell(r, "coh00", d.coh00, compose_functors(d.e0, d.d0), compose_functors(d.e1, d.d0));
  check_cell(r, "coh01", d.coh01, compose_functors(d.e0, d.d1), compose_functors(d.e2, d.d0));
  check_cell(r, "coh21", d.coh21, compose_functors(d.e2, d.d1), compose_functors(d.e1, d.d1));
  return r;
}

ExplicitDiagram explicit_diagram(const DiagramData& d) {
  auto wrap0 = [](const Functor& f) {
    return FromExplicit<ExplicitCategory>{[f](const ObjId& x) { return f.obj(x); },
                                          [f](const MorId& h) { return f.mor(h); }};
  };
  auto cell = [](const NatTransf& t) { return std::function<MorId(ObjId)>([t](ObjId x) { return t.components[x]; }); };
  return ExplicitDiagram{d.x0,         ExplicitCategory(d.x1), ExplicitCategory(d.x2), wrap0(d.d0),
                         wrap0(d.d1),  wrap0(d.e0),            wrap0(d.e1),            wrap0(d.e2),
                         cell(d.coh00), cell(d.coh01),         cell(d.coh21)};
}

std::size_t count_descent_data(const ExplicitDiagram& d, const CategoryPtr& t, const Guards& guards) {
  std::size_t count = 0;
  const FinCategory& tc = *t;
  const int nt = tc.num_objects();
  for (const Functor& x : enumerate_functors(t, d.x0, guards.max_objects, guards.max_search_nodes)) {
    std::vector<MorId> phi(nt, kNone);
    auto rec = [&](auto&& self, int k) -> void {
      if (k == nt) {
        for (MorId h = 0; h < tc.num_morphisms(); ++h) {
          const MorId xh = x.mor(h);
          if (d.x1.compose(d.d1.mor(xh), phi[tc.src(h)]) != d.x1.compose(phi[tc.dst(h)], d.d0.mor(xh))) return;
        }
        ++count;
        return;
      }
      const ObjId xo = x.obj(k);
      for (MorId p : d.x1.hom(d.d0.obj(xo), d.d1.obj(xo))) {
        if (!d.x1.is_invertible(p) || !cocycle_holds(d, xo, p)) continue;
        phi[k] = p;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  return count;
}

}  // namespace moncentre
