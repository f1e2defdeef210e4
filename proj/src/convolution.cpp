#include "moncentre/convolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "moncentre/union_find.hpp"

namespace moncentre {

Report validate_set_functor(const SetFunctor& f) {
  Report r;
  const FinCategory& c = *f.base;
  if (static_cast<int>(f.sets.size()) != c.num_objects() || static_cast<int>(f.action.size()) != c.num_morphisms()) {
    r.add("structural: table sizes do not match the base category");
    return r;
  }
  for (int a = 0; a < c.num_objects(); ++a)
    if (f.sets[a] < 0) r.add("negative set size at object " + std::to_string(a));
  for (int k = 0; k < c.num_morphisms(); ++k) {
    if (static_cast<int>(f.action[k].size()) != f.sets[c.src(k)]) {
      r.add("action of morphism " + std::to_string(k) + " has the wrong domain");
      continue;
    }
    for (int v : f.action[k])
      if (v < 0 || v >= f.sets[c.dst(k)]) r.add("action of morphism " + std::to_string(k) + " leaves its codomain");
  }
  if (!r.ok()) return r;
  for (int a = 0; a < c.num_objects(); ++a)
    for (int x = 0; x < f.sets[a]; ++x)
      if (f.action[c.identity(a)][x] != x) r.add("identity at " + std::to_string(a) + " does not act trivially");
  for (const auto& [g, h, gh] : c.compose_triples())
    for (int x = 0; x < f.sets[c.src(h)]; ++x)
      if (f.action[gh][x] != f.action[g][f.action[h][x]])
        r.add("composition not preserved at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
  return r;
}

Report validate_set_map(const SetFunctor& f, const SetFunctor& g, const SetMap& m) {
  Report r;
  const FinCategory& c = *f.base;
  if (static_cast<int>(m.components.size()) != c.num_objects()) {
    r.add("structural: one component per object required");
    return r;
  }
  for (int a = 0; a < c.num_objects(); ++a) {
    if (static_cast<int>(m.components[a].size()) != f.sets[a]) r.add("component at " + std::to_string(a) + " has the wrong domain");
    for (int v : m.components[a])
      if (v < 0 || v >= g.sets[a]) r.add("component at " + std::to_string(a) + " leaves its codomain");
  }
  if (!r.ok()) return r;
  for (int k = 0; k < c.num_morphisms(); ++k)
    for (int x = 0; x < f.sets[c.src(k)]; ++x)
      if (m.components[c.dst(k)][f.action[k][x]] != g.action[k][m.components[c.src(k)][x]])
        r.add("naturality fails at morphism " + std::to_string(k) + ", element " + std::to_string(x));
  return r;
}

bool is_bijective(const SetMap& m, const SetFunctor& f, const SetFunctor& g) {
  for (std::size_t a = 0; a < m.components.size(); ++a) {
    if (f.sets[a] != g.sets[a]) return false;
    std::set<int> image(m.components[a].begin(), m.components[a].end());
    if (static_cast<int>(image.size()) != g.sets[a]) return false;
  }
  return true;
}

SetMap identity_set_map(const SetFunctor& f) {
  SetMap m;
  for (int n : f.sets) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    m.components.push_back(std::move(id));
  }
  return m;
}

SetMap compose_set_maps(const SetMap& n, const SetMap& m) {
  SetMap out;
  for (std::size_t a = 0; a < m.components.size(); ++a) {
    std::vector<int> c;
    for (int x : m.components[a]) c.push_back(n.components[a][x]);
    out.components.push_back(std::move(c));
  }
  return out;
}

SetFunctor representable(const CategoryPtr& base, ObjId b) {
  const FinCategory& c = *base;
  SetFunctor f{base, {}, {}};
  for (int a = 0; a < c.num_objects(); ++a) f.sets.push_back(static_cast<int>(c.hom(b, a).size()));
  for (int k = 0; k < c.num_morphisms(); ++k) {
    const auto& from = c.hom(b, c.src(k));
    const auto& to = c.hom(b, c.dst(k));
    std::vector<int> act;
    for (MorId s : from)
      act.push_back(static_cast<int>(std::find(to.begin(), to.end(), c.compose(k, s)) - to.begin()));
    f.action.push_back(std::move(act));
  }
  return f;
}

SetFunctor empty_set_functor(const CategoryPtr& base) {
  return SetFunctor{base, std::vector<int>(base->num_objects(), 0),
                    std::vector<std::vector<int>>(base->num_morphisms())};
}

SetFunctor convolution_unit(const MonoidalStructure& b) { return representable(b.base, b.unit); }

namespace {

void coend_at(const SetFunctor& f, const SetFunctor& g, const MonoidalStructure& m, ObjId a,
              std::vector<Generator>& gens, std::map<Generator, int>& index, std::vector<int>& class_of,
              std::vector<int>& reps) {
  const FinCategory& c = *m.base;
  const int n = c.num_objects();
  for (int b = 0; b < n; ++b)
    for (int cc = 0; cc < n; ++cc)
      for (MorId h : c.hom(m.tensor(b, cc), a))
        for (int s = 0; s < f.sets[b]; ++s)
          for (int t = 0; t < g.sets[cc]; ++t) {
            index.emplace(Generator{b, cc, h, s, t}, static_cast<int>(gens.size()));
            gens.push_back({b, cc, h, s, t});
          }
  UnionFind uf(static_cast<int>(gens.size()));
  // (b, c, h'∘(u⊗v), s, t) ~ (b', c', h', F u s, G v t) for u : b → b', v : c → c'
  for (int b2 = 0; b2 < n; ++b2)
    for (int c2 = 0; c2 < n; ++c2)
      for (MorId h2 : c.hom(m.tensor(b2, c2), a))
        for (MorId u : c.into(b2))
          for (MorId v : c.into(c2)) {
            const MorId h = c.compose(h2, m.tensor_mor(u, v));
            const ObjId b = c.src(u), cc = c.src(v);
            for (int s = 0; s < f.sets[b]; ++s)
              for (int t = 0; t < g.sets[cc]; ++t)
                uf.unite(index.at({b, cc, h, s, t}), index.at({b2, c2, h2, f.action[u][s], g.action[v][t]}));
          }
  class_of.assign(gens.size(), -1);
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    const int r = uf.find(i);
    if (r == i) {
      class_of[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    } else {
      class_of[i] = class_of[r];
    }
  }
}

}  // namespace

Convolution day_convolve(const SetFunctor& f, const SetFunctor& g, const MonoidalStructure& m, ExecPolicy policy) {
  if (f.base.get() != m.base.get() && !(*f.base == *m.base))
    throw std::invalid_argument("day_convolve: F is not defined on the monoidal base");
  if (g.base.get() != m.base.get() && !(*g.base == *m.base))
    throw std::invalid_argument("day_convolve: G is not defined on the monoidal base");
  const FinCategory& c = *m.base;
  const int n = c.num_objects();
  Convolution out;
  out.generators.resize(n);
  out.class_of.resize(n);
  out.representative.resize(n);
  out.generator_index.resize(n);
  for_each_index(policy, static_cast<std::size_t>(n), [&](std::size_t a) {
    coend_at(f, g, m, static_cast<ObjId>(a), out.generators[a], out.generator_index[a], out.class_of[a],
             out.representative[a]);
  });
  out.functor.base = m.base;
  for (int a = 0; a < n; ++a) out.functor.sets.push_back(static_cast<int>(out.representative[a].size()));
  for (int k = 0; k < c.num_morphisms(); ++k) {
    const ObjId a = c.src(k), a2 = c.dst(k);
    std::vector<int> act;
    for (int r : out.representative[a]) {
      Generator gen = out.generators[a][r];
      gen[2] = c.compose(k, gen[2]);
      act.push_back(out.class_at(a2, gen));
    }
    out.functor.action.push_back(std::move(act));
  }
  return out;
}

InducedMap induce_from_generators(const Convolution& c,
                                  const std::function<int(ObjId a, const Generator& g)>& image) {
  InducedMap out;
  for (std::size_t a = 0; a < c.generators.size(); ++a) {
    std::vector<int> comp;
    for (int r : c.representative[a]) comp.push_back(image(static_cast<ObjId>(a), c.generators[a][r]));
    for (std::size_t i = 0; i < c.generators[a].size(); ++i)
      if (image(static_cast<ObjId>(a), c.generators[a][i]) != comp[c.class_of[a][i]])
        out.well_defined.add("generator " + std::to_string(i) + " at object " + std::to_string(a) +
                             " maps differently from its class representative");
    out.map.components.push_back(std::move(comp));
  }
  return out;
}

InducedMap yoneda_map(const MonoidalStructure& m, ObjId x, ObjId y, const Convolution& conv) {
  const FinCategory& c = *m.base;
  const ObjId xy = m.tensor(x, y);
  return induce_from_generators(conv, [&](ObjId a, const Generator& g) {
    // s, t index hom(x, b) and hom(y, c)
    const MorId s = c.hom(x, g[0])[g[3]];
    const MorId t = c.hom(y, g[1])[g[4]];
    const MorId v = c.compose(g[2], m.tensor_mor(s, t));
    const auto& target = c.hom(xy, a);
    return static_cast<int>(std::find(target.begin(), target.end(), v) - target.begin());
  });
}

InducedMap convolution_braiding(const MonoidalStructure& m, const Braiding& br, const Convolution& fg,
                                const Convolution& gf) {
  const int n = m.num_objects();
  return induce_from_generators(fg, [&](ObjId a, const Generator& g) {
    return gf.class_at(a, {g[1], g[0], m.compose(g[2], br.at(g[1], g[0], n)), g[4], g[3]});
  });
}

InducedMap convolution_associator(const MonoidalStructure& m, const Convolution& fg, const Convolution& fg_h,
                                  const Convolution& gh, const Convolution& f_gh) {
  return induce_from_generators(fg_h, [&](ObjId a, const Generator& outer) {
    const ObjId d = outer[0], e = outer[1];
    const Generator& inner = fg.generators[d][fg.representative[d][outer[3]]];
    const ObjId b = inner[0], c = inner[1];
    const ObjId ce = m.tensor(c, e);
    const MorId h = m.then({m.alpha_inv(b, c, e), m.tensor_mor(inner[2], m.id(e)), outer[2]});
    const int v = gh.class_at(ce, {c, e, m.id(ce), inner[4], outer[4]});
    return f_gh.class_at(a, {b, ce, h, inner[3], v});
  });
}

InducedMap convolution_left_unitor(const MonoidalStructure& m, const SetFunctor& f, const Convolution& jf) {
  const FinCategory& c = *m.base;
  return induce_from_generators(jf, [&](ObjId, const Generator& g) {
    const MorId s = c.hom(m.unit, g[0])[g[3]];
    const MorId k = m.then({c.inverse(m.lambda(g[1])), m.tensor_mor(s, m.id(g[1])), g[2]});
    return f.action[k][g[4]];
  });
}

InducedMap convolution_right_unitor(const MonoidalStructure& m, const SetFunctor& f, const Convolution& fj) {
  const FinCategory& c = *m.base;
  return induce_from_generators(fj, [&](ObjId, const Generator& g) {
    const MorId t = c.hom(m.unit, g[1])[g[4]];
    const MorId k = m.then({c.inverse(m.rho(g[0])), m.tensor_mor(m.id(g[0]), t), g[2]});
    return f.action[k][g[3]];
  });
}

InducedMap convolve_maps(const SetMap& phi, const SetMap& psi, const Convolution& fg, const Convolution& fg2) {
  return induce_from_generators(fg, [&](ObjId a, const Generator& g) {
    return fg2.class_at(a, {g[0], g[1], g[2], phi.components[g[0]][g[3]], psi.components[g[1]][g[4]]});
  });
}

}  // namespace moncentre
