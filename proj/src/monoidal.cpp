#include "moncentre/monoidal.hpp"

#include <stdexcept>
#include <string>

namespace moncentre {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

bool has_endpoints(const FinCategory& c, MorId f, ObjId s, ObjId d) {
  return f >= 0 && f < c.num_morphisms() && c.src(f) == s && c.dst(f) == d;
}

}  // namespace

MorId MonoidalStructure::then(std::initializer_list<MorId> chain) const {
  MorId acc = kNone;
  bool first = true;
  for (MorId f : chain) {
    if (first) {
      acc = f;
      first = false;
    } else {
      acc = base->compose(f, acc);
    }
    if (acc == kNone) return kNone;
  }
  return acc;
}

Report check_pentagon_triangle(const MonoidalStructure& mon) {
  Report r;
  const FinCategory& c = *mon.base;
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  const std::size_t nn = static_cast<std::size_t>(n);
  if (mon.tensor_obj_table.size() != nn * nn ||
      mon.tensor_mor_table.size() != static_cast<std::size_t>(m) * m ||
      mon.alpha_table.size() != nn * nn * nn || mon.lambda_table.size() != nn ||
      mon.rho_table.size() != nn) {
    r.add("structural: monoidal tables have the wrong size");
    return r;
  }
  if (n == 0) return r;
  if (mon.unit < 0 || mon.unit >= n) {
    r.add("structural: unit is not an object");
    return r;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ObjId t = mon.tensor(a, b);
      if (t < 0 || t >= n) {
        r.add("structural: tensor of objects " + tuple_str({a, b}) + " is not an object");
        return r;
      }
    }
  // tensor is a bifunctor
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (!has_endpoints(c, mon.tensor_mor(f, g), mon.tensor(c.src(f), c.src(g)),
                         mon.tensor(c.dst(f), c.dst(g)))) {
        r.add("structural: tensor of morphisms " + tuple_str({f, g}) + " has wrong endpoints");
        return r;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mon.tensor_mor(c.identity(a), c.identity(b)) != c.identity(mon.tensor(a, b)))
        r.add("tensor does not preserve identities at " + tuple_str({a, b}));
  const auto triples = c.compose_triples();
  for (const auto& [g1, f1, gf1] : triples)
    for (const auto& [g2, f2, gf2] : triples)
      if (mon.compose(mon.tensor_mor(g1, g2), mon.tensor_mor(f1, f2)) != mon.tensor_mor(gf1, gf2))
        r.add("tensor does not preserve composition at " + tuple_str({g1, f1, g2, f2}));

  // coherence cells: endpoints and invertibility
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const MorId al = mon.alpha(a, b, d);
        if (!has_endpoints(c, al, mon.tensor(mon.tensor(a, b), d), mon.tensor(a, mon.tensor(b, d)))) {
          r.add("structural: associator at " + tuple_str({a, b, d}) + " has wrong endpoints");
          return r;
        }
        if (!c.is_invertible(al)) r.add("non-invertible associator component at " + tuple_str({a, b, d}));
      }
  for (int a = 0; a < n; ++a) {
    if (!has_endpoints(c, mon.lambda(a), mon.tensor(mon.unit, a), a)) {
      r.add("structural: left unitor at " + std::to_string(a) + " has wrong endpoints");
      return r;
    }
    if (!has_endpoints(c, mon.rho(a), mon.tensor(a, mon.unit), a)) {
      r.add("structural: right unitor at " + std::to_string(a) + " has wrong endpoints");
      return r;
    }
    if (!c.is_invertible(mon.lambda(a))) r.add("non-invertible left unitor at " + std::to_string(a));
    if (!c.is_invertible(mon.rho(a))) r.add("non-invertible right unitor at " + std::to_string(a));
  }
  if (!r.ok()) return r;

  // naturality
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h) {
        const MorId lhs = mon.compose(mon.alpha(c.dst(f), c.dst(g), c.dst(h)),
                                      mon.tensor_mor(mon.tensor_mor(f, g), h));
        const MorId rhs = mon.compose(mon.tensor_mor(f, mon.tensor_mor(g, h)),
                                      mon.alpha(c.src(f), c.src(g), c.src(h)));
        if (lhs != rhs) r.add("associator not natural at morphisms " + tuple_str({f, g, h}));
      }
  const MorId id_e = c.identity(mon.unit);
  for (int f = 0; f < m; ++f) {
    if (mon.compose(mon.lambda(c.dst(f)), mon.tensor_mor(id_e, f)) !=
        mon.compose(f, mon.lambda(c.src(f))))
      r.add("left unitor not natural at morphism " + std::to_string(f));
    if (mon.compose(mon.rho(c.dst(f)), mon.tensor_mor(f, id_e)) != mon.compose(f, mon.rho(c.src(f))))
      r.add("right unitor not natural at morphism " + std::to_string(f));
  }

  // pentagon
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) {
          const MorId lhs = mon.then({mon.alpha(mon.tensor(a, b), d, e), mon.alpha(a, b, mon.tensor(d, e))});
          const MorId rhs = mon.then({mon.tensor_mor(mon.alpha(a, b, d), c.identity(e)),
                                      mon.alpha(a, mon.tensor(b, d), e),
                                      mon.tensor_mor(c.identity(a), mon.alpha(b, d, e))});
          if (lhs != rhs) {
            r.add("pentagon fails at " + tuple_str({a, b, d, e}));
            return r;
          }
        }
  // triangle
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const MorId lhs = mon.compose(mon.tensor_mor(c.identity(a), mon.lambda(b)), mon.alpha(a, mon.unit, b));
      const MorId rhs = mon.tensor_mor(mon.rho(a), c.identity(b));
      if (lhs != rhs) {
        r.add("triangle fails at " + tuple_str({a, b}));
        return r;
      }
    }
  return r;
}

MonoidalPtr discrete_group_monoidal(const Group& g) {
  const int n = g.order();
  auto m = std::make_shared<MonoidalStructure>();
  m->base = discrete_category(n);
  m->tensor_obj_table.resize(n * n);
  m->tensor_mor_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m->tensor_obj_table[a * n + b] = g.mul(a, b);
      m->tensor_mor_table[a * n + b] = g.mul(a, b);  // identity morphism ids equal object ids
    }
  m->unit = g.identity();
  m->alpha_table.resize(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m->alpha_table[(a * n + b) * n + c] = g.mul(g.mul(a, b), c);
  for (int a = 0; a < n; ++a) {
    m->lambda_table.push_back(a);
    m->rho_table.push_back(a);
  }
  return m;
}

MonoidalPtr discrete_group_monoidal(const std::vector<std::vector<int>>& mult_table) {
  return discrete_group_monoidal(Group(mult_table));
}

MonoidalPtr signed_group_monoidal(const Group& g, const std::vector<int>& sign) {
  const int n = g.order();
  if (static_cast<int>(sign.size()) != n * n * n) throw std::invalid_argument("sign table size");
  std::vector<MorphismData> mors;
  std::vector<MorId> ids;
  std::vector<FinCategory::ComposeTriple> comp;
  for (int a = 0; a < n; ++a) {
    mors.push_back({a, a});
    mors.push_back({a, a});
    ids.push_back(2 * a);
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) comp.push_back({2 * a + s, 2 * a + t, 2 * a + (s ^ t)});
  }
  auto m = std::make_shared<MonoidalStructure>();
  m->base = make_category(FinCategory(n, std::move(mors), std::move(ids), comp));
  const int mm = 2 * n;
  m->tensor_obj_table.resize(n * n);
  m->tensor_mor_table.resize(mm * mm);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m->tensor_obj_table[a * n + b] = g.mul(a, b);
  for (int f = 0; f < mm; ++f)
    for (int h = 0; h < mm; ++h)
      m->tensor_mor_table[f * mm + h] = 2 * g.mul(f / 2, h / 2) + ((f % 2) ^ (h % 2));
  m->unit = g.identity();
  m->alpha_table.resize(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int s = sign[(a * n + b) * n + c];
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be ±1");
        m->alpha_table[(a * n + b) * n + c] = 2 * g.mul(g.mul(a, b), c) + (s < 0 ? 1 : 0);
      }
  for (int a = 0; a < n; ++a) {
    m->lambda_table.push_back(2 * a);
    m->rho_table.push_back(2 * a);
  }
  return m;
}

MonoidalPtr preorder_monoidal(const CategoryPtr& p, const std::vector<std::vector<int>>& op, int unit) {
  const int n = p->num_objects();
  auto arrow = [&](int a, int b) -> MorId {
    const auto& h = p->hom(a, b);
    return h.empty() ? kNone : h.front();
  };
  auto m = std::make_shared<MonoidalStructure>();
  m->base = p;
  m->unit = unit;
  m->tensor_obj_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m->tensor_obj_table[a * n + b] = op[a][b];
  const int mm = p->num_morphisms();
  m->tensor_mor_table.resize(mm * mm);
  for (int f = 0; f < mm; ++f)
    for (int g = 0; g < mm; ++g) {
      const MorId t = arrow(op[p->src(f)][p->src(g)], op[p->dst(f)][p->dst(g)]);
      if (t == kNone) throw std::invalid_argument("preorder tensor is not monotone");
      m->tensor_mor_table[f * mm + g] = t;
    }
  m->alpha_table.resize(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int l = op[op[a][b]][c];
        const int r = op[a][op[b][c]];
        if (l != r) throw std::invalid_argument("preorder tensor is not associative");
        m->alpha_table[(a * n + b) * n + c] = p->identity(l);
      }
  for (int a = 0; a < n; ++a) {
    if (op[unit][a] != a || op[a][unit] != a) throw std::invalid_argument("unit is not a unit");
    m->lambda_table.push_back(p->identity(a));
    m->rho_table.push_back(p->identity(a));
  }
  return m;
}

MonoidalPtr poset_min_monoidal() {
  return preorder_monoidal(walking_arrow(), {{0, 0}, {0, 1}}, 1);
}

// ---------------------------------------------------------------------------

Report check_braiding(const MonoidalStructure& mon, const Braiding& br) {
  Report r;
  const FinCategory& c = *mon.base;
  const int n = c.num_objects();
  if (static_cast<int>(br.components.size()) != n * n) {
    r.add("structural: braiding table has the wrong size");
    return r;
  }
  auto cb = [&](ObjId a, ObjId b) { return br.at(a, b, n); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!has_endpoints(c, cb(a, b), mon.tensor(a, b), mon.tensor(b, a))) {
        r.add("structural: braiding at " + tuple_str({a, b}) + " has wrong endpoints");
        return r;
      }
      if (!c.is_invertible(cb(a, b))) r.add("braiding not invertible at " + tuple_str({a, b}));
    }
  const int m = c.num_morphisms();
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const MorId lhs = mon.compose(cb(c.dst(f), c.dst(g)), mon.tensor_mor(f, g));
      const MorId rhs = mon.compose(mon.tensor_mor(g, f), cb(c.src(f), c.src(g)));
      if (lhs != rhs) r.add("braiding not natural at morphisms " + tuple_str({f, g}));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const MorId h1l = mon.then({mon.alpha(a, b, d), cb(a, mon.tensor(b, d)), mon.alpha(b, d, a)});
        const MorId h1r = mon.then({mon.tensor_mor(cb(a, b), c.identity(d)), mon.alpha(b, a, d),
                                    mon.tensor_mor(c.identity(b), cb(a, d))});
        if (h1l != h1r) r.add("first hexagon fails at " + tuple_str({a, b, d}));
        const MorId h2l =
            mon.then({mon.alpha_inv(a, b, d), cb(mon.tensor(a, b), d), mon.alpha_inv(d, a, b)});
        const MorId h2r = mon.then({mon.tensor_mor(c.identity(a), cb(b, d)), mon.alpha_inv(a, d, b),
                                    mon.tensor_mor(cb(a, d), c.identity(b))});
        if (h2l != h2r) r.add("second hexagon fails at " + tuple_str({a, b, d}));
      }
  return r;
}

bool is_symmetric(const MonoidalStructure& mon, const Braiding& br) {
  const int n = mon.num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mon.compose(br.at(b, a, n), br.at(a, b, n)) != mon.id(mon.tensor(a, b))) return false;
  return true;
}

Braiding identity_braiding(const MonoidalStructure& mon) {
  const int n = mon.num_objects();
  Braiding br;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (mon.tensor(a, b) != mon.tensor(b, a))
        throw std::invalid_argument("tensor is not commutative on objects");
      br.components.push_back(mon.id(mon.tensor(a, b)));
    }
  return br;
}

// ---------------------------------------------------------------------------

Report check_strong_monoidal(const StrongMonoidalFunctor& sf) {
  Report r = validate_functor(sf.functor);
  if (!r.ok()) return r;
  const MonoidalStructure& s = *sf.src;
  const MonoidalStructure& d = *sf.dst;
  const FinCategory& sc = *s.base;
  const FinCategory& dc = *d.base;
  const Functor& f = sf.functor;
  const int n = sc.num_objects();
  if (static_cast<int>(sf.tensor_iso.size()) != n * n) {
    r.add("structural: tensor comparison family has the wrong size");
    return r;
  }
  auto mu = [&](ObjId a, ObjId b) { return sf.tensor_iso[a * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!has_endpoints(dc, mu(a, b), d.tensor(f.obj(a), f.obj(b)), f.obj(s.tensor(a, b)))) {
        r.add("tensor comparison at " + tuple_str({a, b}) + " has wrong endpoints");
        return r;
      }
      if (!dc.is_invertible(mu(a, b))) r.add("tensor comparison not invertible at " + tuple_str({a, b}));
    }
  if (n > 0) {
    if (!has_endpoints(dc, sf.unit_iso, d.unit, f.obj(s.unit))) {
      r.add("unit comparison has wrong endpoints");
      return r;
    }
    if (!dc.is_invertible(sf.unit_iso)) r.add("unit comparison not invertible");
  }
  const int m = sc.num_morphisms();
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      const MorId lhs = d.compose(f.mor(s.tensor_mor(g, h)), mu(sc.src(g), sc.src(h)));
      const MorId rhs = d.compose(mu(sc.dst(g), sc.dst(h)), d.tensor_mor(f.mor(g), f.mor(h)));
      if (lhs != rhs) r.add("tensor comparison not natural at morphisms " + tuple_str({g, h}));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const MorId lhs = d.then({d.tensor_mor(mu(a, b), d.id(f.obj(c))), mu(s.tensor(a, b), c),
                                  f.mor(s.alpha(a, b, c))});
        const MorId rhs = d.then({d.alpha(f.obj(a), f.obj(b), f.obj(c)),
                                  d.tensor_mor(d.id(f.obj(a)), mu(b, c)), mu(a, s.tensor(b, c))});
        if (lhs != rhs) r.add("associativity hexagon fails at " + tuple_str({a, b, c}));
      }
  for (int a = 0; a < n; ++a) {
    const MorId left = d.then({d.tensor_mor(sf.unit_iso, d.id(f.obj(a))), mu(s.unit, a), f.mor(s.lambda(a))});
    if (left != d.lambda(f.obj(a))) r.add("left unit square fails at " + std::to_string(a));
    const MorId right = d.then({d.tensor_mor(d.id(f.obj(a)), sf.unit_iso), mu(a, s.unit), f.mor(s.rho(a))});
    if (right != d.rho(f.obj(a))) r.add("right unit square fails at " + std::to_string(a));
  }
  return r;
}

StrongMonoidalFunctor strict_monoidal_functor(Functor f, MonoidalPtr src, MonoidalPtr dst) {
  StrongMonoidalFunctor sf{std::move(f), std::move(src), std::move(dst), {}, kNone};
  const int n = sf.src->num_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sf.tensor_iso.push_back(sf.dst->id(sf.dst->tensor(sf.functor.obj(a), sf.functor.obj(b))));
  if (sf.dst->num_objects() > 0) sf.unit_iso = sf.dst->id(sf.dst->unit);
  return sf;
}

// ---------------------------------------------------------------------------

PowerMonoidal pointwise_monoidal(const CategoryPtr& e, const MonoidalPtr& mp, const Guards& guards) {
  const MonoidalStructure& m = *mp;
  PowerMonoidal pw{functor_category(e, m.base, guards), nullptr};
  const auto& fc = pw.functors;
  const FinCategory& ec = *e;
  const int n = static_cast<int>(fc.objects.size());
  const int mm = static_cast<int>(fc.morphisms.size());

  auto tensor_functor = [&](const Functor& f, const Functor& g) {
    Functor t{e, m.base, {}, {}};
    for (int x = 0; x < ec.num_objects(); ++x) t.obj_map.push_back(m.tensor(f.obj(x), g.obj(x)));
    for (int k = 0; k < ec.num_morphisms(); ++k) t.mor_map.push_back(m.tensor_mor(f.mor(k), g.mor(k)));
    return t;
  };
  auto find_obj = [&](const Functor& f) {
    auto id = fc.find_object(f);
    if (!id) throw std::logic_error("pointwise tensor left the functor category");
    return *id;
  };
  auto find_mor = [&](const NatTransf& t) {
    auto id = fc.find_morphism(t);
    if (!id) throw std::logic_error("pointwise cell is not a natural transformation");
    return *id;
  };

  auto out = std::make_shared<MonoidalStructure>();
  out->base = fc.category;
  out->tensor_obj_table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out->tensor_obj_table[a * n + b] = find_obj(tensor_functor(fc.objects[a], fc.objects[b]));
  out->tensor_mor_table.resize(static_cast<std::size_t>(mm) * mm);
  for (int f = 0; f < mm; ++f)
    for (int g = 0; g < mm; ++g) {
      const auto& s = fc.morphisms[f];
      const auto& t = fc.morphisms[g];
      NatTransf x{tensor_functor(s.src, t.src), tensor_functor(s.dst, t.dst), {}};
      for (int k = 0; k < ec.num_objects(); ++k)
        x.components.push_back(m.tensor_mor(s.components[k], t.components[k]));
      out->tensor_mor_table[static_cast<std::size_t>(f) * mm + g] = find_mor(x);
    }
  Functor unit{e, m.base, {}, {}};
  for (int x = 0; x < ec.num_objects(); ++x) unit.obj_map.push_back(m.unit);
  for (int k = 0; k < ec.num_morphisms(); ++k) unit.mor_map.push_back(m.id(m.unit));
  out->unit = find_obj(unit);
  out->alpha_table.resize(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto &fa = fc.objects[a], &fb = fc.objects[b], &fcc = fc.objects[c];
        NatTransf x{tensor_functor(tensor_functor(fa, fb), fcc), tensor_functor(fa, tensor_functor(fb, fcc)), {}};
        for (int k = 0; k < ec.num_objects(); ++k) x.components.push_back(m.alpha(fa.obj(k), fb.obj(k), fcc.obj(k)));
        out->alpha_table[(static_cast<std::size_t>(a) * n + b) * n + c] = find_mor(x);
      }
  for (int a = 0; a < n; ++a) {
    const auto& fa = fc.objects[a];
    NatTransf l{tensor_functor(unit, fa), fa, {}};
    NatTransf r{tensor_functor(fa, unit), fa, {}};
    for (int k = 0; k < ec.num_objects(); ++k) {
      l.components.push_back(m.lambda(fa.obj(k)));
      r.components.push_back(m.rho(fa.obj(k)));
    }
    out->lambda_table.push_back(find_mor(l));
    out->rho_table.push_back(find_mor(r));
  }
  pw.monoidal = out;
  return pw;
}

}  // namespace moncentre
