#include "moncentre/centre.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "moncentre/hashing.hpp"

namespace moncentre {

namespace {

std::string at_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

/// α⁻¹_{u,x,y}, γ_x⊗1_y, α_{x,u,y}, 1_x⊗γ_y, α⁻¹_{x,y,u} composed: the
/// two-step passage of u across x then y.
MorId two_step_passage(const MonoidalStructure& m, ObjId u, ObjId x, ObjId y, MorId gx, MorId gy) {
  return m.then({m.alpha_inv(u, x, y), m.tensor_mor(gx, m.id(y)), m.alpha(x, u, y),
                 m.tensor_mor(m.id(x), gy), m.alpha_inv(x, y, u)});
}

std::vector<int> centre_key(const CentreObject& o) {
  std::vector<int> k{o.a};
  k.insert(k.end(), o.half_braiding.begin(), o.half_braiding.end());
  return k;
}

std::vector<int> piece_key(const CentrePiece& p) {
  std::vector<int> k = p.u.obj_map;
  k.insert(k.end(), p.u.mor_map.begin(), p.u.mor_map.end());
  k.insert(k.end(), p.gamma.begin(), p.gamma.end());
  return k;
}

}  // namespace

Report check_centre_piece(const CentrePiece& p) {
  Report r;
  const MonoidalStructure& m = *p.A;
  const FinCategory& a = *m.base;
  const FinCategory& u_src = *p.u.src;
  const int nu = u_src.num_objects();
  const int na = a.num_objects();
  if (p.u.dst.get() != m.base.get() && !(*p.u.dst == a)) {
    r.add("structural: u does not land in the monoidal category");
    return r;
  }
  r.merge(validate_functor(p.u), "structural: u: ");
  if (!r.ok()) return r;
  if (static_cast<int>(p.gamma.size()) != nu * na) {
    r.add("structural: gamma family is not total over (s, x) pairs");
    return r;
  }
  for (int s = 0; s < nu; ++s)
    for (int x = 0; x < na; ++x) {
      const MorId g = p.at(s, x);
      const ObjId us = p.u.obj(s);
      if (g < 0 || g >= a.num_morphisms() || a.src(g) != m.tensor(us, x) || a.dst(g) != m.tensor(x, us)) {
        r.add("structural: gamma" + at_str({s, x}) + " is not a morphism u(s)⊗x → x⊗u(s)");
        return r;
      }
    }
  for (int s = 0; s < nu; ++s)
    for (int x = 0; x < na; ++x)
      if (!a.is_invertible(p.at(s, x))) r.add("gamma" + at_str({s, x}) + " is not invertible");
  for (int f = 0; f < u_src.num_morphisms(); ++f) {
    const ObjId s = u_src.src(f), t = u_src.dst(f);
    for (int x = 0; x < na; ++x) {
      const MorId lhs = m.compose(m.tensor_mor(m.id(x), p.u.mor(f)), p.at(s, x));
      const MorId rhs = m.compose(p.at(t, x), m.tensor_mor(p.u.mor(f), m.id(x)));
      if (lhs != rhs) r.add("gamma not natural in s at U-morphism " + std::to_string(f) + ", x = " + std::to_string(x));
    }
  }
  for (int s = 0; s < nu; ++s) {
    const ObjId us = p.u.obj(s);
    for (int g = 0; g < a.num_morphisms(); ++g) {
      const MorId lhs = m.compose(m.tensor_mor(g, m.id(us)), p.at(s, a.src(g)));
      const MorId rhs = m.compose(p.at(s, a.dst(g)), m.tensor_mor(m.id(us), g));
      if (lhs != rhs) r.add("gamma not natural in x at s = " + std::to_string(s) + ", A-morphism " + std::to_string(g));
    }
  }
  for (int s = 0; s < nu; ++s) {
    const ObjId us = p.u.obj(s);
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < na; ++y) {
        if (p.at(s, m.tensor(x, y)) != two_step_passage(m, us, x, y, p.at(s, x), p.at(s, y)))
          r.add("multiplicativity fails at (s, x, y) = " + at_str({s, x, y}));
      }
  }
  return r;
}

Report check_centre_piece_morphism(const NatTransf& sigma, const CentrePiece& p, const CentrePiece& q) {
  Report r;
  if (!(sigma.src == p.u) || !(sigma.dst == q.u) || p.A.get() != q.A.get()) {
    r.add("mismatched endpoints");
    return r;
  }
  r.merge(validate_nat_transf(sigma));
  if (!r.ok()) return r;
  const MonoidalStructure& m = *p.A;
  for (std::size_t s = 0; s < sigma.components.size(); ++s)
    for (int x = 0; x < m.num_objects(); ++x) {
      const MorId sig = sigma.components[s];
      const MorId lhs = m.compose(m.tensor_mor(m.id(x), sig), p.at(static_cast<int>(s), x));
      const MorId rhs = m.compose(q.at(static_cast<int>(s), x), m.tensor_mor(sig, m.id(x)));
      if (lhs != rhs) r.add("centre-piece morphism condition fails at (s, x) = " + at_str({static_cast<int>(s), x}));
    }
  return r;
}

CentrePiece as_centre_piece(const CentreObject& obj, const MonoidalPtr& a) {
  CentrePiece p;
  p.A = a;
  p.u = Functor{terminal_category(), a->base, {obj.a}, {a->id(obj.a)}};
  p.gamma = obj.half_braiding;
  return p;
}

// ---------------------------------------------------------------------------
// Half-braiding enumeration for a fixed object a. Components are chosen for x
// in increasing order; each assignment is checked against naturality squares
// and multiplicativity instances whose indices are all already assigned.

std::vector<CentreObject> enumerate_half_braidings(const MonoidalStructure& m, ObjId a, const Guards& guards) {
  const FinCategory& c = *m.base;
  const int n = c.num_objects();
  std::vector<std::vector<MorId>> candidates(n);
  for (int x = 0; x < n; ++x)
    for (MorId f : c.hom(m.tensor(a, x), m.tensor(x, a)))
      if (c.is_invertible(f)) candidates[x].push_back(f);
  std::vector<std::vector<MorId>> squares(n);
  for (int g = 0; g < c.num_morphisms(); ++g) squares[std::max(c.src(g), c.dst(g))].push_back(g);
  std::vector<std::vector<std::pair<ObjId, ObjId>>> products(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) products[std::max({x, y, m.tensor(x, y)})].push_back({x, y});

  std::vector<CentreObject> out;
  std::vector<MorId> gamma(n, kNone);
  std::size_t nodes = 0;
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(CentreObject{a, gamma});
      return;
    }
    for (MorId f : candidates[x]) {
      if (++nodes > guards.max_search_nodes)
        throw GuardExceeded("half-braiding search exceeded its budget; use the linear backend");
      gamma[x] = f;
      bool ok = true;
      for (MorId g : squares[x]) {
        if (m.compose(m.tensor_mor(g, m.id(a)), gamma[c.src(g)]) !=
            m.compose(gamma[c.dst(g)], m.tensor_mor(m.id(a), g))) {
          ok = false;
          break;
        }
      }
      for (std::size_t k = 0; ok && k < products[x].size(); ++k) {
        const auto [y, z] = products[x][k];
        ok = gamma[m.tensor(y, z)] == two_step_passage(m, a, y, z, gamma[y], gamma[z]);
      }
      if (ok) self(self, x + 1);
    }
    gamma[x] = kNone;
  };
  rec(rec, 0);
  return out;
}

struct CentreCategory::Index {
  std::unordered_map<std::vector<int>, ObjId, IntVectorHash> objects;
  std::unordered_map<std::vector<int>, MorId, IntVectorHash> morphisms;
};

std::optional<ObjId> CentreCategory::find(const CentreObject& obj) const {
  auto it = index->objects.find(centre_key(obj));
  if (it == index->objects.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> CentreCategory::find_morphism(ObjId x, ObjId y, MorId f) const {
  auto it = index->morphisms.find({x, y, f});
  if (it == index->morphisms.end()) return std::nullopt;
  return it->second;
}

CentreCategory compute_centre(const MonoidalPtr& ap, const Guards& guards, ExecPolicy policy) {
  const MonoidalStructure& m = *ap;
  const FinCategory& ac = *m.base;
  const int na = ac.num_objects();

  std::vector<std::vector<CentreObject>> per_object(na);
  for_each_index(policy, static_cast<std::size_t>(na),
                 [&](std::size_t a) { per_object[a] = enumerate_half_braidings(m, static_cast<ObjId>(a), guards); });

  CentreCategory z;
  z.A = ap;
  for (auto& v : per_object)
    for (auto& o : v) z.objects.push_back(std::move(o));
  std::sort(z.objects.begin(), z.objects.end());
  if (z.objects.size() > guards.max_objects)
    throw GuardExceeded("centre has more than " + std::to_string(guards.max_objects) +
                        " objects; use the linear backend (vec-centre)");

  auto index = std::make_shared<CentreCategory::Index>();
  const int nz = static_cast<int>(z.objects.size());
  for (int i = 0; i < nz; ++i) index->objects.emplace(centre_key(z.objects[i]), i);

  std::vector<MorphismData> mors;
  std::vector<MorId> ids(nz, kNone);
  for (int x = 0; x < nz; ++x) {
    const auto& gx = z.objects[x];
    for (int y = 0; y < nz; ++y) {
      const auto& gy = z.objects[y];
      for (MorId f : ac.hom(gx.a, gy.a)) {
        bool ok = true;
        for (int w = 0; w < na && ok; ++w)
          ok = m.compose(gy.half_braiding[w], m.tensor_mor(f, m.id(w))) ==
               m.compose(m.tensor_mor(m.id(w), f), gx.half_braiding[w]);
        if (!ok) continue;
        const MorId id = static_cast<MorId>(mors.size());
        if (mors.size() >= guards.max_morphisms)
          throw GuardExceeded("centre has more than " + std::to_string(guards.max_morphisms) + " morphisms");
        mors.push_back({x, y});
        z.underlying.push_back(f);
        index->morphisms.emplace(std::vector<int>{x, y, f}, id);
        if (x == y && f == ac.identity(gx.a)) ids[x] = id;
      }
    }
  }
  z.index = index;
  std::vector<FinCategory::ComposeTriple> comp;
  const int mz = static_cast<int>(mors.size());
  for (int g = 0; g < mz; ++g)
    for (int f = 0; f < mz; ++f) {
      if (mors[f].dst != mors[g].src) continue;
      const MorId gf = ac.compose(z.underlying[g], z.underlying[f]);
      comp.push_back({g, f, *z.find_morphism(mors[f].src, mors[g].dst, gf)});
    }
  CategoryPtr zc = make_category(FinCategory(nz, std::move(mors), std::move(ids), comp));

  auto lift = [&](ObjId x, ObjId y, MorId f) {
    auto id = z.find_morphism(x, y, f);
    if (!id) throw std::logic_error("centre structure map does not commute with half-braidings");
    return *id;
  };

  // tensor (a,γ)⊗(b,δ) = (a⊗b, θ), θ_x = α_{x,a,b}∘(γ_x⊗1_b)∘α⁻¹_{a,x,b}∘(1_a⊗δ_x)∘α_{a,b,x}
  auto zm = std::make_shared<MonoidalStructure>();
  zm->base = zc;
  zm->tensor_obj_table.resize(static_cast<std::size_t>(nz) * nz);
  for (int x = 0; x < nz; ++x)
    for (int y = 0; y < nz; ++y) {
      const auto& X = z.objects[x];
      const auto& Y = z.objects[y];
      CentreObject t{m.tensor(X.a, Y.a), {}};
      for (int w = 0; w < na; ++w)
        t.half_braiding.push_back(m.then({m.alpha(X.a, Y.a, w), m.tensor_mor(m.id(X.a), Y.half_braiding[w]),
                                          m.alpha_inv(X.a, w, Y.a), m.tensor_mor(X.half_braiding[w], m.id(Y.a)),
                                          m.alpha(w, X.a, Y.a)}));
      auto id = z.find(t);
      if (!id) throw std::logic_error("tensor of centre objects " + at_str({x, y}) + " is not a centre object");
      zm->tensor_obj_table[x * nz + y] = *id;
    }
  zm->tensor_mor_table.resize(static_cast<std::size_t>(mz) * mz);
  for (int f = 0; f < mz; ++f)
    for (int g = 0; g < mz; ++g)
      zm->tensor_mor_table[static_cast<std::size_t>(f) * mz + g] =
          lift(zm->tensor(zc->src(f), zc->src(g)), zm->tensor(zc->dst(f), zc->dst(g)),
               m.tensor_mor(z.underlying[f], z.underlying[g]));
  if (na > 0) {
    CentreObject unit{m.unit, {}};
    for (int w = 0; w < na; ++w) unit.half_braiding.push_back(m.compose(ac.inverse(m.rho(w)), m.lambda(w)));
    auto uid = z.find(unit);
    if (!uid) throw std::logic_error("unit with its unitor half-braiding is not a centre object");
    zm->unit = *uid;
  }
  zm->alpha_table.resize(static_cast<std::size_t>(nz) * nz * nz);
  for (int x = 0; x < nz; ++x)
    for (int y = 0; y < nz; ++y)
      for (int w = 0; w < nz; ++w)
        zm->alpha_table[(static_cast<std::size_t>(x) * nz + y) * nz + w] =
            lift(zm->tensor(zm->tensor(x, y), w), zm->tensor(x, zm->tensor(y, w)),
                 m.alpha(z.objects[x].a, z.objects[y].a, z.objects[w].a));
  for (int x = 0; x < nz; ++x) {
    zm->lambda_table.push_back(lift(zm->tensor(zm->unit, x), x, m.lambda(z.objects[x].a)));
    zm->rho_table.push_back(lift(zm->tensor(x, zm->unit), x, m.rho(z.objects[x].a)));
  }
  z.monoidal = zm;

  // braiding c_{(a,γ),(b,δ)} = γ_b
  for (int x = 0; x < nz; ++x)
    for (int y = 0; y < nz; ++y)
      z.braiding.components.push_back(
          lift(zm->tensor(x, y), zm->tensor(y, x), z.objects[x].half_braiding[z.objects[y].a]));

  Functor i{zc, m.base, {}, z.underlying};
  for (const auto& o : z.objects) i.obj_map.push_back(o.a);
  z.projection = strict_monoidal_functor(std::move(i), zm, ap);
  z.certificates = certify_centre(z);
  return z;
}

std::vector<Certificate> certify_centre(const CentreCategory& z) {
  std::vector<Certificate> certs;
  const MonoidalStructure& m = *z.A;
  const FinCategory& ac = *m.base;
  certs.push_back(make_certificate("centre is a category", validate_category(*z.category())));

  Report pieces;
  for (std::size_t k = 0; k < z.objects.size(); ++k)
    pieces.merge(check_centre_piece(as_centre_piece(z.objects[k], z.A)), "object " + std::to_string(k) + ": ");
  certs.push_back(make_certificate("every half-braiding satisfies the centre-piece axiom", pieces));

  certs.push_back(make_certificate("centre pentagon and triangle", check_pentagon_triangle(*z.monoidal)));
  certs.push_back(make_certificate("braiding natural, both hexagons", check_braiding(*z.monoidal, z.braiding)));
  certs.push_back(make_certificate("projection is strong monoidal", check_strong_monoidal(z.projection)));

  Report faithful;
  if (!check_equivalence(z.projection.functor).faithful) faithful.add("projection merges two morphisms");
  certs.push_back(make_certificate("projection is faithful", faithful));

  Report over_gamma;
  const int nz = static_cast<int>(z.objects.size());
  for (int x = 0; x < nz; ++x)
    for (int y = 0; y < nz; ++y)
      if (z.underlying[z.braiding.at(x, y, nz)] != z.objects[x].half_braiding[z.objects[y].a])
        over_gamma.add("braiding at " + at_str({x, y}) + " does not lie over the half-braiding");
  certs.push_back(make_certificate("braiding lies over the half-braiding pasting", over_gamma));

  Report unit_compat;
  for (int x = 0; x < nz; ++x) {
    const auto& o = z.objects[x];
    if (ac.num_objects() == 0) break;
    const MorId expected = m.compose(ac.inverse(m.rho(o.a)), m.lambda(o.a));
    if (o.half_braiding[m.unit] != expected)
      unit_compat.add("object " + std::to_string(x) + ": gamma at the unit differs from rho^-1 . lambda");
  }
  certs.push_back(make_certificate("unit compatibility (derived)", unit_compat));
  return certs;
}

Functor factor_through_centre(const CentrePiece& p, const CentreCategory& z) {
  if (Report r = check_centre_piece(p); !r.ok())
    throw std::invalid_argument("not a centre piece: " + r.first());
  const int na = p.A->num_objects();
  Functor f{p.u.src, z.category(), {}, {}};
  for (int s = 0; s < p.u.src->num_objects(); ++s) {
    CentreObject o{p.u.obj(s), std::vector<MorId>(p.gamma.begin() + s * na, p.gamma.begin() + (s + 1) * na)};
    auto id = z.find(o);
    if (!id) throw std::logic_error("half-braiding of a centre piece is missing from the centre");
    f.obj_map.push_back(*id);
  }
  const FinCategory& u = *p.u.src;
  for (int k = 0; k < u.num_morphisms(); ++k) {
    auto id = z.find_morphism(f.obj(u.src(k)), f.obj(u.dst(k)), p.u.mor(k));
    if (!id) throw std::logic_error("centre piece morphism does not lift to the centre");
    f.mor_map.push_back(*id);
  }
  return f;
}

// ---------------------------------------------------------------------------
// CP(U, A): an enumeration independent of the half-braiding kernel above. For a
// fixed functor u, components γ_{s,x} are chosen s-major.

struct CentrePieceCategory::Index {
  std::unordered_map<std::vector<int>, ObjId, IntVectorHash> pieces;
  std::unordered_map<std::vector<int>, MorId, IntVectorHash> morphisms;
};

std::optional<ObjId> CentrePieceCategory::find(const CentrePiece& p) const {
  auto it = index->pieces.find(piece_key(p));
  if (it == index->pieces.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> CentrePieceCategory::find_morphism(ObjId p, ObjId q, const std::vector<MorId>& comps) const {
  std::vector<int> key{p, q};
  key.insert(key.end(), comps.begin(), comps.end());
  auto it = index->morphisms.find(key);
  if (it == index->morphisms.end()) return std::nullopt;
  return it->second;
}

namespace {

void enumerate_pieces_for(const Functor& u, const MonoidalPtr& ap, const Guards& guards,
                          std::vector<CentrePiece>& out) {
  const MonoidalStructure& m = *ap;
  const FinCategory& a = *m.base;
  const FinCategory& us = *u.src;
  const int nu = us.num_objects();
  const int na = a.num_objects();
  std::vector<std::vector<MorId>> x_squares(na);
  for (int g = 0; g < a.num_morphisms(); ++g) x_squares[std::max(a.src(g), a.dst(g))].push_back(g);
  std::vector<std::vector<MorId>> s_squares(nu);
  for (int f = 0; f < us.num_morphisms(); ++f) s_squares[std::max(us.src(f), us.dst(f))].push_back(f);
  std::vector<std::vector<std::pair<int, int>>> products(na);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) products[std::max({x, y, m.tensor(x, y)})].push_back({x, y});

  std::vector<MorId> gamma(static_cast<std::size_t>(nu) * na, kNone);
  auto g_at = [&](int s, int x) { return gamma[s * na + x]; };
  std::size_t nodes = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == nu * na) {
      if (out.size() >= guards.max_objects)
        throw GuardExceeded("more than " + std::to_string(guards.max_objects) + " centre pieces");
      out.push_back(CentrePiece{u, ap, gamma});
      return;
    }
    const int s = k / na, x = k % na;
    const ObjId uo = u.obj(s);
    for (MorId f : a.hom(m.tensor(uo, x), m.tensor(x, uo))) {
      if (!a.is_invertible(f)) continue;
      if (++nodes > guards.max_search_nodes) throw GuardExceeded("centre-piece search exceeded its budget");
      gamma[k] = f;
      bool ok = true;
      for (MorId g : x_squares[x]) {
        if (m.compose(m.tensor_mor(g, m.id(uo)), g_at(s, a.src(g))) !=
            m.compose(g_at(s, a.dst(g)), m.tensor_mor(m.id(uo), g))) {
          ok = false;
          break;
        }
      }
      for (std::size_t i = 0; ok && i < s_squares[s].size(); ++i) {
        const MorId h = s_squares[s][i];
        ok = m.compose(m.tensor_mor(m.id(x), u.mor(h)), g_at(us.src(h), x)) ==
             m.compose(g_at(us.dst(h), x), m.tensor_mor(u.mor(h), m.id(x)));
      }
      for (std::size_t i = 0; ok && i < products[x].size(); ++i) {
        const auto [y, w] = products[x][i];
        ok = g_at(s, m.tensor(y, w)) == two_step_passage(m, uo, y, w, g_at(s, y), g_at(s, w));
      }
      if (ok) self(self, k + 1);
    }
    gamma[k] = kNone;
  };
  rec(rec, 0);
}

}  // namespace

CentrePieceCategory centre_pieces(const CategoryPtr& U, const MonoidalPtr& ap, const Guards& guards) {
  CentrePieceCategory cp;
  auto index = std::make_shared<CentrePieceCategory::Index>();
  for (const auto& u : enumerate_functors(U, ap->base, static_cast<std::size_t>(-1), guards.max_search_nodes))
    enumerate_pieces_for(u, ap, guards, cp.pieces);
  const int n = static_cast<int>(cp.pieces.size());
  for (int i = 0; i < n; ++i) index->pieces.emplace(piece_key(cp.pieces[i]), i);

  std::vector<MorphismData> mors;
  std::vector<MorId> ids(n, kNone);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (auto& t : enumerate_nat_transfs(cp.pieces[p].u, cp.pieces[q].u)) {
        if (!check_centre_piece_morphism(t, cp.pieces[p], cp.pieces[q]).ok()) continue;
        if (mors.size() >= guards.max_morphisms) throw GuardExceeded("too many centre-piece morphisms");
        const MorId id = static_cast<MorId>(mors.size());
        std::vector<int> key{p, q};
        key.insert(key.end(), t.components.begin(), t.components.end());
        index->morphisms.emplace(std::move(key), id);
        if (p == q && t == identity_nat(cp.pieces[p].u)) ids[p] = id;
        mors.push_back({p, q});
        cp.morphisms.push_back(std::move(t));
      }
  cp.index = index;
  const FinCategory& a = *ap->base;
  std::vector<FinCategory::ComposeTriple> comp;
  const int mm = static_cast<int>(mors.size());
  for (int g = 0; g < mm; ++g)
    for (int f = 0; f < mm; ++f) {
      if (mors[f].dst != mors[g].src) continue;
      std::vector<MorId> c;
      for (std::size_t s = 0; s < cp.morphisms[f].components.size(); ++s)
        c.push_back(a.compose(cp.morphisms[g].components[s], cp.morphisms[f].components[s]));
      comp.push_back({g, f, *cp.find_morphism(mors[f].src, mors[g].dst, c)});
    }
  cp.category = make_category(FinCategory(n, std::move(mors), std::move(ids), comp));
  return cp;
}

BirepresentationVerdict check_birepresentation(const CategoryPtr& U, const MonoidalPtr& A, const Guards& guards) {
  BirepresentationVerdict out;
  CentreCategory z = compute_centre(A, guards);
  MaterializedFunctorCategory fun = functor_category(U, z.category(), guards);
  CentrePieceCategory cp = centre_pieces(U, A, guards);
  out.functor_objects = fun.objects.size();
  out.piece_objects = cp.pieces.size();

  const int na = A->num_objects();
  Functor cmp{fun.category, cp.category, {}, {}};
  for (const auto& h : fun.objects) {
    CentrePiece p{compose_functors(z.projection.functor, h), A, {}};
    for (int s = 0; s < U->num_objects(); ++s)
      for (int x = 0; x < na; ++x) p.gamma.push_back(z.objects[h.obj(s)].half_braiding[x]);
    auto id = cp.find(p);
    if (!id) {
      out.comparison_report.add("composite with the projection is not an enumerated centre piece");
      return out;
    }
    cmp.obj_map.push_back(*id);
  }
  for (int t = 0; t < static_cast<int>(fun.morphisms.size()); ++t) {
    const auto& tau = fun.morphisms[t];
    std::vector<MorId> comps;
    for (MorId c : tau.components) comps.push_back(z.underlying[c]);
    auto id = cp.find_morphism(cmp.obj(fun.category->src(t)), cmp.obj(fun.category->dst(t)), comps);
    if (!id) {
      out.comparison_report.add("image of a natural transformation is not a centre-piece morphism");
      return out;
    }
    cmp.mor_map.push_back(*id);
  }
  out.comparison_report.merge(validate_functor(cmp));
  out.verdict = check_equivalence(cmp);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// [E, p] : [E, U] → [E, A] with pointwise γ.
CentrePiece power_piece(const CentrePiece& p, const MaterializedFunctorCategory& source, const PowerMonoidal& power) {
  const auto& fa = power.functors;
  const MonoidalStructure& pm = *power.monoidal;
  const int ne = source.src->num_objects();
  CentrePiece out;
  out.A = power.monoidal;
  out.u = Functor{source.category, fa.category, {}, {}};
  for (const auto& h : source.objects) {
    auto id = fa.find_object(compose_functors(p.u, h));
    if (!id) throw std::logic_error("u∘H is not a functor");
    out.u.obj_map.push_back(*id);
  }
  for (const auto& sigma : source.morphisms) {
    auto id = fa.find_morphism(whisker_left(p.u, sigma));
    if (!id) throw std::logic_error("uσ is not natural");
    out.u.mor_map.push_back(*id);
  }
  for (std::size_t h = 0; h < source.objects.size(); ++h) {
    const Functor& hf = source.objects[h];
    const ObjId uh = out.u.obj(static_cast<int>(h));
    for (int x = 0; x < static_cast<int>(fa.objects.size()); ++x) {
      NatTransf t{fa.objects[pm.tensor(uh, x)], fa.objects[pm.tensor(x, uh)], {}};
      for (int e = 0; e < ne; ++e) t.components.push_back(p.at(hf.obj(e), fa.objects[x].obj(e)));
      auto id = fa.find_morphism(t);
      if (!id) throw std::logic_error("pointwise gamma is not natural in E");
      out.gamma.push_back(*id);
    }
  }
  return out;
}

CentrePiece projection_piece(const CentreCategory& z) {
  CentrePiece p{z.projection.functor, z.A, {}};
  for (const auto& o : z.objects) p.gamma.insert(p.gamma.end(), o.half_braiding.begin(), o.half_braiding.end());
  return p;
}

}  // namespace

TransportResult transport_along_power(const CategoryPtr& E, const CentrePiece& p, const Guards& guards) {
  TransportResult out;
  out.power = pointwise_monoidal(E, p.A, guards);
  MaterializedFunctorCategory source = functor_category(E, p.u.src, guards);
  out.transported = power_piece(p, source, out.power);
  out.transported_report = check_centre_piece(out.transported);

  out.centre_of_power = compute_centre(out.power.monoidal, guards);
  CentreCategory za = compute_centre(p.A, guards);
  out.power_of_centre = pointwise_monoidal(E, za.monoidal, guards);
  CentrePiece pi = power_piece(projection_piece(za), out.power_of_centre.functors, out.power);

  Functor cmp = factor_through_centre(pi, out.centre_of_power);
  out.comparison = strict_monoidal_functor(cmp, out.power_of_centre.monoidal, out.centre_of_power.monoidal);
  out.comparison_report.merge(check_strong_monoidal(out.comparison));
  if (!(compose_functors(out.centre_of_power.projection.functor, cmp) == pi.u))
    out.comparison_report.add("comparison does not commute with the projections");
  out.equivalence = check_equivalence(cmp);
  return out;
}

CoproductVerdict check_cp_preserves_coproducts(const CategoryPtr& U, const CategoryPtr& V, const MonoidalPtr& A,
                                               const Guards& guards) {
  CoproductVerdict out;
  CoproductCategory co = coproduct_category(U, V, guards);
  CentrePieceCategory whole = centre_pieces(co.category, A, guards);
  CentrePieceCategory left = centre_pieces(U, A, guards);
  CentrePieceCategory right = centre_pieces(V, A, guards);
  Guards wide = guards;
  wide.max_objects = std::max<std::size_t>(guards.max_objects, left.pieces.size() * right.pieces.size());
  wide.max_morphisms = std::max<std::size_t>(guards.max_morphisms, left.morphisms.size() * right.morphisms.size());
  ProductCategory prod = product_category(left.category, right.category, wide);
  out.source_objects = whole.pieces.size();
  out.target_objects = left.pieces.size() * right.pieces.size();

  const int na = A->num_objects();
  const int nu = U->num_objects();
  auto restrict_piece = [&](const CentrePiece& p, const Functor& inj, int offset, int count) {
    CentrePiece r{compose_functors(p.u, inj), A, {}};
    r.gamma.assign(p.gamma.begin() + offset * na, p.gamma.begin() + (offset + count) * na);
    return r;
  };
  Functor res{whole.category, prod.category, {}, {}};
  std::vector<std::pair<ObjId, ObjId>> images;
  for (const auto& p : whole.pieces) {
    auto l = left.find(restrict_piece(p, co.inj_left, 0, nu));
    auto r = right.find(restrict_piece(p, co.inj_right, nu, V->num_objects()));
    if (!l || !r) {
      out.comparison_report.add("restriction of a centre piece is not a centre piece");
      return out;
    }
    images.push_back({*l, *r});
    res.obj_map.push_back(prod.object(*l, *r));
  }
  for (int t = 0; t < static_cast<int>(whole.morphisms.size()); ++t) {
    const auto& comps = whole.morphisms[t].components;
    const auto [ls, rs] = images[whole.category->src(t)];
    const auto [ld, rd] = images[whole.category->dst(t)];
    auto l = left.find_morphism(ls, ld, std::vector<MorId>(comps.begin(), comps.begin() + nu));
    auto r = right.find_morphism(rs, rd, std::vector<MorId>(comps.begin() + nu, comps.end()));
    if (!l || !r) {
      out.comparison_report.add("restriction of a centre-piece morphism is not a morphism");
      return out;
    }
    res.mor_map.push_back(prod.morphism(*l, *r));
  }
  out.comparison_report.merge(validate_functor(res));
  out.verdict = check_equivalence(res);
  return out;
}

}  // namespace moncentre
