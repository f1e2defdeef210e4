#include "moncentre/fincat.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "moncentre/hashing.hpp"

namespace moncentre {

FinCategory::FinCategory(int num_objects, std::vector<MorphismData> morphisms,
                         std::vector<MorId> identity, const std::vector<ComposeTriple>& compose)
    : num_objects_(num_objects), morphisms_(std::move(morphisms)), identity_(std::move(identity)) {
  if (num_objects_ < 0) throw std::invalid_argument("negative object count");
  if (static_cast<int>(identity_.size()) != num_objects_)
    throw std::invalid_argument("identity table size differs from object count");
  const int m = num_morphisms();
  for (int f = 0; f < m; ++f) {
    const auto& md = morphisms_[f];
    if (md.src < 0 || md.src >= num_objects_ || md.dst < 0 || md.dst >= num_objects_) {
      throw std::invalid_argument("morphism " + std::to_string(f) + " has an unknown endpoint");
    }
  }
  for (MorId id : identity_) {
    if (id != kNone && (id < 0 || id >= m))
      throw std::invalid_argument("identity references unknown morphism " + std::to_string(id));
  }
  build_indices();
  for (const auto& [g, f, gf] : compose) {
    if (g < 0 || g >= m || f < 0 || f >= m || gf < -1 || gf >= m)
      throw std::invalid_argument("compose entry references unknown morphism");
    if (!composable(g, f))
      throw std::invalid_argument("compose entry for non-composable pair (" + std::to_string(g) +
                                  ", " + std::to_string(f) + ")");
    compose_[g][into_pos_[f]] = gf;
  }
  compute_inverses();
}

void FinCategory::build_indices() {
  const int m = num_morphisms();
  hom_.assign(static_cast<std::size_t>(num_objects_) * num_objects_, {});
  into_.assign(num_objects_, {});
  out_of_.assign(num_objects_, {});
  into_pos_.assign(m, 0);
  for (int f = 0; f < m; ++f) {
    hom_[src(f) * num_objects_ + dst(f)].push_back(f);
    into_pos_[f] = static_cast<int>(into_[dst(f)].size());
    into_[dst(f)].push_back(f);
    out_of_[src(f)].push_back(f);
  }
  compose_.assign(m, {});
  for (int g = 0; g < m; ++g) compose_[g].assign(into_[src(g)].size(), kNone);
}

void FinCategory::compute_inverses() {
  const int m = num_morphisms();
  inverse_.assign(m, kNone);
  for (int f = 0; f < m; ++f) {
    const ObjId a = src(f), b = dst(f);
    if (identity_[a] == kNone || identity_[b] == kNone) continue;
    for (MorId g : hom(b, a)) {
      if (compose(g, f) == identity_[a] && compose(f, g) == identity_[b]) {
        inverse_[f] = g;
        break;
      }
    }
  }
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (f < 0 || g < 0 || !composable(g, f)) return kNone;
  return compose_[g][into_pos_[f]];
}

std::vector<FinCategory::ComposeTriple> FinCategory::compose_triples() const {
  std::vector<ComposeTriple> out;
  for (int g = 0; g < num_morphisms(); ++g) {
    for (MorId f : into_[src(g)]) {
      const MorId gf = compose(g, f);
      if (gf != kNone) out.push_back({g, f, gf});
    }
  }
  return out;
}

FinCategory FinCategory::with_compose_entry(MorId g, MorId f, MorId gf) const {
  FinCategory copy = *this;
  if (!copy.composable(g, f)) throw std::invalid_argument("not a composable pair");
  copy.compose_[g][copy.into_pos_[f]] = gf;
  copy.compute_inverses();
  return copy;
}

bool FinCategory::operator==(const FinCategory& other) const {
  if (num_objects_ != other.num_objects_ || identity_ != other.identity_ ||
      morphisms_.size() != other.morphisms_.size())
    return false;
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    if (morphisms_[f].src != other.morphisms_[f].src || morphisms_[f].dst != other.morphisms_[f].dst)
      return false;
  }
  return compose_ == other.compose_;
}

CategoryPtr make_category(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

CategoryPtr terminal_category() { return discrete_category(1); }

CategoryPtr empty_category() { return discrete_category(0); }

CategoryPtr discrete_category(int n) {
  std::vector<MorphismData> mors;
  std::vector<MorId> ids;
  std::vector<FinCategory::ComposeTriple> comp;
  for (int a = 0; a < n; ++a) {
    mors.push_back({a, a});
    ids.push_back(a);
    comp.push_back({a, a, a});
  }
  return make_category(FinCategory(n, std::move(mors), std::move(ids), comp));
}

CategoryPtr walking_arrow() {
  std::vector<bool> leq = {true, true, false, true};
  return preorder_category(2, leq);
}

CategoryPtr preorder_category(int n, const std::vector<bool>& leq) {
  if (static_cast<int>(leq.size()) != n * n) throw std::invalid_argument("leq table size");
  std::vector<MorphismData> mors;
  std::vector<MorId> ids(n, kNone);
  std::vector<int> index(n * n, kNone);
  for (int a = 0; a < n; ++a) {
    if (!leq[a * n + a]) throw std::invalid_argument("preorder is not reflexive");
    index[a * n + a] = static_cast<int>(mors.size());
    ids[a] = index[a * n + a];
    mors.push_back({a, a});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b]) {
        index[a * n + b] = static_cast<int>(mors.size());
        mors.push_back({a, b});
      }
    }
  }
  std::vector<FinCategory::ComposeTriple> comp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (index[a * n + b] == kNone || index[b * n + c] == kNone) continue;
        if (index[a * n + c] == kNone) throw std::invalid_argument("preorder is not transitive");
        comp.push_back({index[b * n + c], index[a * n + b], index[a * n + c]});
      }
  return make_category(FinCategory(n, std::move(mors), std::move(ids), comp));
}

Report validate_category(const FinCategory& c) {
  Report r;
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  bool identities_ok = true;
  for (int a = 0; a < n; ++a) {
    const MorId id = c.identity(a);
    if (id == kNone || c.src(id) != a || c.dst(id) != a) {
      r.add("identity of object " + std::to_string(a) + " is missing or has wrong endpoints");
      identities_ok = false;
    }
  }
  bool total = true;
  for (int g = 0; g < m; ++g) {
    for (MorId f : c.into(c.src(g))) {
      const MorId gf = c.compose(g, f);
      if (gf == kNone) {
        r.add("missing composite (" + std::to_string(g) + ", " + std::to_string(f) + ")");
        total = false;
      } else if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) {
        r.add("composite (" + std::to_string(g) + ", " + std::to_string(f) +
              ") has wrong endpoints");
        total = false;
      }
    }
  }
  if (identities_ok) {
    for (int f = 0; f < m; ++f) {
      if (c.compose(c.identity(c.dst(f)), f) != f)
        r.add("left identity fails at morphism " + std::to_string(f));
      if (c.compose(f, c.identity(c.src(f))) != f)
        r.add("right identity fails at morphism " + std::to_string(f));
    }
  }
  if (total) {
    for (int h = 0; h < m; ++h)
      for (MorId g : c.into(c.src(h)))
        for (MorId f : c.into(c.src(g))) {
          if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f)) {
            r.add("associativity fails at (" + std::to_string(h) + ", " + std::to_string(g) + ", " +
                  std::to_string(f) + ")");
          }
        }
  }
  return r;
}

// ---------------------------------------------------------------------------

Report validate_functor(const Functor& fn) {
  Report r;
  const auto& a = *fn.src;
  const auto& b = *fn.dst;
  if (static_cast<int>(fn.obj_map.size()) != a.num_objects() ||
      static_cast<int>(fn.mor_map.size()) != a.num_morphisms()) {
    r.add("functor tables have the wrong size");
    return r;
  }
  for (int x = 0; x < a.num_objects(); ++x) {
    if (fn.obj(x) < 0 || fn.obj(x) >= b.num_objects()) {
      r.add("object " + std::to_string(x) + " maps outside the target");
      return r;
    }
  }
  for (int f = 0; f < a.num_morphisms(); ++f) {
    const MorId ff = fn.mor(f);
    if (ff < 0 || ff >= b.num_morphisms()) {
      r.add("morphism " + std::to_string(f) + " maps outside the target");
      return r;
    }
    if (b.src(ff) != fn.obj(a.src(f)) || b.dst(ff) != fn.obj(a.dst(f)))
      r.add("morphism " + std::to_string(f) + " does not preserve endpoints");
  }
  if (!r.ok()) return r;
  for (int x = 0; x < a.num_objects(); ++x) {
    if (fn.mor(a.identity(x)) != b.identity(fn.obj(x)))
      r.add("identity of object " + std::to_string(x) + " not preserved");
  }
  for (const auto& [g, f, gf] : a.compose_triples()) {
    if (fn.mor(gf) != b.compose(fn.mor(g), fn.mor(f)))
      r.add("composition not preserved at (" + std::to_string(g) + ", " + std::to_string(f) + ")");
  }
  return r;
}

Functor identity_functor(const CategoryPtr& c) {
  Functor f{c, c, {}, {}};
  for (int a = 0; a < c->num_objects(); ++a) f.obj_map.push_back(a);
  for (int m = 0; m < c->num_morphisms(); ++m) f.mor_map.push_back(m);
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor out{f.src, g.dst, {}, {}};
  out.obj_map.reserve(f.obj_map.size());
  for (ObjId a : f.obj_map) out.obj_map.push_back(g.obj(a));
  out.mor_map.reserve(f.mor_map.size());
  for (MorId m : f.mor_map) out.mor_map.push_back(g.mor(m));
  return out;
}

Report validate_nat_transf(const NatTransf& t) {
  Report r;
  const auto& a = *t.src.src;
  const auto& b = *t.src.dst;
  if (static_cast<int>(t.components.size()) != a.num_objects()) {
    r.add("component family has the wrong size");
    return r;
  }
  for (int x = 0; x < a.num_objects(); ++x) {
    const MorId c = t.components[x];
    if (c < 0 || c >= b.num_morphisms() || b.src(c) != t.src.obj(x) || b.dst(c) != t.dst.obj(x)) {
      r.add("component at object " + std::to_string(x) + " has wrong endpoints");
      return r;
    }
  }
  for (int f = 0; f < a.num_morphisms(); ++f) {
    const MorId lhs = b.compose(t.dst.mor(f), t.components[a.src(f)]);
    const MorId rhs = b.compose(t.components[a.dst(f)], t.src.mor(f));
    if (lhs != rhs) r.add("naturality fails at morphism " + std::to_string(f));
  }
  return r;
}

NatTransf identity_nat(const Functor& f) {
  NatTransf t{f, f, {}};
  t.components.reserve(f.obj_map.size());
  for (ObjId y : f.obj_map) t.components.push_back(f.dst->identity(y));
  return t;
}

NatTransf vertical_compose(const NatTransf& g, const NatTransf& f) {
  NatTransf t{f.src, g.dst, {}};
  const auto& b = *f.src.dst;
  t.components.reserve(f.components.size());
  for (std::size_t x = 0; x < f.components.size(); ++x)
    t.components.push_back(b.compose(g.components[x], f.components[x]));
  return t;
}

NatTransf whisker_left(const Functor& h, const NatTransf& t) {
  NatTransf out{compose_functors(h, t.src), compose_functors(h, t.dst), {}};
  for (MorId c : t.components) out.components.push_back(h.mor(c));
  return out;
}

bool FunctorCategory::is_invertible(const NatTransf& t) const {
  const auto& b = *t.src.dst;
  return std::all_of(t.components.begin(), t.components.end(),
                     [&](MorId c) { return b.is_invertible(c); });
}

NatTransf FunctorCategory::inverse(const NatTransf& t) const {
  NatTransf out{t.dst, t.src, {}};
  for (MorId c : t.components) out.components.push_back(t.src.dst->inverse(c));
  return out;
}

// ---------------------------------------------------------------------------
// Functor enumeration: objects are assigned in order; after object a, every
// non-identity morphism whose endpoints are both ≤ a (and one equals a) is
// assigned. Composition constraints are checked as soon as all three of g, f,
// g∘f carry values.

namespace {

struct FunctorSearch {
  const FinCategory& a;
  const FinCategory& b;
  std::size_t cap;
  std::size_t budget;
  std::size_t nodes = 0;

  std::vector<std::vector<MorId>> morphisms_at;      // per object step
  std::vector<int> stage;                             // step index at which each morphism is fixed
  std::vector<std::vector<FinCategory::ComposeTriple>> checks;  // per morphism (last assigned)
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
  std::vector<Functor> out;
  CategoryPtr src, dst;

  FunctorSearch(const CategoryPtr& s, const CategoryPtr& d, std::size_t c, std::size_t bud)
      : a(*s), b(*d), cap(c), budget(bud), src(s), dst(d) {
    const int n = a.num_objects();
    const int m = a.num_morphisms();
    morphisms_at.assign(n, {});
    // order key: (stage, id); identities belong to their object's stage and come first
    std::vector<long long> order_key(m);
    for (int f = 0; f < m; ++f) {
      const int st = std::max(a.src(f), a.dst(f));
      order_key[f] = static_cast<long long>(st) * (m + 1) + (a.is_identity(f) ? 0 : f + 1);
      if (!a.is_identity(f)) morphisms_at[st].push_back(f);
    }
    checks.assign(m, {});
    for (const auto& t : a.compose_triples()) {
      MorId last = t[0];
      for (MorId x : t)
        if (order_key[x] > order_key[last]) last = x;
      checks[last].push_back(t);
    }
    obj_map.assign(n, kNone);
    mor_map.assign(m, kNone);
  }

  bool consistent(MorId f) const {
    for (const auto& [g, h, gh] : checks[f]) {
      if (b.compose(mor_map[g], mor_map[h]) != mor_map[gh]) return false;
    }
    return true;
  }

  void tick() {
    if (++nodes > budget) throw GuardExceeded("functor enumeration exceeded the search budget");
  }

  void assign_object(int x) {
    if (x == a.num_objects()) {
      if (out.size() >= cap)
        throw GuardExceeded("functor enumeration exceeded " + std::to_string(cap) + " functors");
      out.push_back(Functor{src, dst, obj_map, mor_map});
      return;
    }
    for (int y = 0; y < b.num_objects(); ++y) {
      tick();
      obj_map[x] = y;
      const MorId id = a.identity(x);
      mor_map[id] = b.identity(y);
      if (!consistent(id)) continue;
      assign_morphism(x, 0);
    }
    obj_map[x] = kNone;
    mor_map[a.identity(x)] = kNone;
  }

  void assign_morphism(int x, std::size_t k) {
    if (k == morphisms_at[x].size()) {
      assign_object(x + 1);
      return;
    }
    const MorId f = morphisms_at[x][k];
    for (MorId ff : b.hom(obj_map[a.src(f)], obj_map[a.dst(f)])) {
      tick();
      mor_map[f] = ff;
      if (consistent(f)) assign_morphism(x, k + 1);
    }
    mor_map[f] = kNone;
  }
};

}  // namespace

std::vector<Functor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& b,
                                        std::size_t cap, std::size_t node_budget) {
  FunctorSearch search(a, b, cap, node_budget);
  search.assign_object(0);
  return std::move(search.out);
}

std::vector<NatTransf> enumerate_nat_transfs(const Functor& f, const Functor& g) {
  const auto& a = *f.src;
  const auto& b = *f.dst;
  const int n = a.num_objects();
  // naturality squares to check once both endpoints carry components
  std::vector<std::vector<MorId>> squares(n);
  for (int m = 0; m < a.num_morphisms(); ++m)
    squares[std::max(a.src(m), a.dst(m))].push_back(m);

  std::vector<NatTransf> out;
  std::vector<MorId> comp(n, kNone);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(NatTransf{f, g, comp});
      return;
    }
    for (MorId c : b.hom(f.obj(x), g.obj(x))) {
      comp[x] = c;
      bool ok = true;
      for (MorId m : squares[x]) {
        if (b.compose(g.mor(m), comp[a.src(m)]) != b.compose(comp[a.dst(m)], f.mor(m))) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, x + 1);
    }
    comp[x] = kNone;
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------

Functor ProductCategory::pair(const Functor& f, const Functor& g) const {
  Functor out{f.src, category, {}, {}};
  for (std::size_t x = 0; x < f.obj_map.size(); ++x) out.obj_map.push_back(object(f.obj(x), g.obj(x)));
  for (std::size_t m = 0; m < f.mor_map.size(); ++m)
    out.mor_map.push_back(morphism(f.mor(m), g.mor(m)));
  return out;
}

ProductCategory product_category(const CategoryPtr& a, const CategoryPtr& b, const Guards& guards) {
  const std::size_t n = static_cast<std::size_t>(a->num_objects()) * b->num_objects();
  const std::size_t m = static_cast<std::size_t>(a->num_morphisms()) * b->num_morphisms();
  if (n > guards.max_objects || m > guards.max_morphisms)
    throw GuardExceeded("product category would have " + std::to_string(n) + " objects and " +
                        std::to_string(m) + " morphisms");
  const int nb = b->num_objects();
  const int mb = b->num_morphisms();
  std::vector<MorphismData> mors(m);
  for (int f = 0; f < a->num_morphisms(); ++f)
    for (int g = 0; g < mb; ++g)
      mors[f * mb + g] = {a->src(f) * nb + b->src(g), a->dst(f) * nb + b->dst(g)};
  std::vector<MorId> ids(n);
  for (int x = 0; x < a->num_objects(); ++x)
    for (int y = 0; y < nb; ++y) ids[x * nb + y] = a->identity(x) * mb + b->identity(y);
  std::vector<FinCategory::ComposeTriple> comp;
  const auto ta = a->compose_triples();
  const auto tb = b->compose_triples();
  comp.reserve(ta.size() * tb.size());
  for (const auto& [g1, f1, gf1] : ta)
    for (const auto& [g2, f2, gf2] : tb) comp.push_back({g1 * mb + g2, f1 * mb + f2, gf1 * mb + gf2});

  ProductCategory p;
  p.left = a;
  p.right = b;
  p.category = make_category(FinCategory(static_cast<int>(n), std::move(mors), std::move(ids), comp));
  p.proj_left = Functor{p.category, a, {}, {}};
  p.proj_right = Functor{p.category, b, {}, {}};
  for (std::size_t x = 0; x < n; ++x) {
    p.proj_left.obj_map.push_back(static_cast<int>(x) / nb);
    p.proj_right.obj_map.push_back(static_cast<int>(x) % nb);
  }
  for (std::size_t f = 0; f < m; ++f) {
    p.proj_left.mor_map.push_back(static_cast<int>(f) / mb);
    p.proj_right.mor_map.push_back(static_cast<int>(f) % mb);
  }
  return p;
}

CoproductCategory coproduct_category(const CategoryPtr& a, const CategoryPtr& b,
                                     const Guards& guards) {
  const int na = a->num_objects(), ma = a->num_morphisms();
  const std::size_t n = static_cast<std::size_t>(na) + b->num_objects();
  const std::size_t m = static_cast<std::size_t>(ma) + b->num_morphisms();
  if (n > guards.max_objects || m > guards.max_morphisms)
    throw GuardExceeded("coproduct category too large");
  std::vector<MorphismData> mors;
  for (const auto& md : a->morphisms()) mors.push_back(md);
  for (const auto& md : b->morphisms()) mors.push_back({md.src + na, md.dst + na});
  std::vector<MorId> ids = a->identities();
  for (MorId id : b->identities()) ids.push_back(id + ma);
  auto comp = a->compose_triples();
  for (const auto& [g, f, gf] : b->compose_triples()) comp.push_back({g + ma, f + ma, gf + ma});
  CoproductCategory c;
  c.category = make_category(FinCategory(static_cast<int>(n), std::move(mors), std::move(ids), comp));
  c.inj_left = Functor{a, c.category, {}, {}};
  c.inj_right = Functor{b, c.category, {}, {}};
  for (int x = 0; x < na; ++x) c.inj_left.obj_map.push_back(x);
  for (int f = 0; f < ma; ++f) c.inj_left.mor_map.push_back(f);
  for (int x = 0; x < b->num_objects(); ++x) c.inj_right.obj_map.push_back(x + na);
  for (int f = 0; f < b->num_morphisms(); ++f) c.inj_right.mor_map.push_back(f + ma);
  return c;
}

// ---------------------------------------------------------------------------

struct MaterializedFunctorCategory::Index {
  std::unordered_map<std::vector<int>, ObjId, IntVectorHash> objects;
  std::unordered_map<std::vector<int>, MorId, IntVectorHash> morphisms;
};

namespace {

std::vector<int> functor_key(const Functor& f) {
  std::vector<int> key = f.obj_map;
  key.insert(key.end(), f.mor_map.begin(), f.mor_map.end());
  return key;
}

}  // namespace

std::optional<ObjId> MaterializedFunctorCategory::find_object(const Functor& f) const {
  auto it = index->objects.find(functor_key(f));
  if (it == index->objects.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> MaterializedFunctorCategory::find_morphism(const NatTransf& t) const {
  auto s = find_object(t.src);
  auto d = find_object(t.dst);
  if (!s || !d) return std::nullopt;
  std::vector<int> key{*s, *d};
  key.insert(key.end(), t.components.begin(), t.components.end());
  auto it = index->morphisms.find(key);
  if (it == index->morphisms.end()) return std::nullopt;
  return it->second;
}

MaterializedFunctorCategory functor_category(const CategoryPtr& a, const CategoryPtr& b,
                                             const Guards& guards) {
  MaterializedFunctorCategory fc;
  fc.src = a;
  fc.dst = b;
  fc.objects = enumerate_functors(a, b, guards.max_objects, guards.max_search_nodes);
  auto index = std::make_shared<MaterializedFunctorCategory::Index>();
  for (std::size_t i = 0; i < fc.objects.size(); ++i)
    index->objects.emplace(functor_key(fc.objects[i]), static_cast<ObjId>(i));

  const int n = static_cast<int>(fc.objects.size());
  std::vector<MorphismData> mors;
  std::vector<MorId> ids(n, kNone);
  for (int s = 0; s < n; ++s) {
    for (int d = 0; d < n; ++d) {
      for (auto& t : enumerate_nat_transfs(fc.objects[s], fc.objects[d])) {
        if (fc.morphisms.size() >= guards.max_morphisms)
          throw GuardExceeded("functor category exceeds " + std::to_string(guards.max_morphisms) +
                              " morphisms");
        const MorId id = static_cast<MorId>(fc.morphisms.size());
        std::vector<int> key{s, d};
        key.insert(key.end(), t.components.begin(), t.components.end());
        index->morphisms.emplace(std::move(key), id);
        if (s == d && t == identity_nat(fc.objects[s])) ids[s] = id;
        mors.push_back({s, d});
        fc.morphisms.push_back(std::move(t));
      }
    }
  }
  fc.index = index;
  std::vector<FinCategory::ComposeTriple> comp;
  for (int g = 0; g < static_cast<int>(fc.morphisms.size()); ++g) {
    for (int f = 0; f < static_cast<int>(fc.morphisms.size()); ++f) {
      if (mors[f].dst != mors[g].src) continue;
      const NatTransf gf = vertical_compose(fc.morphisms[g], fc.morphisms[f]);
      std::vector<int> key{mors[f].src, mors[g].dst};
      key.insert(key.end(), gf.components.begin(), gf.components.end());
      comp.push_back({g, f, index->morphisms.at(key)});
    }
  }
  fc.category = make_category(FinCategory(n, std::move(mors), std::move(ids), comp));
  return fc;
}

Evaluation evaluation_functor(const MaterializedFunctorCategory& fc) {
  Guards wide;
  wide.max_objects = wide.max_morphisms = static_cast<std::size_t>(-1);
  Evaluation ev{product_category(fc.category, fc.src, wide), {}};
  const auto& a = *fc.src;
  const auto& b = *fc.dst;
  ev.functor = Functor{ev.domain.category, fc.dst, {}, {}};
  for (const auto& f : fc.objects)
    for (int x = 0; x < a.num_objects(); ++x) ev.functor.obj_map.push_back(f.obj(x));
  for (const auto& sigma : fc.morphisms)
    for (int m = 0; m < a.num_morphisms(); ++m)
      ev.functor.mor_map.push_back(b.compose(sigma.dst.mor(m), sigma.components[a.src(m)]));
  return ev;
}

Functor curry(const Functor& h, const ProductCategory& ab, const MaterializedFunctorCategory& bc) {
  const auto& a = *ab.left;
  const auto& b = *ab.right;
  Functor out{ab.left, bc.category, {}, {}};
  auto slice = [&](ObjId x) {
    Functor s{ab.right, h.dst, {}, {}};
    for (int y = 0; y < b.num_objects(); ++y) s.obj_map.push_back(h.obj(ab.object(x, y)));
    for (int g = 0; g < b.num_morphisms(); ++g)
      s.mor_map.push_back(h.mor(ab.morphism(a.identity(x), g)));
    return s;
  };
  std::vector<Functor> slices;
  for (int x = 0; x < a.num_objects(); ++x) {
    slices.push_back(slice(x));
    auto id = bc.find_object(slices.back());
    if (!id) throw std::invalid_argument("curried slice is not a functor");
    out.obj_map.push_back(*id);
  }
  for (int f = 0; f < a.num_morphisms(); ++f) {
    NatTransf t{slices[a.src(f)], slices[a.dst(f)], {}};
    for (int y = 0; y < b.num_objects(); ++y)
      t.components.push_back(h.mor(ab.morphism(f, b.identity(y))));
    auto id = bc.find_morphism(t);
    if (!id) throw std::invalid_argument("curried morphism is not natural");
    out.mor_map.push_back(*id);
  }
  return out;
}

Functor uncurry(const Functor& k, const ProductCategory& ab, const MaterializedFunctorCategory& bc) {
  const auto& a = *ab.left;
  const auto& b = *ab.right;
  const auto& c = *bc.dst;
  Functor out{ab.category, bc.dst, {}, {}};
  for (int x = 0; x < a.num_objects(); ++x)
    for (int y = 0; y < b.num_objects(); ++y) out.obj_map.push_back(bc.objects[k.obj(x)].obj(y));
  for (int f = 0; f < a.num_morphisms(); ++f) {
    const NatTransf& kf = bc.morphisms[k.mor(f)];
    for (int g = 0; g < b.num_morphisms(); ++g) {
      const Functor& target = bc.objects[k.obj(a.dst(f))];
      out.mor_map.push_back(c.compose(target.mor(g), kf.components[b.src(g)]));
    }
  }
  return out;
}

EquivalenceVerdict check_equivalence(const Functor& fn) {
  EquivalenceVerdict v;
  const auto& a = *fn.src;
  const auto& b = *fn.dst;
  v.full = v.faithful = true;
  for (int x = 0; x < a.num_objects() && (v.full || v.faithful); ++x) {
    for (int y = 0; y < a.num_objects(); ++y) {
      std::vector<MorId> images;
      for (MorId f : a.hom(x, y)) images.push_back(fn.mor(f));
      std::vector<MorId> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      if (v.faithful && std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        v.faithful = false;
        if (v.witness.empty())
          v.witness = "not faithful: two morphisms " + std::to_string(x) + " -> " +
                      std::to_string(y) + " are merged";
      }
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      if (v.full && sorted.size() != b.hom(fn.obj(x), fn.obj(y)).size()) {
        v.full = false;
        if (v.witness.empty())
          v.witness = "not full: hom(" + std::to_string(x) + ", " + std::to_string(y) +
                      ") misses a morphism of the target";
      }
    }
  }
  v.essentially_surjective = true;
  for (int y = 0; y < b.num_objects(); ++y) {
    bool hit = false;
    for (int x = 0; x < a.num_objects() && !hit; ++x) {
      for (MorId f : b.hom(fn.obj(x), y)) {
        if (b.is_invertible(f)) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) {
      v.essentially_surjective = false;
      if (v.witness.empty())
        v.witness = "not essentially surjective: target object " + std::to_string(y) + " is missed";
      break;
    }
  }
  return v;
}

bool is_isomorphism(const Functor& f) {
  if (f.src->num_objects() != f.dst->num_objects() ||
      f.src->num_morphisms() != f.dst->num_morphisms())
    return false;
  std::vector<ObjId> o = f.obj_map;
  std::vector<MorId> m = f.mor_map;
  std::sort(o.begin(), o.end());
  std::sort(m.begin(), m.end());
  return std::adjacent_find(o.begin(), o.end()) == o.end() &&
         std::adjacent_find(m.begin(), m.end()) == m.end();
}

}  // namespace moncentre
