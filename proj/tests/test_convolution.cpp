#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moncentre/convolution.hpp"
#include "moncentre/fixtures.hpp"

using namespace moncentre;

namespace {

/// Functor on a discrete category: any sizes, identity actions.
SetFunctor discrete_functor(const CategoryPtr& base, const std::vector<int>& sizes) {
  SetFunctor f{base, sizes, {}};
  for (int a = 0; a < base->num_objects(); ++a) {
    std::vector<int> id(sizes[a]);
    for (int i = 0; i < sizes[a]; ++i) id[i] = i;
    f.action.push_back(id);
  }
  return f;
}

/// Sign lines act on each set by an involution given per object; −1 at g is morphism 2g+1.
SetFunctor signed_functor(const CategoryPtr& base, const std::vector<std::vector<int>>& involutions) {
  SetFunctor f{base, {}, {}};
  for (const auto& inv : involutions) f.sets.push_back(static_cast<int>(inv.size()));
  for (std::size_t g = 0; g < involutions.size(); ++g) {
    std::vector<int> id(involutions[g].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    f.action.push_back(id);
    f.action.push_back(involutions[g]);
  }
  return f;
}

SetMap random_map(const SetFunctor& f, const SetFunctor& g, std::mt19937& rng) {
  SetMap m;
  for (std::size_t a = 0; a < f.sets.size(); ++a) {
    std::vector<int> c;
    for (int x = 0; x < f.sets[a]; ++x) c.push_back(static_cast<int>(rng() % g.sets[a]));
    m.components.push_back(c);
  }
  return m;
}

void check_iso(const InducedMap& m, const SetFunctor& from, const SetFunctor& to) {
  CHECK(m.well_defined.ok());
  CHECK(validate_set_map(from, to, m.map).ok());
  CHECK(is_bijective(m.map, from, to));
}

std::vector<MonoidalPtr> bases() {
  return {fixtures::z2_discrete(), fixtures::s3_discrete(), fixtures::poset_min(), fixtures::z2_signed(),
          fixtures::z2_signed_twisted()};
}

}  // namespace

TEST_CASE("Yoneda: convolving representables gives the representable at the tensor") {
  for (const auto& m : bases())
    for (int b = 0; b < m->num_objects(); ++b)
      for (int c = 0; c < m->num_objects(); ++c) {
        const Convolution conv = day_convolve(representable(m->base, b), representable(m->base, c), *m);
        CHECK(validate_set_functor(conv.functor).ok());
        check_iso(yoneda_map(*m, b, c, conv), conv.functor, representable(m->base, m->tensor(b, c)));
      }
}

TEST_CASE("cardinality law over discrete groups") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const Group g = trial % 2 ? symmetric_group_3() : cyclic_group(3 + trial % 3);
    const MonoidalPtr m = discrete_group_monoidal(g);
    std::vector<int> fs, gs;
    for (int a = 0; a < g.order(); ++a) {
      fs.push_back(static_cast<int>(rng() % 4));
      gs.push_back(static_cast<int>(rng() % 4));
    }
    const Convolution conv = day_convolve(discrete_functor(m->base, fs), discrete_functor(m->base, gs), *m);
    for (int a = 0; a < g.order(); ++a) {
      int expected = 0;
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c)
          if (g.mul(b, c) == a) expected += fs[b] * gs[c];
      CHECK(conv.functor.sets[a] == expected);
    }
  }
}

TEST_CASE("orbits are identified over sign lines") {
  // F = G = the free orbit {0, 1} on object 0; (F⊗G)(0) = (2·2)/2 classes
  const MonoidalPtr m = fixtures::z2_signed();
  const SetFunctor f = signed_functor(m->base, {{1, 0}, {}});
  CHECK(validate_set_functor(f).ok());
  const Convolution conv = day_convolve(f, f, *m);
  CHECK(conv.functor.sets[0] == 2);
  CHECK(conv.functor.sets[1] == 0);
}

TEST_CASE("unit laws") {
  std::mt19937 rng(5);
  for (const auto& m : bases()) {
    const SetFunctor j = convolution_unit(*m);
    for (int b = 0; b < m->num_objects(); ++b) {
      const SetFunctor f = representable(m->base, b);
      const Convolution jf = day_convolve(j, f, *m), fj = day_convolve(f, j, *m);
      check_iso(convolution_left_unitor(*m, f, jf), jf.functor, f);
      check_iso(convolution_right_unitor(*m, f, fj), fj.functor, f);
    }
  }
}

TEST_CASE("associator is a natural bijection") {
  for (const auto& m : bases()) {
    const int n = m->num_objects();
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const SetFunctor f = representable(m->base, b), g = representable(m->base, c), h = representable(m->base, (b + c) % n);
        const Convolution fg = day_convolve(f, g, *m), gh = day_convolve(g, h, *m);
        const Convolution fg_h = day_convolve(fg.functor, h, *m), f_gh = day_convolve(f, gh.functor, *m);
        check_iso(convolution_associator(*m, fg, fg_h, gh, f_gh), fg_h.functor, f_gh.functor);
      }
  }
}

TEST_CASE("symmetric braiding squares to the identity") {
  std::mt19937 rng(9);
  for (const auto& m : {fixtures::z2_discrete(), fixtures::z3_discrete(), fixtures::poset_min(), fixtures::z2_signed()}) {
    const Braiding br = identity_braiding(*m);
    for (int trial = 0; trial < 3; ++trial) {
      const SetFunctor f = representable(m->base, static_cast<int>(rng() % m->num_objects()));
      const SetFunctor g = representable(m->base, static_cast<int>(rng() % m->num_objects()));
      const Convolution fg = day_convolve(f, g, *m), gf = day_convolve(g, f, *m);
      const InducedMap there = convolution_braiding(*m, br, fg, gf);
      const InducedMap back = convolution_braiding(*m, br, gf, fg);
      check_iso(there, fg.functor, gf.functor);
      check_iso(back, gf.functor, fg.functor);
      CHECK(compose_set_maps(back.map, there.map).components == identity_set_map(fg.functor).components);
    }
  }
}

TEST_CASE("convolution is functorial in both arguments") {
  std::mt19937 rng(13);
  const MonoidalPtr m = fixtures::z3_discrete();
  for (int trial = 0; trial < 5; ++trial) {
    auto sizes = [&] {
      std::vector<int> s;
      for (int a = 0; a < 3; ++a) s.push_back(1 + static_cast<int>(rng() % 3));
      return s;
    };
    const SetFunctor f = discrete_functor(m->base, sizes()), f2 = discrete_functor(m->base, sizes()),
                     f3 = discrete_functor(m->base, sizes());
    const SetFunctor g = discrete_functor(m->base, sizes()), g2 = discrete_functor(m->base, sizes()),
                     g3 = discrete_functor(m->base, sizes());
    const SetMap p = random_map(f, f2, rng), p2 = random_map(f2, f3, rng);
    const SetMap q = random_map(g, g2, rng), q2 = random_map(g2, g3, rng);
    const Convolution c1 = day_convolve(f, g, *m), c2 = day_convolve(f2, g2, *m), c3 = day_convolve(f3, g3, *m);
    const InducedMap id = convolve_maps(identity_set_map(f), identity_set_map(g), c1, c1);
    CHECK(id.map.components == identity_set_map(c1.functor).components);
    const InducedMap a = convolve_maps(p, q, c1, c2), b = convolve_maps(p2, q2, c2, c3);
    const InducedMap ab = convolve_maps(compose_set_maps(p2, p), compose_set_maps(q2, q), c1, c3);
    CHECK(a.well_defined.ok());
    CHECK(ab.well_defined.ok());
    CHECK(compose_set_maps(b.map, a.map).components == ab.map.components);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  const MonoidalPtr m = fixtures::s3_discrete();
  const SetFunctor f = discrete_functor(m->base, {1, 2, 0, 1, 3, 1});
  const SetFunctor g = discrete_functor(m->base, {2, 1, 1, 0, 1, 2});
  const Convolution a = day_convolve(f, g, *m, ExecPolicy::serial);
  const Convolution b = day_convolve(f, g, *m, ExecPolicy::parallel);
  CHECK(a.functor == b.functor);
  CHECK(a.class_of == b.class_of);
}

TEST_CASE("malformed set functors are rejected") {
  const MonoidalPtr m = fixtures::z2_signed();
  SetFunctor f = signed_functor(m->base, {{1, 0}, {0}});
  CHECK(validate_set_functor(f).ok());
  f.action[1] = {0, 0};  // −1 no longer an involution, so (−1)∘(−1) ≠ id
  CHECK_FALSE(validate_set_functor(f).ok());
}
