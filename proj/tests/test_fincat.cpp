#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moncentre/fincat.hpp"
#include "moncentre/fixtures.hpp"

using namespace moncentre;

TEST_CASE("built-in categories satisfy the axioms") {
  for (const auto& c : {terminal_category(), empty_category(), discrete_category(3), walking_arrow(),
                        fixtures::z2_signed()->base, fixtures::poset_min()->base})
    CHECK(validate_category(*c).ok());
}

TEST_CASE("walking arrow squared has 4 objects and 9 morphisms") {
  const ProductCategory p = product_category(walking_arrow(), walking_arrow());
  CHECK(p.category->num_objects() == 4);
  CHECK(p.category->num_morphisms() == 9);
  CHECK(validate_category(*p.category).ok());
  CHECK(validate_functor(p.proj_left).ok());
  CHECK(validate_functor(p.proj_right).ok());
}

TEST_CASE("functor category [discrete 2, discrete 2] has 4 objects and 4 morphisms") {
  const auto fc = functor_category(discrete_category(2), discrete_category(2));
  CHECK(fc.objects.size() == 4);
  CHECK(fc.morphisms.size() == 4);
  CHECK(validate_category(*fc.category).ok());
}

TEST_CASE("two functors from the walking arrow to discrete 2") {
  CHECK(enumerate_functors(walking_arrow(), discrete_category(2), 100).size() == 2);
  // and three into the walking arrow itself
  CHECK(enumerate_functors(walking_arrow(), walking_arrow(), 100).size() == 3);
}

TEST_CASE("functor enumeration respects its cap") {
  CHECK_THROWS_AS(enumerate_functors(discrete_category(3), discrete_category(3), 5), GuardExceeded);
}

TEST_CASE("typing corruptions are always detected") {
  std::mt19937 rng(7);
  const std::vector<CategoryPtr> bases{walking_arrow(), fixtures::z2_signed()->base, fixtures::poset_min()->base,
                                       product_category(walking_arrow(), walking_arrow()).category};
  int trials = 0;
  for (const auto& base : bases) {
    const auto triples = base->compose_triples();
    for (int t = 0; t < 25; ++t) {
      const auto [g, f, gf] = triples[rng() % triples.size()];
      // a morphism with different endpoints than g∘f, or none at all
      MorId bad = kNone;
      for (MorId k = 0; k < base->num_morphisms(); ++k)
        if (base->src(k) != base->src(f) || base->dst(k) != base->dst(g)) bad = k;
      const FinCategory corrupted = base->with_compose_entry(g, f, bad);
      CHECK_FALSE(validate_category(corrupted).ok());
      ++trials;
    }
  }
  CHECK(trials == 100);
}

TEST_CASE("identity-law corruptions are detected") {
  const CategoryPtr c = fixtures::z2_signed()->base;
  // −1 on object 0 is morphism 1; make id∘(−1) = id
  const FinCategory bad = c->with_compose_entry(0, 1, 0);
  const Report r = validate_category(bad);
  CHECK_FALSE(r.ok());
}

TEST_CASE("curry and uncurry are inverse") {
  const CategoryPtr a = walking_arrow(), b = discrete_category(2), c = walking_arrow();
  const ProductCategory ab = product_category(a, b);
  const auto bc = functor_category(b, c);
  const auto hs = enumerate_functors(ab.category, c, 1000);
  CHECK(hs.size() == 9);  // (walking arrow × discrete 2) → walking arrow: 3 choices per component
  for (const Functor& h : hs) {
    const Functor k = curry(h, ab, bc);
    CHECK(validate_functor(k).ok());
    CHECK(uncurry(k, ab, bc) == h);
  }
}

TEST_CASE("evaluating a curried functor gives the original") {
  const CategoryPtr a = walking_arrow(), b = walking_arrow();
  const ProductCategory ab = product_category(a, b);
  const auto bc = functor_category(b, walking_arrow());
  const Evaluation ev = evaluation_functor(bc);
  CHECK(validate_functor(ev.functor).ok());
  for (const Functor& h : enumerate_functors(ab.category, walking_arrow(), 1000)) {
    const Functor k = curry(h, ab, bc);
    for (ObjId x = 0; x < a->num_objects(); ++x)
      for (ObjId y = 0; y < b->num_objects(); ++y)
        CHECK(ev.functor.obj(ev.domain.object(k.obj(x), y)) == h.obj(ab.object(x, y)));
    for (MorId f = 0; f < a->num_morphisms(); ++f)
      for (MorId g = 0; g < b->num_morphisms(); ++g)
        CHECK(ev.functor.mor(ev.domain.morphism(k.mor(f), g)) == h.mor(ab.morphism(f, g)));
  }
}

TEST_CASE("vertical composition is associative and unital") {
  const auto fc = functor_category(walking_arrow(), walking_arrow());
  for (const NatTransf& t : fc.morphisms) {
    CHECK(validate_nat_transf(t).ok());
    CHECK(vertical_compose(t, identity_nat(t.src)) == t);
    CHECK(vertical_compose(identity_nat(t.dst), t) == t);
  }
  for (const NatTransf& s : fc.morphisms)
    for (const NatTransf& t : fc.morphisms) {
      if (!(s.dst == t.src)) continue;
      for (const NatTransf& u : fc.morphisms)
        if (t.dst == u.src)
          CHECK(vertical_compose(u, vertical_compose(t, s)) == vertical_compose(vertical_compose(u, t), s));
    }
}

TEST_CASE("equivalence checks") {
  const CategoryPtr d2 = discrete_category(2);
  CHECK(check_equivalence(identity_functor(walking_arrow())).equivalence());
  CHECK(check_equivalence(Functor{d2, d2, {1, 0}, {1, 0}}).equivalence());
  const EquivalenceVerdict collapse = check_equivalence(Functor{d2, terminal_category(), {0, 0}, {0, 0}});
  CHECK_FALSE(collapse.equivalence());
  CHECK_FALSE(collapse.witness.empty());
  // the walking arrow is not equivalent to the terminal category
  CHECK_FALSE(check_equivalence(Functor{walking_arrow(), terminal_category(), {0, 0}, {0, 0, 0}}).full);
}

TEST_CASE("coproduct of categories") {
  const CoproductCategory c = coproduct_category(walking_arrow(), terminal_category());
  CHECK(c.category->num_objects() == 3);
  CHECK(c.category->num_morphisms() == 4);
  CHECK(validate_category(*c.category).ok());
  CHECK(validate_functor(c.inj_left).ok());
  CHECK(validate_functor(c.inj_right).ok());
}

TEST_CASE("product guard") {
  Guards g;
  g.max_objects = 3;
  CHECK_THROWS_AS(product_category(walking_arrow(), walking_arrow(), g), GuardExceeded);
}
