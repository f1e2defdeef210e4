#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moncentre/bilimits.hpp"
#include "moncentre/fixtures.hpp"
#include "moncentre/hochschild.hpp"

using namespace moncentre;

namespace {

/// Commuting squares v∘f = g∘u counted directly.
std::size_t count_squares(const FinCategory& c) {
  std::size_t n = 0;
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < c.num_morphisms(); ++g)
      for (MorId u : c.hom(c.src(f), c.src(g)))
        for (MorId v : c.hom(c.dst(f), c.dst(g)))
          if (c.compose(v, f) == c.compose(g, u)) ++n;
  return n;
}

}  // namespace

TEST_CASE("iso-inserter of the identity with itself") {
  const CategoryPtr a = fixtures::z2_signed()->base;
  const auto ins = iso_inserter(identity_functor(a), identity_functor(a));
  // objects (g, ±1); f : (g, β) → (g, β') needs f∘β = β'∘f, so β = β' since signs commute
  CHECK(ins.objects.size() == 4);
  CHECK(ins.category->num_morphisms() == 8);
  CHECK(validate_category(*ins.category).ok());
  CHECK(validate_functor(ins.projection).ok());
}

TEST_CASE("iso-inserter of non-isomorphic functors is empty") {
  const CategoryPtr d2 = discrete_category(2);
  const auto ins = iso_inserter(Functor{terminal_category(), d2, {0}, {0}}, Functor{terminal_category(), d2, {1}, {1}});
  CHECK(ins.objects.empty());
}

TEST_CASE("equifier") {
  const auto fc = functor_category(walking_arrow(), walking_arrow());
  for (const NatTransf& s : fc.morphisms) {
    CHECK(equifier(s, s).objects.size() == 2);
    for (const NatTransf& t : fc.morphisms)
      if (s.src == t.src && s.dst == t.dst) {
        const FullSubcategory e = equifier(s, t);
        for (ObjId x : e.objects) CHECK(s.components[x] == t.components[x]);
        CHECK(validate_category(*e.category).ok());
      }
  }
}

TEST_CASE("cotensor with the arrow category") {
  for (const auto& a : {walking_arrow(), fixtures::z2_signed()->base, product_category(walking_arrow(), walking_arrow()).category}) {
    const ArrowCategory ar = cotensor_with_arrow(a);
    CHECK(ar.category->num_objects() == a->num_morphisms());
    CHECK(static_cast<std::size_t>(ar.category->num_morphisms()) == count_squares(*a));
    CHECK(validate_category(*ar.category).ok());
    CHECK(validate_functor(ar.dom).ok());
    CHECK(validate_functor(ar.cod).ok());
  }
}

TEST_CASE("descent object equals the centre") {
  for (const auto& m : {fixtures::z2_discrete(), fixtures::z3_discrete(), fixtures::s3_discrete(),
                        fixtures::poset_min(), fixtures::z2_signed(), fixtures::z2_signed_twisted()}) {
    const DescentCentreVerdict v = verify_descent_equals_centre(m);
    CHECK(v.pipeline_agrees);
    CHECK(v.bijective_on_objects);
    CHECK(v.descent_objects == v.centre_objects);
    CHECK(v.equivalence());
  }
}

TEST_CASE("materialized diagram of discrete Z2") {
  const DiagramData d = materialize_hochschild(fixtures::z2_discrete());
  CHECK(d.x1->num_objects() == 4);   // Z2 → Z2 functors
  CHECK(d.x2->num_objects() == 16);  // Z2 × Z2 → Z2 functors
  CHECK(validate_diagram(d).ok());
  const auto direct = descent_direct(explicit_diagram(d));
  const auto piped = descent_pipeline(explicit_diagram(d));
  CHECK(direct.objects.size() == 2);
  const auto f = match_descent(piped, direct);
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(*f));
}

TEST_CASE("with identity coherences the cocycle condition is e1(φ) = e2(φ)∘e0(φ)") {
  const DiagramData d = materialize_hochschild(fixtures::z2_discrete());
  for (ObjId x = 0; x < d.x0->num_objects(); ++x) {
    CHECK(d.x2->is_identity(d.coh00.components[x]));
    CHECK(d.x2->is_identity(d.coh01.components[x]));
    CHECK(d.x2->is_identity(d.coh21.components[x]));
  }
  const auto direct = descent_direct(explicit_diagram(d));
  REQUIRE_FALSE(direct.objects.empty());
  for (const auto& [x, phi] : direct.objects)
    CHECK(d.x2->compose(d.e2.mor(phi), d.e0.mor(phi)) == d.e1.mor(phi));
}

TEST_CASE("descent data on T are functors T into the centre") {
  for (const auto& m : {fixtures::z2_discrete(), fixtures::poset_min()}) {
    const ExplicitDiagram d = explicit_diagram(materialize_hochschild(m));
    const CentreCategory z = compute_centre(m);
    for (const auto& t : {terminal_category(), discrete_category(2), walking_arrow()})
      CHECK(count_descent_data(d, t) == enumerate_functors(t, z.category(), 1000).size());
  }
}

TEST_CASE("a corrupted coherence cell is reported") {
  DiagramData d = materialize_hochschild(fixtures::z2_discrete());
  d.coh01.components[1] = d.x2->identity(0);
  CHECK_FALSE(validate_diagram(d).ok());
}

TEST_CASE("d0 curries the first argument: left translation on S3") {
  const Group g = symmetric_group_3();
  const HochschildDiagram h = build_hochschild(fixtures::s3_discrete());
  bool differs_from_right = false;
  for (int x = 0; x < g.order(); ++x) {
    const Functor l = h.diagram.d0.obj(x), r = h.diagram.d1.obj(x);
    for (int y = 0; y < g.order(); ++y) {
      CHECK(l.obj(y) == g.mul(x, y));
      CHECK(r.obj(y) == g.mul(y, x));
      differs_from_right = differs_from_right || l.obj(y) != r.obj(y);
    }
  }
  CHECK(differs_from_right);
}

TEST_CASE("hochschild guard") {
  Guards g;
  g.hochschild_max_objects = 2;
  CHECK_THROWS_AS(build_hochschild(fixtures::z3_discrete(), g), GuardExceeded);
  CHECK_NOTHROW(build_hochschild(fixtures::z2_discrete(), g));
}
