#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moncentre/fixtures.hpp"
#include "moncentre/hochschild.hpp"
#include "moncentre/io.hpp"

using namespace moncentre;

namespace {

const std::filesystem::path fixture_dir = FIXTURE_DIR;

std::string error_pointer(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.pointer;
  }
  return "<no error>";
}

std::vector<MonoidalPtr> monoidals() {
  return {fixtures::z2_discrete(), fixtures::s3_discrete(), fixtures::poset_min(), fixtures::z2_signed(),
          fixtures::z2_signed_twisted(), fixtures::broken_pentagon()};
}

}  // namespace

TEST_CASE("categories round-trip") {
  for (const auto& c : {terminal_category(), walking_arrow(), discrete_category(3),
                        product_category(walking_arrow(), walking_arrow()).category}) {
    const json j = category_to_json(*c);
    CHECK(category_to_json(*load_category(j)) == j);
    CHECK(load_category(json::parse(j.dump()))->num_morphisms() == c->num_morphisms());
  }
}

TEST_CASE("monoidal structures round-trip with and without braiding") {
  for (const auto& m : monoidals()) {
    const json plain = monoidal_to_json(*m);
    const LoadedMonoidal l = load_monoidal(plain);
    CHECK_FALSE(l.braiding.has_value());
    CHECK(monoidal_to_json(*l.monoidal) == plain);
    CHECK(check_pentagon_triangle(*l.monoidal).ok() == check_pentagon_triangle(*m).ok());
  }
  const auto m = fixtures::z2_signed();
  const Braiding b = identity_braiding(*m);
  const LoadedMonoidal l = load_monoidal(monoidal_to_json(*m, &b));
  REQUIRE(l.braiding.has_value());
  CHECK(l.braiding->components == b.components);
}

TEST_CASE("functors, half-braidings, diagrams and set functors round-trip") {
  const Functor f{walking_arrow(), terminal_category(), {0, 0}, {0, 0, 0}};
  CHECK(functor_to_json(load_functor(functor_to_json(f))) == functor_to_json(f));

  const auto m = fixtures::z2_signed();
  const json mj = monoidal_to_json(*m);
  const CentreObject o = fixtures::corrupted_half_braiding();
  const LoadedHalfBraiding h = load_half_braiding(half_braiding_to_json(o, mj));
  CHECK(h.object.a == o.a);
  CHECK(h.object.half_braiding == o.half_braiding);

  const DiagramData d = materialize_hochschild(fixtures::z2_discrete());
  const json dj = diagram_to_json(d);
  const DiagramData d2 = load_diagram(dj);
  CHECK(diagram_to_json(d2) == dj);
  CHECK(validate_diagram(d2).ok());

  const SetFunctor s = representable(m->base, 1);
  CHECK(set_functor_to_json(load_set_functor(set_functor_to_json(s), m->base)) == set_functor_to_json(s));
}

TEST_CASE("groups and cocycles round-trip") {
  for (const Cocycle3& w : {z2_nontrivial_cocycle(), fixtures::z4_twisted_by_coboundary(),
                            trivial_cocycle(symmetric_group_3())}) {
    const Group g = load_group(group_to_json(w.group));
    CHECK(g.table() == w.group.table());
    const Cocycle3 back = load_cocycle(cocycle_to_json(w), g);
    REQUIRE(back.omega.size() == w.omega.size());
    for (std::size_t i = 0; i < w.omega.size(); ++i) CHECK(back.omega[i] == w.omega[i]);
  }
  json w = cocycle_to_json(z2_nontrivial_cocycle());
  w["omega"][1][1][1] = "-1";
  CHECK(load_cocycle(w, cyclic_group(2)).at(1, 1, 1) == CycNumber::integer(1, -1));
}

TEST_CASE("the emitted centre carries a loadable braided monoidal structure") {
  for (const auto& m : {fixtures::z2_signed(), fixtures::poset_min(), fixtures::s3_discrete()}) {
    const CentreCategory z = compute_centre(m);
    const json j = centre_to_json(z);
    const LoadedMonoidal l = load_monoidal(j.at("monoidal"));
    REQUIRE(l.braiding.has_value());
    CHECK(l.monoidal->num_objects() == static_cast<int>(z.objects.size()));
    CHECK(check_pentagon_triangle(*l.monoidal).ok());
    CHECK(check_braiding(*l.monoidal, *l.braiding).ok());
  }
}

TEST_CASE("simples are emitted with dimensions") {
  const Cocycle3 w = z2_nontrivial_cocycle();
  const json j = simples_to_json(centre_simples(w), w);
  CHECK(j.at("simples").size() == 4);
  CHECK(j.at("field_order") == 4);
  CHECK(j.at("complete") == true);
  CHECK(j.at("sum_rule") == true);
}

TEST_CASE("malformed input is reported with a pointer") {
  CHECK(error_pointer([] { load_category(read_json_file(fixture_dir / "malformed_missing_identity.json")); }) ==
        "/identity/1");
  CHECK(error_pointer([] { load_category(read_json_file(fixture_dir / "malformed_unknown_morphism.json")); })
            .rfind("/compose/", 0) == 0);
  json c = category_to_json(*walking_arrow());
  c["morphisms"][2]["dst"] = "nowhere";
  CHECK(error_pointer([&] { load_category(c); }) == "/morphisms/2/dst");
  CHECK(error_pointer([] { load_group(json{{"schema_version", 1}, {"mult", {{0, 1}, {1, 1}}}}); }) == "/mult");
  json w = cocycle_to_json(z2_nontrivial_cocycle());
  w["omega"].erase(0);
  CHECK(error_pointer([&] { load_cocycle(w, cyclic_group(2)); }) == "/omega");
  json z = cocycle_to_json(z2_nontrivial_cocycle());
  z["omega"][0][1][1] = "1/0";
  CHECK(error_pointer([&] { load_cocycle(z, cyclic_group(2)); }) == "/omega/0/1/1");
  CHECK(error_pointer([] { read_json_file(fixture_dir / "does_not_exist.json"); }) != "<no error>");
}

TEST_CASE("fixture files load and agree with the in-code fixtures") {
  CHECK(monoidal_to_json(*load_monoidal(read_json_file(fixture_dir / "z2_signed.json")).monoidal) ==
        monoidal_to_json(*fixtures::z2_signed()));
  const LoadedHalfBraiding h =
      load_half_braiding(read_json_file(fixture_dir / "z2_signed_corrupted_gamma.json"), fixture_dir);
  CHECK_FALSE(check_centre_piece(as_centre_piece(h.object, h.monoidal.monoidal)).ok());
  const Functor f = load_functor(read_json_file(fixture_dir / "walking_arrow_to_terminal.json"), fixture_dir);
  CHECK(validate_functor(f).ok());
  const DiagramData d = load_diagram(read_json_file(fixture_dir / "z2_hochschild_diagram.json"), fixture_dir);
  CHECK(validate_diagram(d).ok());
}
