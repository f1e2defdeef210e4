// Writes the fixture corpus: make_fixtures <output-dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "moncentre/fixtures.hpp"
#include "moncentre/hochschild.hpp"
#include "moncentre/io.hpp"

using namespace moncentre;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;

void write(const std::string& name, const json& j) {
  std::ofstream out(out_dir / name);
  out << j.dump(1) << "\n";
}

json with_braiding(const MonoidalPtr& m) {
  const Braiding b = identity_braiding(*m);
  return monoidal_to_json(*m, &b);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  out_dir = argv[1];
  fs::create_directories(out_dir);

  write("z2_discrete.json", with_braiding(fixtures::z2_discrete()));
  write("z3_discrete.json", with_braiding(fixtures::z3_discrete()));
  write("z4_discrete.json", with_braiding(fixtures::z4_discrete()));
  write("s3_discrete.json", monoidal_to_json(*fixtures::s3_discrete()));
  write("poset_min.json", with_braiding(fixtures::poset_min()));
  write("z2_signed.json", monoidal_to_json(*fixtures::z2_signed()));
  write("z2_signed_twisted.json", monoidal_to_json(*fixtures::z2_signed_twisted()));
  write("broken_pentagon.json", monoidal_to_json(*fixtures::broken_pentagon()));

  write("terminal.json", category_to_json(*terminal_category()));
  write("discrete2.json", category_to_json(*discrete_category(2)));
  write("walking_arrow.json", category_to_json(*walking_arrow()));

  json missing_identity = category_to_json(*walking_arrow());
  missing_identity["identity"].erase("1");
  write("malformed_missing_identity.json", missing_identity);
  json unknown_morphism = category_to_json(*walking_arrow());
  unknown_morphism["compose"].push_back({2, 0, 7});
  write("malformed_unknown_morphism.json", unknown_morphism);

  write("z2.json", group_to_json(cyclic_group(2)));
  write("z3.json", group_to_json(cyclic_group(3)));
  write("z4.json", group_to_json(cyclic_group(4)));
  write("s3.json", group_to_json(symmetric_group_3()));
  write("z2_trivial.json", cocycle_to_json(trivial_cocycle(cyclic_group(2))));
  write("z2_nontrivial.json", cocycle_to_json(z2_nontrivial_cocycle()));
  json noncocycle = cocycle_to_json(fixtures::z3_noncocycle());
  noncocycle["group"] = "z3.json";
  write("z3_noncocycle.json", noncocycle);
  json z4_twisted = cocycle_to_json(fixtures::z4_twisted_by_coboundary());
  z4_twisted["group"] = "z4.json";
  write("z4_coboundary.json", z4_twisted);

  write("z2_signed_corrupted_gamma.json", half_braiding_to_json(fixtures::corrupted_half_braiding(), "z2_signed.json"));
  write("s3_identity_gamma.json", half_braiding_to_json(fixtures::s3_identity_half_braiding(), "s3_discrete.json"));

  write("z2_hochschild_diagram.json", diagram_to_json(materialize_hochschild(fixtures::z2_discrete())));

  const CategoryPtr z2 = fixtures::z2_discrete()->base;
  write("z2_setfunctor_a.json", set_functor_to_json(SetFunctor{z2, {2, 1}, {{0, 1}, {0}}}));
  write("z2_setfunctor_b.json", set_functor_to_json(SetFunctor{z2, {1, 3}, {{0}, {0, 1, 2}}}));
  const CategoryPtr poset = fixtures::poset_min()->base;
  write("poset_representable0.json", set_functor_to_json(representable(poset, 0)));

  const CategoryPtr d2 = discrete_category(2);
  write("discrete2_swap.json", functor_to_json(Functor{d2, d2, {1, 0}, {1, 0}}));
  json to_terminal = functor_to_json(Functor{walking_arrow(), terminal_category(), {0, 0}, {0, 0, 0}});
  to_terminal["src"] = "walking_arrow.json";
  to_terminal["dst"] = "terminal.json";
  write("walking_arrow_to_terminal.json", to_terminal);
  return 0;
}
