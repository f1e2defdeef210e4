#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "moncentre/centre.hpp"
#include "moncentre/fixtures.hpp"

using namespace moncentre;

namespace {

/// Elements commuting with everything, straight from the table.
std::vector<int> group_centre_oracle(const std::vector<std::vector<int>>& t) {
  std::vector<int> out;
  for (std::size_t g = 0; g < t.size(); ++g) {
    bool central = true;
    for (std::size_t x = 0; x < t.size(); ++x) central = central && t[g][x] == t[x][g];
    if (central) out.push_back(static_cast<int>(g));
  }
  return out;
}

/// Every choice of γ_x ∈ hom(a⊗x, x⊗a), filtered by the axiom checker.
std::size_t brute_force_half_braidings(const MonoidalPtr& m, ObjId a) {
  const FinCategory& c = *m->base;
  const int n = c.num_objects();
  std::vector<std::vector<MorId>> choices;
  for (int x = 0; x < n; ++x) choices.push_back(c.hom(m->tensor(a, x), m->tensor(x, a)));
  std::size_t count = 0;
  std::vector<std::size_t> pick(n, 0);
  for (const auto& ch : choices)
    if (ch.empty()) return 0;
  while (true) {
    CentreObject o{a, {}};
    for (int x = 0; x < n; ++x) o.half_braiding.push_back(choices[x][pick[x]]);
    if (check_centre_piece(as_centre_piece(o, m)).ok()) ++count;
    int k = 0;
    while (k < n && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return count;
}

/// The same group with elements renamed by perm.
std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& t, const std::vector<int>& perm) {
  std::vector<std::vector<int>> out(t.size(), std::vector<int>(t.size()));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) out[perm[a]][perm[b]] = perm[t[a][b]];
  return out;
}

}  // namespace

TEST_CASE("set-level centre of a discrete group is its group centre") {
  const std::vector<std::pair<Group, std::size_t>> cases{
      {cyclic_group(2), 2}, {cyclic_group(3), 3}, {cyclic_group(4), 4}, {symmetric_group_3(), 1}};
  for (const auto& [g, expected] : cases) {
    const CentreCategory z = compute_centre(discrete_group_monoidal(g));
    std::vector<int> objs;
    for (const auto& o : z.objects) objs.push_back(o.a);
    CHECK(objs == group_centre_oracle(g.table()));
    CHECK(objs.size() == expected);
    CHECK(all_pass(z.certificates));
  }
}

TEST_CASE("half-braiding search agrees with brute force") {
  for (const auto& m : {fixtures::z2_discrete(), fixtures::s3_discrete(), fixtures::poset_min(), fixtures::z2_signed(),
                        fixtures::z2_signed_twisted()})
    for (ObjId a = 0; a < m->num_objects(); ++a)
      CHECK(enumerate_half_braidings(*m, a).size() == brute_force_half_braidings(m, a));
}

TEST_CASE("with identity associators the axiom is γ_{x⊗y} = (1⊗γ_y)∘(γ_x⊗1)") {
  const auto m = fixtures::z2_signed();  // all signs +1, so α is the identity
  const FinCategory& c = *m->base;
  for (ObjId a = 0; a < 2; ++a)
    for (MorId g0 : c.hom(m->tensor(a, 0), m->tensor(0, a)))
      for (MorId g1 : c.hom(m->tensor(a, 1), m->tensor(1, a))) {
        const std::vector<MorId> gamma{g0, g1};
        bool strict = true;
        for (ObjId x = 0; x < 2; ++x)
          for (ObjId y = 0; y < 2; ++y) {
            const MorId rhs = c.compose(m->tensor_mor(m->id(x), gamma[y]), m->tensor_mor(gamma[x], m->id(y)));
            strict = strict && gamma[m->tensor(x, y)] == rhs;
          }
        CHECK(check_centre_piece(as_centre_piece(CentreObject{a, gamma}, m)).ok() == strict);
      }
}

TEST_CASE("centre sizes of the sign-line fixtures") {
  const CentreCategory plain = compute_centre(fixtures::z2_signed());
  CHECK(plain.objects.size() == 4);
  CHECK(plain.category()->num_morphisms() == 8);
  const CentreCategory twisted = compute_centre(fixtures::z2_signed_twisted());
  CHECK(twisted.objects.size() == 2);
  CHECK(twisted.category()->num_morphisms() == 4);
  CHECK(all_pass(plain.certificates));
  CHECK(all_pass(twisted.certificates));
}

TEST_CASE("every certificate passes on every fixture") {
  for (const auto& m : {fixtures::z2_discrete(), fixtures::z3_discrete(), fixtures::z4_discrete(),
                        fixtures::s3_discrete(), fixtures::poset_min(), fixtures::z2_signed(),
                        fixtures::z2_signed_twisted()}) {
    const CentreCategory z = compute_centre(m);
    for (const auto& c : z.certificates) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
    CHECK(check_braiding(*z.monoidal, z.braiding).ok());
    CHECK(check_strong_monoidal(z.projection).ok());
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (const auto& m : {fixtures::s3_discrete(), fixtures::z2_signed(), fixtures::poset_min()}) {
    const CentreCategory a = compute_centre(m, {}, ExecPolicy::serial);
    const CentreCategory b = compute_centre(m, {}, ExecPolicy::parallel);
    CHECK(a.objects == b.objects);
    CHECK(a.underlying == b.underlying);
    CHECK(a.braiding.components == b.braiding.components);
  }
}

TEST_CASE("relabelled copies have relabelled centres") {
  std::mt19937 rng(11);
  for (const Group& g : {cyclic_group(4), symmetric_group_3()}) {
    const auto t = g.table();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(t.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const CentreCategory z = compute_centre(discrete_group_monoidal(g));
      const CentreCategory z2 = compute_centre(discrete_group_monoidal(relabel(t, perm)));
      std::vector<int> mapped, got;
      for (const auto& o : z.objects) mapped.push_back(perm[o.a]);
      for (const auto& o : z2.objects) got.push_back(o.a);
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == got);
    }
  }
}

TEST_CASE("identity half-braiding on a non-central element is ill-typed") {
  const Report r = check_centre_piece(as_centre_piece(fixtures::s3_identity_half_braiding(), fixtures::s3_discrete()));
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().rfind("structural:", 0) == 0);
}

TEST_CASE("a corrupted γ component is located") {
  const Report r = check_centre_piece(as_centre_piece(fixtures::corrupted_half_braiding(), fixtures::z2_signed()));
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().find("(0, 0, 0)") != std::string::npos);
}

TEST_CASE("centre piece morphisms with mismatched endpoints are rejected") {
  const auto m = fixtures::z2_signed();
  const CentreCategory z = compute_centre(m);
  const CentrePiece p = as_centre_piece(z.objects[0], m);
  const CentrePiece q = as_centre_piece(z.objects[2], m);  // over a different object
  const NatTransf sigma{p.u, q.u, {0}};
  CHECK_FALSE(check_centre_piece_morphism(sigma, p, q).ok());
}

TEST_CASE("centre pieces factor through the centre") {
  const auto m = fixtures::z2_signed();
  const CentreCategory z = compute_centre(m);
  const CentrePieceCategory cp = centre_pieces(discrete_category(2), m);
  CHECK(cp.pieces.size() == 16);  // pairs of centre objects
  for (const CentrePiece& p : cp.pieces) {
    const Functor f = factor_through_centre(p, z);
    CHECK(validate_functor(f).ok());
    CHECK(compose_functors(z.projection.functor, f) == p.u);
  }
}

TEST_CASE("birepresentation on small shapes") {
  for (const auto& a : {fixtures::z2_discrete(), fixtures::poset_min()})
    for (const auto& u : {terminal_category(), discrete_category(2), walking_arrow()}) {
      const BirepresentationVerdict v = check_birepresentation(u, a);
      CHECK(v.equivalence());
      CHECK(v.functor_objects == v.piece_objects);
    }
}

TEST_CASE("centre pieces preserve coproducts") {
  for (const auto& a : {fixtures::z2_discrete(), fixtures::poset_min(), fixtures::z2_signed()})
    CHECK(check_cp_preserves_coproducts(terminal_category(), discrete_category(2), a).equivalence());
}

TEST_CASE("transport along a power") {
  const auto a = fixtures::z2_discrete();
  const CentreCategory z = compute_centre(a);
  for (const auto& e : {discrete_category(2), walking_arrow()}) {
    const TransportResult t = transport_along_power(e, as_centre_piece(z.objects[1], a));
    CHECK(t.transported_report.ok());
    CHECK(t.comparison_report.ok());
    CHECK(t.equivalence.equivalence());
  }
}

TEST_CASE("half-braiding enumeration honours the search budget") {
  Guards g;
  g.max_search_nodes = 1;
  CHECK_THROWS_AS(enumerate_half_braidings(*fixtures::z2_signed(), 0, g), GuardExceeded);
}
