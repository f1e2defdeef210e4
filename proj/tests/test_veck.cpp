#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "moncentre/fixtures.hpp"
#include "moncentre/veck.hpp"

using namespace moncentre;

namespace {

struct LineSolution {
  int grade;
  std::vector<CycNumber> b;  // scalar β_x on δ_grade
};

/// Abelian groups only: every b : G → μ_N with b(e) = 1 and
/// b(xy) = ω(x,g,y) / (ω(g,x,y) ω(x,y,g)) · b(x) b(y), tried exhaustively.
std::vector<LineSolution> brute_force_lines(const Cocycle3& w, int N) {
  const Group& G = w.group;
  const int n = G.order();
  std::vector<CycNumber> roots;
  for (int k = 0; k < N; ++k) roots.push_back(CycNumber::zeta(N, k));
  std::vector<LineSolution> out;
  for (int g = 0; g < n; ++g) {
    std::vector<int> pick(n, 0);
    while (true) {
      std::vector<CycNumber> b;
      for (int x = 0; x < n; ++x) b.push_back(roots[pick[x]]);
      bool ok = b[G.identity()].is_one();
      for (int x = 0; ok && x < n; ++x)
        for (int y = 0; ok && y < n; ++y) {
          const CycNumber s = w.at(x, g, y) / (w.at(g, x, y) * w.at(x, y, g));
          ok = b[G.mul(x, y)] == s * b[x] * b[y];
        }
      if (ok) out.push_back({g, b});
      int k = 0;
      while (k < n && ++pick[k] == N) pick[k++] = 0;
      if (k == n) break;
    }
  }
  return out;
}

void check_against_lines(const SimpleList& lib, const std::vector<LineSolution>& oracle) {
  REQUIRE(lib.simples.size() == oracle.size());
  for (const LineSolution& s : oracle) {
    int hits = 0;
    for (const SimpleObject& o : lib.simples) {
      if (o.object.carrier.grades != std::vector<int>{s.grade}) continue;
      bool same = true;
      for (std::size_t x = 0; x < s.b.size(); ++x) same = same && o.object.beta[x](0, 0) == s.b[x];
      hits += same;
    }
    CHECK(hits == 1);
  }
}

int count_classes(const std::vector<int>& h, const Group& G) {
  std::vector<bool> seen(G.order(), false);
  int classes = 0;
  for (int a : h) {
    if (seen[a]) continue;
    ++classes;
    for (int x : h) seen[G.conjugate(a, x)] = true;
  }
  return classes;
}

std::vector<int> sorted_totals(const SimpleList& l) {
  std::vector<int> t;
  for (const auto& s : l.simples) t.push_back(s.object.carrier.dim());
  std::sort(t.begin(), t.end());
  return t;
}

void expect_all_pass(const std::vector<Certificate>& certs) {
  for (const auto& c : certs) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
}

}  // namespace

TEST_CASE("cocycle fixtures") {
  CHECK(check_cocycle(trivial_cocycle(symmetric_group_3())).ok());
  CHECK(check_cocycle(z2_nontrivial_cocycle()).ok());
  CHECK(check_cocycle(fixtures::z4_twisted_by_coboundary()).ok());
  CHECK(cocycle_order(z2_nontrivial_cocycle()) == 2);
  CHECK(field_order(z2_nontrivial_cocycle()) == 4);
  const Report r = check_cocycle(fixtures::z3_noncocycle());
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().find("(1, 1, 1, 2)") != std::string::npos);
}

TEST_CASE("abelian centres match exhaustive search over roots of unity") {
  for (const Cocycle3& w : {trivial_cocycle(cyclic_group(2)), z2_nontrivial_cocycle(), trivial_cocycle(cyclic_group(3)),
                            fixtures::z4_twisted_by_coboundary()}) {
    const SimpleList l = centre_simples(w);
    CHECK(l.complete);
    CHECK(l.sum_rule);
    CHECK(l.certificate.ok());
    check_against_lines(l, brute_force_lines(w, field_order(w)));
  }
}

TEST_CASE("twisted Z2 gives semions: β_a = ±i on the grade a") {
  const SimpleList l = centre_simples(z2_nontrivial_cocycle());
  REQUIRE(l.simples.size() == 4);
  int semions = 0;
  for (const auto& s : l.simples)
    if (s.object.carrier.grades[0] == 1) {
      const CycNumber b = s.object.beta[1](0, 0);
      CHECK((b * b) == CycNumber::integer(4, -1));
      ++semions;
    }
  CHECK(semions == 2);
}

TEST_CASE("S3: one simple per class of each centralizer") {
  const Group G = symmetric_group_3();
  const SimpleList l = centre_simples(trivial_cocycle(G));
  int expected = 0;
  for (const auto& cls : G.conjugacy_classes()) expected += count_classes(G.centralizer(cls[0]), G);
  CHECK(expected == 8);
  CHECK(l.simples.size() == static_cast<std::size_t>(expected));
  CHECK(sorted_totals(l) == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3});
  int sq = 0;
  for (int d : sorted_totals(l)) sq += d * d;
  CHECK(sq == 36);
  CHECK(l.complete);
  CHECK(l.sum_rule);
  CHECK(l.certificate.ok());
  for (const auto& s : l.simples) CHECK(check_half_braiding(s.object, trivial_cocycle(G)).ok());
}

TEST_CASE("a coboundary twist is a gauge transformation") {
  const Cocycle3 plain = trivial_cocycle(cyclic_group(4));
  const Cocycle3 twisted = fixtures::z4_twisted_by_coboundary();
  const std::vector<CycNumber> mu = fixtures::z4_cochain();
  const SimpleList a = centre_simples(plain), b = centre_simples(twisted);
  CHECK(sorted_totals(a) == sorted_totals(b));
  const auto m = [&](int g, int h) { return mu[g * 4 + h]; };
  bool some_sign_works = false;
  for (int eps : {1, -1}) {
    bool bijective = true;
    for (const auto& s : a.simples) {
      const int g = s.object.carrier.grades[0];
      int hits = 0;
      for (const auto& t : b.simples) {
        if (t.object.carrier.grades[0] != g) continue;
        bool same = true;
        for (int x = 0; x < 4; ++x) {
          const CycNumber r = m(g, x) / m(x, g);
          same = same && t.object.beta[x](0, 0) == s.object.beta[x](0, 0) * (eps == 1 ? r : r.inverse());
        }
        hits += same;
      }
      bijective = bijective && hits == 1;
    }
    some_sign_works = some_sign_works || bijective;
  }
  CHECK(some_sign_works);
}

TEST_CASE("braided certificates") {
  for (const Cocycle3& w : {trivial_cocycle(cyclic_group(2)), z2_nontrivial_cocycle(), trivial_cocycle(cyclic_group(3)),
                            fixtures::z4_twisted_by_coboundary()})
    expect_all_pass(certify_linear_centre(centre_simples(w).simples, w, true));
  const Cocycle3 s3 = trivial_cocycle(symmetric_group_3());
  expect_all_pass(certify_linear_centre(centre_simples(s3).simples, s3, false));
}

TEST_CASE("tensor of half-braidings and the braiding") {
  const Cocycle3 w = z2_nontrivial_cocycle();
  const SimpleList l = centre_simples(w);
  for (const auto& v : l.simples)
    for (const auto& u : l.simples) {
      const HalfBraidingLin t = tensor(v.object, u.object, w);
      CHECK(check_half_braiding(t, w).ok());
      const CycMatrix c = braiding_matrix(v.object, u.object, field_order(w));
      CHECK(check_intertwiner(c, t, tensor(u.object, v.object, w)).ok());
    }
  CHECK(check_half_braiding(unit_object(w), w).ok());
}

TEST_CASE("the identity between distinct simples on the same grade is not an intertwiner") {
  const Cocycle3 w = trivial_cocycle(cyclic_group(2));
  const SimpleList l = centre_simples(w);
  std::vector<const SimpleObject*> unit_grade;
  for (const auto& s : l.simples)
    if (s.object.carrier.grades[0] == 0) unit_grade.push_back(&s);
  REQUIRE(unit_grade.size() == 2);
  const Report r = check_intertwiner(CycMatrix::identity(1, 2), unit_grade[0]->object, unit_grade[1]->object);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().find("(x, g) = (1, 0)") != std::string::npos);
  CHECK(intertwiners(unit_grade[0]->object, unit_grade[1]->object, 2).empty());
  CHECK(intertwiners(unit_grade[0]->object, unit_grade[0]->object, 2).size() == 1);
}

TEST_CASE("a carrier not closed under conjugation admits no half-braiding") {
  const HalfBraidingSpace s = half_braiding_space(GradedObject{{1}}, trivial_cocycle(symmetric_group_3()));
  CHECK_FALSE(s.feasible);
  CHECK_FALSE(s.witness.empty());
  const HalfBraidingSpace ok = half_braiding_space(GradedObject{{1}}, trivial_cocycle(cyclic_group(2)));
  CHECK(ok.feasible);
  CHECK(ok.enumerated);
  CHECK(ok.solutions.size() == 2);
}

TEST_CASE("a corrupted β is located") {
  const Cocycle3 w = z2_nontrivial_cocycle();
  SimpleList l = centre_simples(w);
  HalfBraidingLin v = l.simples.back().object;
  v.beta[1](0, 0) = -v.beta[1](0, 0) * CycNumber::zeta(4);
  const Report r = check_half_braiding(v, w);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first().find("multiplicativity fails at (x, y, g)") != std::string::npos);
}

TEST_CASE("linear and set-level backends agree on one-dimensional carriers") {
  for (const Group& g : {cyclic_group(2), cyclic_group(3), symmetric_group_3()}) {
    const CrossBackendVerdict v = verify_linear_against_bruteforce(g);
    CHECK_MESSAGE(v.match, v.witness);
    CHECK(v.set_level == g.centre());
  }
}

TEST_CASE("serial and parallel kernels agree") {
  const Cocycle3 w = trivial_cocycle(symmetric_group_3());
  const SimpleList a = centre_simples(w, 8, ExecPolicy::serial), b = centre_simples(w, 8, ExecPolicy::parallel);
  REQUIRE(a.simples.size() == b.simples.size());
  for (std::size_t i = 0; i < a.simples.size(); ++i) {
    CHECK(a.simples[i].dimensions == b.simples[i].dimensions);
    CHECK(a.simples[i].object.carrier.grades == b.simples[i].object.carrier.grades);
    CHECK(a.simples[i].object.beta == b.simples[i].object.beta);
  }
}

TEST_CASE("a small dimension bound leaves classes open") {
  const SimpleList l = centre_simples(trivial_cocycle(symmetric_group_3()), 2);
  CHECK_FALSE(l.complete);
  CHECK_FALSE(l.notes.empty());
  CHECK_FALSE(l.sum_rule);
  for (const auto& s : l.simples) CHECK(s.object.carrier.dim() <= 2);
}

TEST_CASE("guards and rejected input") {
  CHECK_THROWS_AS(centre_simples(trivial_cocycle(symmetric_group_3()), 8, ExecPolicy::parallel, 4), GuardExceeded);
  CHECK_THROWS_AS(centre_simples(fixtures::z3_noncocycle()), std::invalid_argument);
  Cocycle3 w = trivial_cocycle(cyclic_group(2));
  w.at(1, 1, 1) = CycNumber::integer(1, 2);
  CHECK_FALSE(check_cocycle(w).ok());
  CHECK_THROWS_AS(centre_simples(w), std::invalid_argument);
}

TEST_CASE("random coboundary twists keep the centre size") {
  const Group z3 = cyclic_group(3);
  for (int t = 0; t < 4; ++t) {
    std::vector<CycNumber> mu(9, CycNumber::integer(3, 1));
    for (int g = 1; g < 3; ++g)
      for (int h = 1; h < 3; ++h) mu[g * 3 + h] = CycNumber::zeta(3, (g * 5 + h * 7 + t) % 3);
    const Cocycle3 w = twist_by_coboundary(trivial_cocycle(z3), mu);
    CHECK(check_cocycle(w).ok());
    const SimpleList l = centre_simples(w);
    CHECK(l.simples.size() == 9);
    CHECK(l.sum_rule);
    check_against_lines(l, brute_force_lines(w, field_order(w)));
  }
}
