// Acceptance gate: one line per criterion, nonzero exit if any fails or runs over its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "moncentre/centre.hpp"
#include "moncentre/convolution.hpp"
#include "moncentre/fixtures.hpp"
#include "moncentre/hochschild.hpp"
#include "moncentre/veck.hpp"

using namespace moncentre;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) why << what;
    pass = pass && cond;
  }
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s < limit_s, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  std::printf("%s  %2d  %s  (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), s, o.pass ? "" : ": ",
              o.why.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

void require_certs(Outcome& o, const std::vector<Certificate>& certs, const std::string& where) {
  for (const auto& c : certs) o.require(c.pass, where + ": " + c.name + ": " + c.detail);
}

/// Abelian G: count b : G → μ_N with b(e) = 1 satisfying the twisted multiplicativity on δ_g, over all g.
int brute_force_lines(const Cocycle3& w) {
  const Group& G = w.group;
  const int n = G.order(), N = field_order(w);
  int count = 0;
  for (int g = 0; g < n; ++g) {
    std::vector<int> pick(n, 0);
    while (true) {
      bool ok = pick[G.identity()] == 0;
      for (int x = 0; ok && x < n; ++x)
        for (int y = 0; ok && y < n; ++y) {
          const CycNumber s = w.at(x, g, y) / (w.at(g, x, y) * w.at(x, y, g));
          ok = CycNumber::zeta(N, pick[G.mul(x, y)]) == s * CycNumber::zeta(N, pick[x] + pick[y]);
        }
      count += ok;
      int k = 0;
      while (k < n && ++pick[k] == N) pick[k++] = 0;
      if (k == n) break;
    }
  }
  return count;
}

/// Σ over conjugacy classes of the number of conjugacy classes of the centralizer, from the table.
int centralizer_class_count(const Group& G) {
  int total = 0;
  std::set<int> done;
  for (int r = 0; r < G.order(); ++r) {
    if (done.count(r)) continue;
    for (int x = 0; x < G.order(); ++x) done.insert(G.conjugate(r, x));
    std::vector<int> h;
    for (int x = 0; x < G.order(); ++x)
      if (G.mul(r, x) == G.mul(x, r)) h.push_back(x);
    std::set<int> seen;
    for (int a : h) {
      if (seen.count(a)) continue;
      ++total;
      for (int x : h) seen.insert(G.conjugate(a, x));
    }
  }
  return total;
}

std::vector<int> table_centre(const Group& G) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    bool c = true;
    for (int x = 0; x < G.order(); ++x) c = c && G.mul(g, x) == G.mul(x, g);
    if (c) out.push_back(g);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "centre is braided monoidal on every fixture; linear Z2 centres for both cocycles", 10, [](Outcome& o) {
    const std::vector<std::pair<std::string, MonoidalPtr>> fx{
        {"discrete Z2", fixtures::z2_discrete()}, {"discrete Z3", fixtures::z3_discrete()},
        {"discrete Z4", fixtures::z4_discrete()}, {"discrete S3", fixtures::s3_discrete()},
        {"monoidal poset", fixtures::poset_min()}};
    for (const auto& [name, m] : fx) {
      const CentreCategory z = compute_centre(m);
      require_certs(o, z.certificates, name);
      o.require(check_pentagon_triangle(*z.monoidal).ok(), name + ": pentagon/triangle");
      o.require(check_braiding(*z.monoidal, z.braiding).ok(), name + ": hexagons/naturality");
      o.require(check_strong_monoidal(z.projection).ok(), name + ": forgetful functor strong monoidal");
    }
    for (const Cocycle3& w : {trivial_cocycle(cyclic_group(2)), z2_nontrivial_cocycle()})
      require_certs(o, certify_linear_centre(centre_simples(w).simples, w, true), "Vec_Z2");
  });

  criterion(2, "[U, Z_A] ≃ CP(U, A) for U in {terminal, discrete 2, walking arrow}, A in {discrete Z2, poset}", 30,
            [](Outcome& o) {
              for (const auto& a : {fixtures::z2_discrete(), fixtures::poset_min()})
                for (const auto& u : {terminal_category(), discrete_category(2), walking_arrow()}) {
                  const BirepresentationVerdict v = check_birepresentation(u, a);
                  o.require(v.equivalence(), "not an equivalence: " + v.verdict.witness);
                }
            });

  criterion(3, "descent object of the Hochschild diagram ≃ centre for discrete Z2, discrete S3, poset", 300,
            [](Outcome& o) {
              for (const auto& m : {fixtures::z2_discrete(), fixtures::s3_discrete(), fixtures::poset_min()}) {
                const DescentCentreVerdict v = verify_descent_equals_centre(m);
                o.require(v.pipeline_agrees, "inserter/equifier pipeline disagrees with direct descent");
                o.require(v.equivalence(), "not an equivalence: " + v.comparison_report.first());
              }
            });

  criterion(4, "set-level centre of a discrete group is the group centre", 1, [](Outcome& o) {
    const std::vector<std::pair<Group, std::size_t>> cases{
        {cyclic_group(2), 2}, {cyclic_group(3), 3}, {cyclic_group(4), 4}, {symmetric_group_3(), 1}};
    for (const auto& [g, size] : cases) {
      std::vector<int> got;
      for (const auto& obj : compute_centre(discrete_group_monoidal(g)).objects) got.push_back(obj.a);
      o.require(got == table_centre(g) && got.size() == size, "wrong centre for a group of order " + std::to_string(g.order()));
    }
  });

  criterion(5, "[E, Z_A] → Z_[E, A] is a strong monoidal equivalence for E = discrete 2, A = discrete Z2", 10,
            [](Outcome& o) {
              const auto a = fixtures::z2_discrete();
              const CentreCategory z = compute_centre(a);
              for (const auto& obj : z.objects) {
                const TransportResult t = transport_along_power(discrete_category(2), as_centre_piece(obj, a));
                o.require(t.transported_report.ok(), "transported piece: " + t.transported_report.first());
                o.require(t.comparison_report.ok(), "comparison: " + t.comparison_report.first());
                o.require(check_strong_monoidal(t.comparison).ok(), "comparison is not strong monoidal");
                o.require(t.equivalence.equivalence(), "not an equivalence: " + t.equivalence.witness);
              }
            });

  criterion(6, "CP(U ⊔ V, A) ≃ CP(U, A) × CP(V, A) on the listed triples", 30, [](Outcome& o) {
    const std::vector<std::tuple<CategoryPtr, CategoryPtr, MonoidalPtr>> triples{
        {terminal_category(), terminal_category(), fixtures::z2_discrete()},
        {terminal_category(), empty_category(), fixtures::z2_discrete()},
        {discrete_category(2), discrete_category(2), fixtures::poset_min()}};
    for (const auto& [u, v, a] : triples) {
      const CoproductVerdict c = check_cp_preserves_coproducts(u, v, a);
      o.require(c.equivalence(), "not an equivalence: " + c.verdict.witness + c.comparison_report.first());
    }
    const CoproductVerdict tt =
        check_cp_preserves_coproducts(terminal_category(), terminal_category(), fixtures::z2_discrete());
    o.require(tt.source_objects == 4 && tt.target_objects == 4, "terminal ⊔ terminal over Z2 should give 4 = 4");
  });

  criterion(7, "Day convolution: Yoneda on discrete Z2 and poset, cardinality law on 10 random trials", 5,
            [](Outcome& o) {
              for (const auto& m : {fixtures::z2_discrete(), fixtures::poset_min()})
                for (int b = 0; b < m->num_objects(); ++b)
                  for (int c = 0; c < m->num_objects(); ++c) {
                    const Convolution conv =
                        day_convolve(representable(m->base, b), representable(m->base, c), *m);
                    const InducedMap y = yoneda_map(*m, b, c, conv);
                    o.require(y.well_defined.ok() &&
                                  is_bijective(y.map, conv.functor, representable(m->base, m->tensor(b, c))),
                              "Yoneda map is not a bijection");
                  }
              std::mt19937 rng(7);
              for (int trial = 0; trial < 10; ++trial) {
                const Group g = trial % 2 ? symmetric_group_3() : cyclic_group(2 + trial % 3);
                const MonoidalPtr m = discrete_group_monoidal(g);
                SetFunctor f{m->base, {}, {}}, h{m->base, {}, {}};
                for (int a = 0; a < g.order(); ++a) {
                  f.sets.push_back(static_cast<int>(rng() % 4));
                  h.sets.push_back(static_cast<int>(rng() % 4));
                  std::vector<int> idf(f.sets.back()), idh(h.sets.back());
                  for (std::size_t i = 0; i < idf.size(); ++i) idf[i] = static_cast<int>(i);
                  for (std::size_t i = 0; i < idh.size(); ++i) idh[i] = static_cast<int>(i);
                  f.action.push_back(idf);
                  h.action.push_back(idh);
                }
                const Convolution conv = day_convolve(f, h, *m);
                for (int a = 0; a < g.order(); ++a) {
                  int expected = 0;
                  for (int b = 0; b < g.order(); ++b)
                    for (int c = 0; c < g.order(); ++c)
                      if (g.mul(b, c) == a) expected += f.sets[b] * h.sets[c];
                  o.require(conv.functor.sets[a] == expected, "cardinality law fails");
                }
              }
            });

  criterion(8, "Z(Vec_Z2) has 4 simples for both cocycles; Z(Vec_S3) has 8 with Σ dim² = 36", 600, [](Outcome& o) {
    for (const Cocycle3& w : {trivial_cocycle(cyclic_group(2)), z2_nontrivial_cocycle()}) {
      const SimpleList l = centre_simples(w);
      o.require(l.simples.size() == 4 && static_cast<int>(l.simples.size()) == brute_force_lines(w),
                "Z2 simple count differs from exhaustive search");
      o.require(l.certificate.ok() && l.sum_rule, "Z2 certificate or sum rule");
    }
    const Group s3 = symmetric_group_3();
    const SimpleList l = centre_simples(trivial_cocycle(s3), 6);
    o.require(centralizer_class_count(s3) == 8, "centralizer class count");
    o.require(static_cast<int>(l.simples.size()) == centralizer_class_count(s3), "S3 simple count");
    int sq = 0;
    for (const auto& s : l.simples) sq += s.object.carrier.dim() * s.object.carrier.dim();
    o.require(sq == 36 && l.sum_rule && l.complete, "S3 sum rule");
    o.require(l.certificate.ok(), "S3 certificate: " + l.certificate.first());
  });

  criterion(9, "negative controls are rejected with a located witness", 1, [](Outcome& o) {
    const Report p = check_pentagon_triangle(*fixtures::broken_pentagon());
    o.require(!p.ok() && p.first().find("(1, 1, 1, 2)") != std::string::npos, "broken pentagon: " + p.first());
    const Report g = check_centre_piece(as_centre_piece(fixtures::corrupted_half_braiding(), fixtures::z2_signed()));
    o.require(!g.ok() && g.first().find("(0, 0, 0)") != std::string::npos, "corrupted γ: " + g.first());
    const Report w = check_cocycle(fixtures::z3_noncocycle());
    o.require(!w.ok() && w.first().find("(1, 1, 1, 2)") != std::string::npos, "non-cocycle ω: " + w.first());
  });

  criterion(10, "linear and set-level backends agree for Z2, Z3, S3", 30, [](Outcome& o) {
    for (const Group& g : {cyclic_group(2), cyclic_group(3), symmetric_group_3()}) {
      const CrossBackendVerdict v = verify_linear_against_bruteforce(g);
      o.require(v.match, v.witness);
    }
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
