// Command-line front end.
//
// Exit codes: 0 every certificate passed, 1 a certificate failed,
// 2 malformed input, 3 a size guard was exceeded.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "moncentre/centre.hpp"
#include "moncentre/convolution.hpp"
#include "moncentre/hochschild.hpp"
#include "moncentre/io.hpp"
#include "moncentre/parallel.hpp"
#include "moncentre/veck.hpp"

using namespace moncentre;
namespace fs = std::filesystem;

namespace {

struct Settings {
  std::string emit = "text";
  int threads = 0;
  bool serial = false;
  Guards guards;
  int dim_bound = 8;
  int max_group_order = 8;
};

struct Outcome {
  json result = json::object();
  std::vector<std::string> lines;
  std::vector<Certificate> certs;
};

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

/// Category axioms, then the monoidal axioms, then the braiding if present.
bool check_monoidal_input(const LoadedMonoidal& m, Outcome& out) {
  const Report cat = validate_category(*m.monoidal->base);
  out.certs.push_back(make_certificate("input: category axioms", cat));
  if (!cat.ok()) return false;
  const Report mon = check_pentagon_triangle(*m.monoidal);
  out.certs.push_back(make_certificate("input: tensor functorial, coherence natural, pentagon and triangle", mon));
  if (!mon.ok()) return false;
  if (m.braiding) {
    const Report br = check_braiding(*m.monoidal, *m.braiding);
    out.certs.push_back(make_certificate("input: braiding natural, both hexagons", br));
    if (!br.ok()) return false;
  }
  return true;
}

LoadedMonoidal load_monoidal_file(const std::string& path) { return load_monoidal(read_json_file(path)); }

Group group_for_cocycle(const json& j, const std::string& path, const std::string& group_path) {
  if (!group_path.empty()) return load_group(read_json_file(group_path));
  auto it = j.find("group");
  if (it == j.end() || !it->is_string())
    throw SchemaError("/group", "cocycle needs a group: pass --group or set \"group\" to a file path");
  return load_group(read_json_file(dir_of(path) / it->get<std::string>()));
}

// ---------------------------------------------------------------------------

Outcome run_validate(const std::string& path, const std::string& group_path, const std::string& base_path) {
  Outcome out;
  const json j = read_json_file(path);
  auto has = [&](const char* k) { return j.is_object() && j.contains(k); };
  if (has("half_braiding")) {
    out.result["kind"] = "half-braiding";
    LoadedHalfBraiding h = load_half_braiding(j, dir_of(path));
    if (!check_monoidal_input(h.monoidal, out)) return out;
    out.certs.push_back(make_certificate("half-braiding: invertible, natural, multiplicative",
                                         check_centre_piece(as_centre_piece(h.object, h.monoidal.monoidal))));
  } else if (has("omega")) {
    out.result["kind"] = "cocycle";
    const Cocycle3 w = load_cocycle(j, group_for_cocycle(j, path, group_path));
    out.certs.push_back(make_certificate("ω normalized and satisfies the cocycle identity", check_cocycle(w)));
  } else if (has("x0")) {
    out.result["kind"] = "diagram";
    out.certs.push_back(make_certificate("diagram: categories, functors, coherence cells",
                                         validate_diagram(load_diagram(j, dir_of(path)))));
  } else if (has("obj_map")) {
    out.result["kind"] = "functor";
    const Functor f = load_functor(j, dir_of(path));
    Report r;
    r.merge(validate_category(*f.src), "source: ");
    r.merge(validate_category(*f.dst), "target: ");
    if (r.ok()) r.merge(validate_functor(f));
    out.certs.push_back(make_certificate("functor preserves endpoints, identities and composition", r));
  } else if (has("mult")) {
    out.result["kind"] = "group";
    const Group g = load_group(j);
    out.result["order"] = g.order();
    out.certs.push_back(make_certificate("multiplication table is a group", Report{}));
  } else if (has("sets")) {
    out.result["kind"] = "set-functor";
    if (base_path.empty()) throw SchemaError("", "set functor needs --base");
    const json b = read_json_file(base_path);
    const CategoryPtr base = b.contains("tensor_obj") ? load_monoidal(b).monoidal->base : load_category(b);
    out.certs.push_back(make_certificate("set functor preserves identities and composition",
                                         validate_set_functor(load_set_functor(j, base))));
  } else if (has("tensor_obj")) {
    out.result["kind"] = "monoidal";
    check_monoidal_input(load_monoidal(j), out);
  } else {
    out.result["kind"] = "category";
    out.certs.push_back(make_certificate("input: category axioms", validate_category(*load_category(j))));
  }
  return out;
}

Outcome run_centre(const std::string& path, const Settings& s) {
  Outcome out;
  const LoadedMonoidal m = load_monoidal_file(path);
  if (!check_monoidal_input(m, out)) return out;
  const CentreCategory z =
      compute_centre(m.monoidal, s.guards, s.serial ? ExecPolicy::serial : ExecPolicy::parallel);
  const FinCategory& c = *z.category();
  const int n = c.num_objects();
  out.lines.push_back("centre objects: " + std::to_string(n));
  out.lines.push_back("centre morphisms: " + std::to_string(c.num_morphisms()));
  for (int i = 0; i < n; ++i)
    out.lines.push_back("  Z" + std::to_string(i) + " = (" + std::to_string(z.objects[i].a) + ", γ = [" +
                        join(z.objects[i].half_braiding) + "])");
  out.lines.push_back("braiding c(Zi, Zj) as morphisms of A:");
  for (int i = 0; i < n; ++i) {
    std::vector<int> row;
    for (int k = 0; k < n; ++k) row.push_back(z.underlying[z.braiding.at(i, k, n)]);
    out.lines.push_back("  Z" + std::to_string(i) + ": " + join(row));
  }
  out.result = centre_to_json(z);
  out.result.erase("certificates");
  out.certs.insert(out.certs.end(), z.certificates.begin(), z.certificates.end());
  return out;
}

Outcome run_descent(const std::string& path, bool from_monoidal, const Settings& s) {
  Outcome out;
  if (from_monoidal) {
    const LoadedMonoidal m = load_monoidal_file(path);
    if (!check_monoidal_input(m, out)) return out;
    const DescentCentreVerdict v = verify_descent_equals_centre(m.monoidal, s.guards);
    out.lines.push_back("descent objects: " + std::to_string(v.descent_objects));
    out.lines.push_back("centre objects: " + std::to_string(v.centre_objects));
    out.result = {{"descent_objects", v.descent_objects},
                  {"centre_objects", v.centre_objects},
                  {"bijective_on_objects", v.bijective_on_objects}};
    Report pipe;
    if (!v.pipeline_agrees) pipe.add("iso-inserter/equifier pipeline and direct construction differ");
    out.certs.push_back(make_certificate("descent pipeline agrees with the direct construction", pipe));
    out.certs.push_back(make_certificate("comparison with the centre is a well-defined functor", v.comparison_report));
    Report eq;
    if (!v.verdict.equivalence()) eq.add(v.verdict.witness);
    out.certs.push_back(make_certificate("descent object is equivalent to the centre", eq));
    return out;
  }
  const DiagramData d = load_diagram(read_json_file(path), dir_of(path));
  const Report valid = validate_diagram(d);
  out.certs.push_back(make_certificate("input: diagram categories, functors, coherence cells", valid));
  if (!valid.ok()) return out;
  const ExplicitDiagram ed = explicit_diagram(d);
  const auto direct = descent_direct(ed, s.guards);
  const auto piped = descent_pipeline(ed, s.guards);
  Report agree;
  const auto f = match_descent(piped, direct);
  if (!f || !is_isomorphism(*f) || !validate_functor(*f).ok())
    agree.add("iso-inserter/equifier pipeline and direct construction are not isomorphic");
  out.certs.push_back(make_certificate("descent pipeline agrees with the direct construction", agree));
  out.lines.push_back("descent objects: " + std::to_string(direct.objects.size()));
  out.lines.push_back("descent morphisms: " + std::to_string(direct.category->num_morphisms()));
  json objs = json::array();
  for (const auto& [x, phi] : direct.objects) {
    out.lines.push_back("  (" + std::to_string(x) + ", φ = " + std::to_string(phi) + ")");
    objs.push_back({{"object", x}, {"phi", phi}});
  }
  out.result = {{"objects", std::move(objs)}, {"underlying", direct.underlying},
                {"category", category_to_json(*direct.category)}};
  return out;
}

Outcome run_equiv(const std::string& path) {
  Outcome out;
  const Functor f = load_functor(read_json_file(path), dir_of(path));
  Report r;
  r.merge(validate_category(*f.src), "source: ");
  r.merge(validate_category(*f.dst), "target: ");
  if (r.ok()) r.merge(validate_functor(f));
  out.certs.push_back(make_certificate("input: functor between categories", r));
  if (!r.ok()) return out;
  const EquivalenceVerdict v = check_equivalence(f);
  out.lines.push_back(std::string("full: ") + (v.full ? "yes" : "no"));
  out.lines.push_back(std::string("faithful: ") + (v.faithful ? "yes" : "no"));
  out.lines.push_back(std::string("essentially surjective: ") + (v.essentially_surjective ? "yes" : "no"));
  out.result = {{"full", v.full}, {"faithful", v.faithful}, {"essentially_surjective", v.essentially_surjective}};
  Report eq;
  if (!v.equivalence()) eq.add(v.witness);
  out.certs.push_back(make_certificate("functor is an equivalence", eq));
  return out;
}

Outcome run_convolve(const std::string& base_path, const std::string& f_path, const std::string& g_path,
                     const Settings& s) {
  Outcome out;
  const LoadedMonoidal m = load_monoidal_file(base_path);
  if (!check_monoidal_input(m, out)) return out;
  const MonoidalStructure& a = *m.monoidal;
  const SetFunctor f = load_set_functor(read_json_file(f_path), a.base);
  const SetFunctor g = load_set_functor(read_json_file(g_path), a.base);
  const Report rf = validate_set_functor(f), rg = validate_set_functor(g);
  out.certs.push_back(make_certificate("input: F is a functor", rf));
  out.certs.push_back(make_certificate("input: G is a functor", rg));
  if (!rf.ok() || !rg.ok()) return out;
  const ExecPolicy policy = s.serial ? ExecPolicy::serial : ExecPolicy::parallel;
  const Convolution conv = day_convolve(f, g, a, policy);
  out.certs.push_back(make_certificate("F ⊗ G is a functor", validate_set_functor(conv.functor)));
  Report yoneda;
  const int n = a.num_objects();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      const SetFunctor yb = representable(a.base, b), yc = representable(a.base, c);
      const SetFunctor ybc = representable(a.base, a.tensor(b, c));
      const Convolution bc = day_convolve(yb, yc, a, policy);
      const InducedMap im = yoneda_map(a, b, c, bc);
      const std::string at = "(b, c) = (" + std::to_string(b) + ", " + std::to_string(c) + "): ";
      yoneda.merge(im.well_defined, at);
      if (!im.well_defined.ok()) continue;
      yoneda.merge(validate_set_map(bc.functor, ybc, im.map), at);
      if (!is_bijective(im.map, bc.functor, ybc)) yoneda.add(at + "comparison map is not bijective");
    }
  out.certs.push_back(make_certificate("Yoneda: y_b ⊗ y_c ≅ y_{b⊗c} for all b, c", yoneda));
  out.lines.push_back("(F ⊗ G) sets: " + join(conv.functor.sets));
  out.result = set_functor_to_json(conv.functor);
  return out;
}

Outcome run_vec_centre(const std::string& group_path, const std::string& omega_path, const Settings& s) {
  Outcome out;
  const Group g = load_group(read_json_file(group_path));
  const Cocycle3 w = omega_path.empty() ? trivial_cocycle(g) : load_cocycle(read_json_file(omega_path), g);
  const Report cocycle = check_cocycle(w);
  out.certs.push_back(make_certificate("input: ω normalized and satisfies the cocycle identity", cocycle));
  if (!cocycle.ok()) return out;
  if (field_order(w) == 0) {
    Report r;
    r.add("ω takes a value that is not a root of unity");
    out.certs.push_back(make_certificate("input: ω takes root-of-unity values", r));
    return out;
  }
  const SimpleList list =
      centre_simples(w, s.dim_bound, s.serial ? ExecPolicy::serial : ExecPolicy::parallel, s.max_group_order);
  out.lines.push_back("simple objects: " + std::to_string(list.simples.size()));
  for (std::size_t i = 0; i < list.simples.size(); ++i) {
    const auto& x = list.simples[i];
    out.lines.push_back("  S" + std::to_string(i) + ": class of " + std::to_string(x.class_rep) +
                        ", dimension " + std::to_string(x.object.carrier.dim()) + ", dimensions by grade [" +
                        join(x.dimensions) + "]");
  }
  for (const auto& note : list.notes) out.lines.push_back("note: " + note);
  out.result = simples_to_json(list, w);
  out.certs.push_back(make_certificate("simples: half-braiding axiom, End = scalars, pairwise disjoint", list.certificate));
  Report sum;
  if (!list.sum_rule) sum.add(list.complete ? "Σ dim² differs from |G|²" : "simple list incomplete under the dimension bound");
  out.certs.push_back(make_certificate("sum rule Σ dim² = |G|²", sum));
  const auto linear = certify_linear_centre(list.simples, w, g.order() <= 4);
  out.certs.insert(out.certs.end(), linear.begin(), linear.end());
  return out;
}

Outcome run_report(const std::string& path, const Settings& s) {
  Outcome out = run_centre(path, s);
  if (!all_pass(out.certs)) return out;
  const MonoidalPtr a = load_monoidal_file(path).monoidal;
  const CentreCategory z = compute_centre(a, s.guards);
  try {
    const DescentCentreVerdict v = verify_descent_equals_centre(a, s.guards);
    Report eq;
    if (!v.equivalence()) eq.add(v.verdict.witness.empty() ? "descent and centre differ" : v.verdict.witness);
    out.certs.push_back(make_certificate("descent object is equivalent to the centre", eq));
  } catch (const GuardExceeded& e) {
    out.lines.push_back(std::string("note: descent comparison skipped: ") + e.what());
  }
  const std::vector<std::pair<std::string, CategoryPtr>> shapes{
      {"terminal", terminal_category()}, {"discrete 2", discrete_category(2)}, {"walking arrow", walking_arrow()}};
  for (const auto& [name, u] : shapes) {
    const BirepresentationVerdict v = check_birepresentation(u, a, s.guards);
    Report r = v.comparison_report;
    if (!v.verdict.equivalence()) r.add(v.verdict.witness);
    out.certs.push_back(make_certificate("[U, Z] ≃ CP(U, A) for U = " + name, r));
  }
  const TransportResult t = transport_along_power(discrete_category(2), as_centre_piece(z.objects.front(), a), s.guards);
  Report tr = t.transported_report;
  tr.merge(t.comparison_report);
  if (!t.equivalence.equivalence()) tr.add(t.equivalence.witness);
  out.certs.push_back(make_certificate("[E, Z_A] → Z_[E, A] is a strong monoidal equivalence for E = discrete 2", tr));
  const CoproductVerdict cp = check_cp_preserves_coproducts(terminal_category(), discrete_category(2), a, s.guards);
  Report cr = cp.comparison_report;
  if (!cp.verdict.equivalence()) cr.add(cp.verdict.witness);
  out.certs.push_back(make_certificate("CP(U ⊔ V, A) ≃ CP(U, A) × CP(V, A) for U = terminal, V = discrete 2", cr));
  return out;
}

int emit(const std::string& command, const Outcome& out, const Settings& s) {
  const bool pass = all_pass(out.certs);
  if (s.emit == "json") {
    json j{{"schema_version", kSchemaVersion},
           {"command", command},
           {"result", out.result},
           {"certificates", certificates_to_json(out.certs)},
           {"status", pass ? "PASS" : "FAIL"}};
    std::cout << j.dump(1) << "\n";
  } else {
    for (const auto& l : out.lines) std::cout << l << "\n";
    std::cout << "certificates:\n";
    for (const auto& c : out.certs)
      std::cout << "  " << (c.pass ? "PASS  " : "FAIL  ") << c.name << (c.pass ? "" : ": " + c.detail) << "\n";
    std::cout << "status: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monoidal centres of finite monoidal categories, with machine-checked certificates.\n"
               "Exit codes: 0 all certificates pass, 1 a certificate fails, 2 malformed input, 3 size guard exceeded.\n"
               "Option precedence: command line, then MONCENTRE_* environment variables, then --config."};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.set_config("--config", "", "INI/TOML file with option defaults");
  app.add_option("--emit", s.emit, "Output format")->check(CLI::IsMember({"text", "json"}))->envname("MONCENTRE_EMIT")->capture_default_str();
  app.add_option("--threads", s.threads, "OpenMP threads (0 = runtime default)")->envname("MONCENTRE_THREADS")->capture_default_str();
  app.add_flag("--serial", s.serial, "Use the serial reference kernels")->envname("MONCENTRE_SERIAL");
  app.add_option("--max-objects", s.guards.max_objects, "Guard on objects of constructed categories")
      ->envname("MONCENTRE_MAX_OBJECTS")->capture_default_str();
  app.add_option("--max-morphisms", s.guards.max_morphisms, "Guard on morphisms of constructed categories")
      ->envname("MONCENTRE_MAX_MORPHISMS")->capture_default_str();
  app.add_option("--hochschild-max-objects", s.guards.hochschild_max_objects, "Largest |Ob A| for the descent route")
      ->envname("MONCENTRE_HOCHSCHILD_MAX_OBJECTS")->capture_default_str();
  app.add_option("--max-search-nodes", s.guards.max_search_nodes, "Backtracking budget")
      ->envname("MONCENTRE_MAX_SEARCH_NODES")->capture_default_str();

  std::string path, path2, path3, group_path, base_path, omega_path;
  bool from_monoidal = false;

  auto* validate = app.add_subcommand("validate", "Check a JSON file against its schema and axioms");
  validate->add_option("file", path, "category, monoidal, functor, diagram, group, cocycle, set functor or half-braiding")->required();
  validate->add_option("--group", group_path, "Group for a cocycle file");
  validate->add_option("--base", base_path, "Base category for a set functor file");

  auto* centre = app.add_subcommand("centre", "Compute the centre of a monoidal category");
  centre->add_option("monoidal", path)->required();

  auto* descent = app.add_subcommand("descent", "Descent object of a truncated cosimplicial diagram");
  descent->add_option("file", path, "diagram file, or a monoidal file with --from-monoidal")->required();
  descent->add_flag("--from-monoidal", from_monoidal, "Build the diagram of a monoidal category and compare with its centre");

  auto* equiv = app.add_subcommand("equiv", "Decide whether a functor is an equivalence");
  equiv->add_option("functor", path)->required();

  auto* convolve = app.add_subcommand("convolve", "Day convolution of two set-valued functors");
  convolve->add_option("base", path, "monoidal base")->required();
  convolve->add_option("F", path2)->required();
  convolve->add_option("G", path3)->required();

  auto* vec = app.add_subcommand("vec-centre", "Simple objects of the centre of Vec_G^ω");
  vec->add_option("group", path)->required();
  vec->add_option("--omega", omega_path, "3-cocycle file (default: trivial)");
  vec->add_option("--dim-bound", s.dim_bound, "Largest simple dimension to construct")
      ->envname("MONCENTRE_DIM_BOUND")->capture_default_str();
  vec->add_option("--max-group-order", s.max_group_order, "Guard on |G|")
      ->envname("MONCENTRE_MAX_GROUP_ORDER")->capture_default_str();

  auto* report = app.add_subcommand("report", "Every certificate for one monoidal category");
  report->add_option("monoidal", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  set_thread_count(s.threads);

  try {
    if (*validate) return emit("validate", run_validate(path, group_path, base_path), s);
    if (*centre) return emit("centre", run_centre(path, s), s);
    if (*descent) return emit("descent", run_descent(path, from_monoidal, s), s);
    if (*equiv) return emit("equiv", run_equiv(path), s);
    if (*convolve) return emit("convolve", run_convolve(path, path2, path3, s), s);
    if (*vec) return emit("vec-centre", run_vec_centre(path, omega_path, s), s);
    if (*report) return emit("report", run_report(path, s), s);
  } catch (const SchemaError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
