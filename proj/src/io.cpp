#include "moncentre/io.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace moncentre {

namespace {

std::string sub(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return ptr + "/" + k;
}
std::string sub(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& ptr, const std::string& key) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(sub(ptr, key), "missing required field");
  return *it;
}

const json& array_of(const json& j, const std::string& ptr, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  if (size && j.size() != *size)
    throw SchemaError(ptr, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

int integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  return j.get<int>();
}

void check_version(const json& j, const std::string& ptr) {
  const json& v = field(j, ptr, "schema_version");
  if (integer(v, sub(ptr, "schema_version")) != kSchemaVersion)
    throw SchemaError(sub(ptr, "schema_version"), "unsupported schema version " + v.dump());
}

std::string label_key(const json& j, const std::string& ptr) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw SchemaError(ptr, "labels must be strings or integers");
}

struct Labels {
  std::map<std::string, int> obj, mor;

  int object(const json& j, const std::string& ptr) const {
    auto it = obj.find(label_key(j, ptr));
    if (it == obj.end()) throw SchemaError(ptr, "unknown object " + j.dump());
    return it->second;
  }
  int morphism(const json& j, const std::string& ptr) const {
    auto it = mor.find(label_key(j, ptr));
    if (it == mor.end()) throw SchemaError(ptr, "unknown morphism " + j.dump());
    return it->second;
  }
};

std::pair<CategoryPtr, Labels> parse_category(const json& j, const std::string& ptr) {
  Labels labels;
  const json& objs = array_of(field(j, ptr, "objects"), sub(ptr, "objects"));
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string k = label_key(objs[i], sub(sub(ptr, "objects"), i));
    if (!labels.obj.emplace(k, static_cast<int>(i)).second)
      throw SchemaError(sub(sub(ptr, "objects"), i), "duplicate object " + objs[i].dump());
  }
  const std::string mp = sub(ptr, "morphisms");
  const json& mors = array_of(field(j, ptr, "morphisms"), mp);
  std::vector<MorphismData> data;
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const std::string p = sub(mp, i);
    const std::string k = label_key(field(mors[i], p, "id"), sub(p, "id"));
    if (!labels.mor.emplace(k, static_cast<int>(i)).second)
      throw SchemaError(sub(p, "id"), "duplicate morphism " + k);
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const std::string p = sub(mp, i);
    data.push_back({labels.object(field(mors[i], p, "src"), sub(p, "src")),
                    labels.object(field(mors[i], p, "dst"), sub(p, "dst"))});
  }
  const std::string ip = sub(ptr, "identity");
  const json& ids = field(j, ptr, "identity");
  if (!ids.is_object()) throw SchemaError(ip, "expected an object keyed by object label");
  std::vector<MorId> identity(objs.size(), kNone);
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    const std::string p = sub(ip, it.key());
    auto o = labels.obj.find(it.key());
    if (o == labels.obj.end()) throw SchemaError(p, "unknown object " + it.key());
    const int f = labels.morphism(it.value(), p);
    if (data[f].src != o->second || data[f].dst != o->second)
      throw SchemaError(p, "identity is not an endomorphism of its object");
    identity[o->second] = f;
  }
  for (std::size_t a = 0; a < objs.size(); ++a)
    if (identity[a] == kNone) throw SchemaError(sub(ip, label_key(objs[a], "")), "missing identity entry");
  const std::string cp = sub(ptr, "compose");
  const json& comp = array_of(field(j, ptr, "compose"), cp);
  std::vector<FinCategory::ComposeTriple> triples;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string p = sub(cp, i);
    const json& t = array_of(comp[i], p, 3);
    const int g = labels.morphism(t[0], sub(p, 0));
    const int f = labels.morphism(t[1], sub(p, 1));
    const int gf = labels.morphism(t[2], sub(p, 2));
    if (data[f].dst != data[g].src) throw SchemaError(p, "entry composes non-composable morphisms");
    if (!seen.insert({g, f}).second) throw SchemaError(p, "duplicate composition entry");
    triples.push_back({g, f, gf});
  }
  return {make_category(FinCategory(static_cast<int>(objs.size()), std::move(data), std::move(identity), triples)),
          std::move(labels)};
}

CategoryPtr category_or_path(const json& j, const std::string& ptr, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    const json inner = read_json_file(p);
    check_version(inner, "");
    return parse_category(inner, "").first;
  }
  check_version(j, ptr);
  return parse_category(j, ptr).first;
}

std::vector<int> int_list(const json& j, const std::string& ptr, std::optional<std::size_t> size = {}) {
  array_of(j, ptr, size);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], sub(ptr, i)));
  return out;
}

std::vector<int> id_list(const json& j, const std::string& ptr, std::size_t size, int bound, const char* what) {
  std::vector<int> out = int_list(j, ptr, size);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < 0 || out[i] >= bound) throw SchemaError(sub(ptr, i), std::string("not a ") + what + " id");
  return out;
}

Functor functor_tables(const json& j, const std::string& ptr, const CategoryPtr& src, const CategoryPtr& dst) {
  Functor f{src, dst, {}, {}};
  f.obj_map = id_list(field(j, ptr, "obj_map"), sub(ptr, "obj_map"), src->num_objects(), dst->num_objects(), "object");
  f.mor_map = id_list(field(j, ptr, "mor_map"), sub(ptr, "mor_map"), src->num_morphisms(), dst->num_morphisms(),
                      "morphism");
  return f;
}

CycNumber parse_number(const json& j, const std::string& ptr, int order) {
  auto rational = [&](const json& v, const std::string& p) {
    try {
      if (v.is_number_integer()) return mpq_class(v.get<long>());
      if (v.is_string()) {
        mpq_class q(v.get<std::string>());
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
      }
    } catch (const std::invalid_argument&) {
    }
    throw SchemaError(p, "expected a rational (integer or \"p/q\" string)");
  };
  if (j.is_array()) {
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational(j[i], sub(ptr, i)));
    return CycNumber::from_coefficients(order, std::move(c));
  }
  return CycNumber::rational(order, rational(j, ptr));
}

json label_array(int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(i);
  return a;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", path.string() + ": " + e.what());
  }
}

CategoryPtr load_category(const json& j) {
  check_version(j, "");
  return parse_category(j, "").first;
}

LoadedMonoidal load_monoidal(const json& j) {
  check_version(j, "");
  auto [c, labels] = parse_category(j, "");
  const int n = c->num_objects(), m = c->num_morphisms();
  MonoidalStructure out;
  out.base = c;
  const json& to = array_of(field(j, "", "tensor_obj"), "/tensor_obj", n);
  for (int a = 0; a < n; ++a) {
    const std::string p = sub("/tensor_obj", a);
    const json& row = array_of(to[a], p, n);
    for (int b = 0; b < n; ++b) out.tensor_obj_table.push_back(labels.object(row[b], sub(p, b)));
  }
  const json& tm = array_of(field(j, "", "tensor_mor"), "/tensor_mor", m);
  for (int f = 0; f < m; ++f) {
    const std::string p = sub("/tensor_mor", f);
    const json& row = array_of(tm[f], p, m);
    for (int g = 0; g < m; ++g) out.tensor_mor_table.push_back(labels.morphism(row[g], sub(p, g)));
  }
  out.unit = labels.object(field(j, "", "unit"), "/unit");
  const json& al = array_of(field(j, "", "alpha"), "/alpha", n);
  for (int a = 0; a < n; ++a) {
    const std::string pa = sub("/alpha", a);
    array_of(al[a], pa, n);
    for (int b = 0; b < n; ++b) {
      const std::string pb = sub(pa, b);
      const json& row = array_of(al[a][b], pb, n);
      for (int d = 0; d < n; ++d) out.alpha_table.push_back(labels.morphism(row[d], sub(pb, d)));
    }
  }
  for (const char* key : {"lambda", "rho"}) {
    const std::string p = sub("", key);
    const json& arr = array_of(field(j, "", key), p, n);
    auto& table = std::string(key) == "lambda" ? out.lambda_table : out.rho_table;
    for (int a = 0; a < n; ++a) table.push_back(labels.morphism(arr[a], sub(p, a)));
  }
  LoadedMonoidal result;
  if (auto it = j.find("braiding"); it != j.end()) {
    Braiding br;
    array_of(*it, "/braiding", n);
    for (int a = 0; a < n; ++a) {
      const std::string p = sub("/braiding", a);
      const json& row = array_of((*it)[a], p, n);
      for (int b = 0; b < n; ++b) br.components.push_back(labels.morphism(row[b], sub(p, b)));
    }
    result.braiding = std::move(br);
  }
  result.monoidal = std::make_shared<const MonoidalStructure>(std::move(out));
  return result;
}

LoadedHalfBraiding load_half_braiding(const json& j, const std::filesystem::path& base_dir) {
  check_version(j, "");
  const json& m = field(j, "", "monoidal");
  LoadedHalfBraiding out;
  if (m.is_string()) {
    out.monoidal = load_monoidal(read_json_file(base_dir / m.get<std::string>()));
  } else {
    try {
      out.monoidal = load_monoidal(m);
    } catch (const SchemaError& e) {
      throw SchemaError("/monoidal" + e.pointer, std::string(e.what()).substr(e.pointer.size() + 2));
    }
  }
  const MonoidalStructure& a = *out.monoidal.monoidal;
  out.object.a = integer(field(j, "", "object"), "/object");
  if (out.object.a < 0 || out.object.a >= a.num_objects()) throw SchemaError("/object", "not an object id");
  out.object.half_braiding =
      id_list(field(j, "", "half_braiding"), "/half_braiding", a.num_objects(), a.base->num_morphisms(), "morphism");
  return out;
}

Functor load_functor(const json& j, const std::filesystem::path& base_dir) {
  check_version(j, "");
  const CategoryPtr src = category_or_path(field(j, "", "src"), "/src", base_dir);
  const CategoryPtr dst = category_or_path(field(j, "", "dst"), "/dst", base_dir);
  return functor_tables(j, "", src, dst);
}

DiagramData load_diagram(const json& j, const std::filesystem::path& base_dir) {
  check_version(j, "");
  DiagramData d;
  d.x0 = category_or_path(field(j, "", "x0"), "/x0", base_dir);
  d.x1 = category_or_path(field(j, "", "x1"), "/x1", base_dir);
  d.x2 = category_or_path(field(j, "", "x2"), "/x2", base_dir);
  d.d0 = functor_tables(field(j, "", "d0"), "/d0", d.x0, d.x1);
  d.d1 = functor_tables(field(j, "", "d1"), "/d1", d.x0, d.x1);
  d.e0 = functor_tables(field(j, "", "e0"), "/e0", d.x1, d.x2);
  d.e1 = functor_tables(field(j, "", "e1"), "/e1", d.x1, d.x2);
  d.e2 = functor_tables(field(j, "", "e2"), "/e2", d.x1, d.x2);
  auto cell = [&](const char* key, const Functor& a, const Functor& b) {
    NatTransf t{a, b, {}};
    t.components = id_list(field(j, "", key), sub("", key), d.x0->num_objects(), d.x2->num_morphisms(), "morphism");
    return t;
  };
  d.coh00 = cell("coh00", compose_functors(d.e0, d.d0), compose_functors(d.e1, d.d0));
  d.coh01 = cell("coh01", compose_functors(d.e0, d.d1), compose_functors(d.e2, d.d0));
  d.coh21 = cell("coh21", compose_functors(d.e2, d.d1), compose_functors(d.e1, d.d1));
  return d;
}

SetFunctor load_set_functor(const json& j, const CategoryPtr& base) {
  check_version(j, "");
  SetFunctor f{base, {}, {}};
  f.sets = int_list(field(j, "", "sets"), "/sets", base->num_objects());
  for (std::size_t a = 0; a < f.sets.size(); ++a)
    if (f.sets[a] < 0) throw SchemaError(sub("/sets", a), "negative set size");
  const json& act = array_of(field(j, "", "action"), "/action", base->num_morphisms());
  for (int k = 0; k < base->num_morphisms(); ++k) {
    const std::string p = sub("/action", k);
    f.action.push_back(id_list(act[k], p, f.sets[base->src(k)], f.sets[base->dst(k)], "element"));
  }
  return f;
}

Group load_group(const json& j) {
  check_version(j, "");
  const json& rows = array_of(field(j, "", "mult"), "/mult");
  const std::size_t n = rows.size();
  std::vector<std::vector<int>> table;
  for (std::size_t a = 0; a < n; ++a)
    table.push_back(id_list(rows[a], sub("/mult", a), n, static_cast<int>(n), "group element"));
  try {
    return Group(std::move(table));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/mult", e.what());
  }
}

Cocycle3 load_cocycle(const json& j, const Group& g) {
  check_version(j, "");
  const int order = integer(field(j, "", "order"), "/order");
  if (order < 1) throw SchemaError("/order", "field order must be positive");
  const int n = g.order();
  const json& om = array_of(field(j, "", "omega"), "/omega", n);
  Cocycle3 w{g, {}};
  for (int a = 0; a < n; ++a) {
    const std::string pa = sub("/omega", a);
    array_of(om[a], pa, n);
    for (int b = 0; b < n; ++b) {
      const std::string pb = sub(pa, b);
      array_of(om[a][b], pb, n);
      for (int c = 0; c < n; ++c) w.omega.push_back(parse_number(om[a][b][c], sub(pb, c), order));
    }
  }
  return w;
}

// ---------------------------------------------------------------------------

json category_to_json(const FinCategory& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["objects"] = label_array(c.num_objects());
  json mors = json::array();
  for (int f = 0; f < c.num_morphisms(); ++f) mors.push_back({{"id", f}, {"src", c.src(f)}, {"dst", c.dst(f)}});
  j["morphisms"] = std::move(mors);
  json ids = json::object();
  for (int a = 0; a < c.num_objects(); ++a) ids[std::to_string(a)] = c.identity(a);
  j["identity"] = std::move(ids);
  json comp = json::array();
  for (const auto& t : c.compose_triples()) comp.push_back({t[0], t[1], t[2]});
  j["compose"] = std::move(comp);
  return j;
}

json monoidal_to_json(const MonoidalStructure& m, const Braiding* braiding) {
  json j = category_to_json(*m.base);
  const int n = m.num_objects(), k = m.base->num_morphisms();
  json to = json::array(), tm = json::array(), al = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(m.tensor(a, b));
    to.push_back(std::move(row));
  }
  for (int f = 0; f < k; ++f) {
    json row = json::array();
    for (int g = 0; g < k; ++g) row.push_back(m.tensor_mor(f, g));
    tm.push_back(std::move(row));
  }
  for (int a = 0; a < n; ++a) {
    json plane = json::array();
    for (int b = 0; b < n; ++b) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back(m.alpha(a, b, c));
      plane.push_back(std::move(row));
    }
    al.push_back(std::move(plane));
  }
  j["tensor_obj"] = std::move(to);
  j["tensor_mor"] = std::move(tm);
  j["unit"] = m.unit;
  j["alpha"] = std::move(al);
  j["lambda"] = m.lambda_table;
  j["rho"] = m.rho_table;
  if (braiding) {
    json br = json::array();
    for (int a = 0; a < n; ++a) {
      json row = json::array();
      for (int b = 0; b < n; ++b) row.push_back(braiding->at(a, b, n));
      br.push_back(std::move(row));
    }
    j["braiding"] = std::move(br);
  }
  return j;
}

json functor_to_json(const Functor& f) {
  return {{"schema_version", kSchemaVersion},
          {"src", category_to_json(*f.src)},
          {"dst", category_to_json(*f.dst)},
          {"obj_map", f.obj_map},
          {"mor_map", f.mor_map}};
}

json half_braiding_to_json(const CentreObject& o, const json& monoidal) {
  return {{"schema_version", kSchemaVersion},
          {"monoidal", monoidal},
          {"object", o.a},
          {"half_braiding", o.half_braiding}};
}

json diagram_to_json(const DiagramData& d) {
  auto tables = [](const Functor& f) { return json{{"obj_map", f.obj_map}, {"mor_map", f.mor_map}}; };
  return {{"schema_version", kSchemaVersion},
          {"x0", category_to_json(*d.x0)},
          {"x1", category_to_json(*d.x1)},
          {"x2", category_to_json(*d.x2)},
          {"d0", tables(d.d0)},
          {"d1", tables(d.d1)},
          {"e0", tables(d.e0)},
          {"e1", tables(d.e1)},
          {"e2", tables(d.e2)},
          {"coh00", d.coh00.components},
          {"coh01", d.coh01.components},
          {"coh21", d.coh21.components}};
}

json set_functor_to_json(const SetFunctor& f) {
  return {{"schema_version", kSchemaVersion}, {"sets", f.sets}, {"action", f.action}};
}

json group_to_json(const Group& g) { return {{"schema_version", kSchemaVersion}, {"mult", g.table()}}; }

json number_to_json(const CycNumber& x) { return x.coefficient_strings(); }

json cocycle_to_json(const Cocycle3& w) {
  int order = 1;
  for (const auto& v : w.omega) order = std::lcm(order, v.order());
  const int n = w.group.order();
  json om = json::array();
  for (int a = 0; a < n; ++a) {
    json plane = json::array();
    for (int b = 0; b < n; ++b) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back(number_to_json(w.at(a, b, c).promote(order)));
      plane.push_back(std::move(row));
    }
    om.push_back(std::move(plane));
  }
  return {{"schema_version", kSchemaVersion}, {"order", order}, {"omega", std::move(om)}};
}

json matrix_to_json(const CycMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json certificates_to_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (const auto& c : certs) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) e["detail"] = c.detail;
    out.push_back(std::move(e));
  }
  return out;
}

json centre_to_json(const CentreCategory& z) {
  json objs = json::array();
  for (const auto& o : z.objects) objs.push_back({{"object", o.a}, {"half_braiding", o.half_braiding}});
  json j{{"schema_version", kSchemaVersion},
         {"objects", std::move(objs)},
         {"underlying", z.underlying},
         {"monoidal", monoidal_to_json(*z.monoidal, &z.braiding)},
         {"certificates", certificates_to_json(z.certificates)}};
  return j;
}

json simples_to_json(const SimpleList& s, const Cocycle3& w) {
  json list = json::array();
  for (const auto& x : s.simples) {
    json beta = json::array();
    for (const auto& b : x.object.beta) beta.push_back(matrix_to_json(b));
    list.push_back({{"class_rep", x.class_rep},
                    {"dimensions", x.dimensions},
                    {"total_dimension", x.object.carrier.dim()},
                    {"grades", x.object.carrier.grades},
                    {"beta", std::move(beta)}});
  }
  json notes = s.notes;
  return {{"schema_version", kSchemaVersion},
          {"field_order", field_order(w)},
          {"simples", std::move(list)},
          {"complete", s.complete},
          {"sum_rule", s.sum_rule},
          {"notes", std::move(notes)}};
}

}  // namespace moncentre
