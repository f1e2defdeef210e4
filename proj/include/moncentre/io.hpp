#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "moncentre/bilimits.hpp"
#include "moncentre/centre.hpp"
#include "moncentre/convolution.hpp"
#include "moncentre/monoidal.hpp"
#include "moncentre/veck.hpp"

namespace moncentre {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input; `pointer` is the JSON pointer of the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer(std::move(pointer)) {}
  std::string pointer;
};

/// Parses a file; parse errors become SchemaError.
json read_json_file(const std::filesystem::path& path);

// Loaders check the schema and all table references. They do not check
// category/monoidal axioms; run the validators for that.

/// {"schema_version", "objects", "morphisms": [{"id","src","dst"}], "identity": {obj: mor}, "compose": [[g,f,gf]]}.
/// Objects and morphism ids may be strings or integers; they are numbered in listed order.
CategoryPtr load_category(const json& j);

struct LoadedMonoidal {
  MonoidalPtr monoidal;
  std::optional<Braiding> braiding;
};
/// The category fields plus "tensor_obj" (n×n), "tensor_mor" (m×m), "unit",
/// "alpha" (n×n×n), "lambda", "rho" and an optional "braiding" (n×n).
LoadedMonoidal load_monoidal(const json& j);

struct LoadedHalfBraiding {
  LoadedMonoidal monoidal;
  CentreObject object;
};
/// {"monoidal" (inline or path), "object", "half_braiding": [γ_x for each object x]}.
LoadedHalfBraiding load_half_braiding(const json& j, const std::filesystem::path& base_dir = {});

/// {"src", "dst", "obj_map", "mor_map"}; src and dst are inline categories or
/// paths relative to base_dir.
Functor load_functor(const json& j, const std::filesystem::path& base_dir = {});

/// {"x0","x1","x2" (categories or paths), "d0","d1","e0","e1","e2" ({"obj_map","mor_map"}),
///  "coh00","coh01","coh21" (component lists)}.
DiagramData load_diagram(const json& j, const std::filesystem::path& base_dir = {});

/// {"sets": [..], "action": [[..]..]} over the given base.
SetFunctor load_set_functor(const json& j, const CategoryPtr& base);

/// {"mult": n×n table}.
Group load_group(const json& j);

/// {"order": N, "omega": n×n×n entries}, each entry a coefficient list over ℚ(ζ_N)
/// (constant term first; rationals as strings or integers) or a single rational.
Cocycle3 load_cocycle(const json& j, const Group& g);

json category_to_json(const FinCategory& c);
json monoidal_to_json(const MonoidalStructure& m, const Braiding* braiding = nullptr);
json functor_to_json(const Functor& f);
/// `monoidal` is stored as given: an inline document or a relative path.
json half_braiding_to_json(const CentreObject& o, const json& monoidal);
json diagram_to_json(const DiagramData& d);
json set_functor_to_json(const SetFunctor& f);
json group_to_json(const Group& g);
json cocycle_to_json(const Cocycle3& w);
json number_to_json(const CycNumber& x);
json matrix_to_json(const CycMatrix& m);
json certificates_to_json(const std::vector<Certificate>& certs);
/// Objects, morphisms with their underlying A-morphisms, and the braided monoidal structure of Z.
json centre_to_json(const CentreCategory& z);
json simples_to_json(const SimpleList& s, const Cocycle3& w);

}  // namespace moncentre
