#pragma once

// JSON algebra files. Two shapes are accepted:
//   presentation: field, quiver {vertices, arrows}, relations, truncate_radical, optional grading
//   table:        field, basis_labels, structure_constants [[i, j, k, "c"]], unit_idempotents, optional grading
// Automorphisms are given arrow-level ({"vertices": {...}, "arrows": {...}}) or as {"matrix": columns}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "qalg/structure.hpp"

namespace qalg::io {

using json = nlohmann::ordered_json;

struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::string digest;  // FNV-1a 64 of the file bytes
  std::string source;
};

namespace detail {
[[noreturn]] void malformed(const std::string& what);
}

std::string fnv1a64(std::string_view bytes);

json label_to_json(const BasisLabel& l);
BasisLabel label_from_json(const json& j);
Presentation presentation_from_json(const json& j, const Field& f);

json parse_json_text(const std::string& bytes);
// Table-form algebras must pass check_algebra; a violation is InvalidAlgebra.
Algebra algebra_from_json(const json& j);
std::string read_file(const std::string& path);
LoadedAlgebra load(const std::string& path);

// Table-form file for any algebra; parsing it back gives the same table.
json algebra_to_json(const Algebra& a);

AlgebraMorphism automorphism_from_json(const AlgebraPtr& a, const json& j);

}  // namespace qalg::io
