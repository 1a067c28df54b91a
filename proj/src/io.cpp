#include "qalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qalg::io {

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

void detail::malformed(const std::string& what) { fail(ErrorCode::MalformedFile, what); }

namespace detail {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

json label_to_json(const BasisLabel& l) {
  switch (l.kind) {
    case BasisLabel::Kind::Vertex: return json{{"vertex", l.vertex}};
    case BasisLabel::Kind::Path: return json{{"path", l.path}};
    case BasisLabel::Kind::Group: return json{{"group", l.index}, {"of", label_to_json(*l.inner)}};
    case BasisLabel::Kind::Smash: return json{{"smash", l.index}, {"of", label_to_json(*l.inner)}};
    case BasisLabel::Kind::Dual: return json{{"dual", label_to_json(*l.inner)}};
    case BasisLabel::Kind::Matrix: return json{{"matrix", {l.index, l.column}}, {"of", label_to_json(*l.inner)}};
  }
  return json();
}

BasisLabel label_from_json(const json& j) {
  if (!j.is_object()) detail::malformed("basis label must be an object");
  if (j.contains("vertex")) return BasisLabel::of_vertex(detail::text(j["vertex"], "vertex"));
  if (j.contains("path")) {
    std::vector<std::string> p;
    if (!j["path"].is_array() || j["path"].empty()) detail::malformed("path label must be a nonempty array");
    for (const auto& a : j["path"]) p.push_back(detail::text(a, "arrow"));
    return BasisLabel::of_path(std::move(p));
  }
  if (j.contains("group")) return BasisLabel::group(label_from_json(detail::member(j, "of")), detail::index(j["group"], "group"));
  if (j.contains("smash")) return BasisLabel::smash(label_from_json(detail::member(j, "of")), detail::index(j["smash"], "smash"));
  if (j.contains("dual")) return BasisLabel::dual(label_from_json(j["dual"]));
  if (j.contains("matrix")) {
    const json& m = j["matrix"];
    if (!m.is_array() || m.size() != 2) detail::malformed("matrix label needs [row, column]");
    return BasisLabel::matrix(detail::index(m[0], "row"), detail::index(m[1], "column"), label_from_json(detail::member(j, "of")));
  }
  detail::malformed("unknown basis label");
}

Presentation presentation_from_json(const json& j, const Field& f) {
  const json& q = detail::member(j, "quiver");
  std::vector<std::string> vertices;
  const json& vs = detail::member(q, "vertices");
  if (!vs.is_array()) detail::malformed("quiver vertices must be an array");
  for (const auto& v : vs) vertices.push_back(detail::text(v, "vertex"));
  std::vector<Arrow> arrows;
  if (q.contains("arrows")) {
    if (!q["arrows"].is_array()) detail::malformed("quiver arrows must be an array");
    for (const auto& a : q["arrows"])
      arrows.push_back({detail::text(detail::member(a, "name"), "arrow name"), detail::text(detail::member(a, "source"), "source"),
                        detail::text(detail::member(a, "target"), "target")});
  }
  Presentation p{f, Quiver(std::move(vertices), std::move(arrows)), {}, 3};
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) detail::malformed("relations must be an array");
    for (const auto& r : j["relations"]) {
      Relation rel;
      const json& terms = detail::member(r, "terms");
      if (!terms.is_array()) detail::malformed("relation terms must be an array");
      for (const auto& t : terms) {
        RelationTerm term{parse_scalar(detail::text(detail::member(t, "coeff"), "coeff"), f), {}};
        const json& path = detail::member(t, "path");
        if (!path.is_array()) detail::malformed("relation path must be an array");
        for (const auto& a : path) term.path.push_back(detail::text(a, "arrow"));
        rel.terms.push_back(std::move(term));
      }
      p.relations.push_back(std::move(rel));
    }
  }
  if (j.contains("truncate_radical")) {
    const json& t = j["truncate_radical"];
    if (!t.is_number_integer()) detail::malformed("truncate_radical must be an integer");
    p.truncate_radical = t.get<int>();
  }
  return p;
}

namespace detail {

Algebra table_from_json(const json& j, const Field& f) {
  const json& labels = member(j, "basis_labels");
  if (!labels.is_array()) malformed("basis_labels must be an array");
  std::vector<BasisLabel> basis;
  for (const auto& l : labels) basis.push_back(label_from_json(l));
  const std::size_t n = basis.size();
  std::vector<std::vector<Term>> table(n * n);
  const json& sc = member(j, "structure_constants");
  if (!sc.is_array()) malformed("structure_constants must be an array");
  for (const auto& e : sc) {
    if (!e.is_array() || e.size() != 4) malformed("structure constant entries are [i, j, k, \"c\"]");
    std::size_t a = index(e[0], "i"), b = index(e[1], "j"), k = index(e[2], "k");
    if (a >= n || b >= n || k >= n) fail(ErrorCode::InvalidAlgebra, "structure constant index out of range");
    Scalar c = parse_scalar(text(e[3], "coefficient"), f);
    if (c.is_zero()) continue;
    auto& cell = table[a * n + b];
    auto it = std::find_if(cell.begin(), cell.end(), [&](const Term& t) { return t.index == k; });
    if (it != cell.end()) malformed("duplicate structure constant");
    cell.push_back({k, c});
  }
  for (auto& cell : table) std::sort(cell.begin(), cell.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  std::vector<std::size_t> units;
  const json& u = member(j, "unit_idempotents");
  if (!u.is_array()) malformed("unit_idempotents must be an array");
  for (const auto& e : u) units.push_back(index(e, "unit idempotent"));
  std::optional<std::vector<int>> grading;
  if (j.contains("grading") && !j["grading"].is_null()) {
    if (!j["grading"].is_array()) malformed("grading must be an array of degrees");
    grading.emplace();
    for (const auto& d : j["grading"]) {
      if (!d.is_number_integer()) malformed("degrees must be integers");
      grading->push_back(d.get<int>());
    }
  }
  return Algebra(f, std::move(basis), std::move(table), std::move(units), std::move(grading));
}

}  // namespace detail

json parse_json_text(const std::string& bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedFile, std::string("invalid JSON: ") + e.what());
  }
}

// Parses a file body; table-form algebras must pass the associativity and unit checks.
Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) detail::malformed("top level must be an object");
  Field f(FieldDescriptor::parse(detail::text(detail::member(j, "field"), "field")));
  if (j.contains("structure_constants")) {
    Algebra a = detail::table_from_json(j, f);
    auto v = check_algebra(a);
    if (!v.empty()) {
      std::string where;
      for (auto i : v[0].indices) where += (where.empty() ? "" : ", ") + a.label(i).to_string();
      fail(ErrorCode::InvalidAlgebra, v[0].kind + " fails at (" + where + "): " + v[0].detail);
    }
    return a;
  }
  Algebra a = build_algebra(presentation_from_json(j, f));
  if (j.contains("grading") && j["grading"].is_string()) {
    std::string g = j["grading"].get<std::string>();
    if (g == "none") return a.without_grading();
    if (g != "path-length") detail::malformed("grading must be \"path-length\" or \"none\" for presentations");
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MalformedFile, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LoadedAlgebra load(const std::string& path) {
  std::string bytes = read_file(path);
  return {share(algebra_from_json(parse_json_text(bytes))), fnv1a64(bytes), path};
}

// Table-form file for any algebra; parsing it back gives the same table.
json algebra_to_json(const Algebra& a) {
  json out;
  out["field"] = a.field().descriptor().to_string();
  out["dimension"] = a.dim();
  json labels = json::array();
  for (const auto& l : a.basis()) labels.push_back(label_to_json(l));
  out["basis_labels"] = labels;
  json names = json::array();
  for (const auto& l : a.basis()) names.push_back(l.to_string());
  out["basis_names"] = names;
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.product(i, j)) sc.push_back(json::array({i, j, t.index, t.coeff.to_string()}));
  out["structure_constants"] = sc;
  out["unit_idempotents"] = a.unit_idempotents();
  if (a.graded()) out["grading"] = *a.grading();
  if (!a.notices().empty()) out["notices"] = a.notices();
  return out;
}

// ---------------------------------------------------------------- automorphisms

AlgebraMorphism automorphism_from_json(const AlgebraPtr& a, const json& j) {
  if (!j.is_object()) detail::malformed("automorphism must be an object");
  const Field f = a->field();
  AlgebraMorphism out;
  if (j.contains("matrix")) {
    const json& cols = j["matrix"];
    if (!cols.is_array() || cols.size() != a->dim()) fail(ErrorCode::ShapeMismatch, "matrix needs one column per basis element");
    std::vector<Vector> images;
    for (const auto& c : cols) {
      if (!c.is_array() || c.size() != a->dim()) fail(ErrorCode::ShapeMismatch, "matrix column has the wrong length");
      Vector v;
      for (const auto& e : c) v.push_back(parse_scalar(detail::text(e, "matrix entry"), f));
      images.push_back(std::move(v));
    }
    out = {a, a, Matrix::from_columns(f, a->dim(), images)};
  } else {
    ArrowMap m;
    if (j.contains("vertices")) {
      if (!j["vertices"].is_object()) detail::malformed("vertices map must be an object");
      for (const auto& [k, v] : j["vertices"].items()) m.vertices[k] = detail::text(v, "vertex image");
    }
    if (j.contains("arrows")) {
      if (!j["arrows"].is_object()) detail::malformed("arrows map must be an object");
      for (const auto& [k, v] : j["arrows"].items()) {
        std::vector<std::pair<Scalar, std::string>> terms;
        auto term = [&](const json& t) {
          terms.push_back({parse_scalar(detail::text(detail::member(t, "coeff"), "coeff"), f),
                           detail::text(detail::member(t, "arrow"), "arrow")});
        };
        if (v.is_array()) {
          for (const auto& t : v) term(t);
        } else {
          term(v);
        }
        m.arrows[k] = std::move(terms);
      }
    }
    out = morphism_from_arrow_map(a, m);
  }
  verify_automorphism(out);
  return out;
}

}  // namespace qalg::io
