#include "qalg/report.hpp"

#include <filesystem>

namespace qalg::report {

std::string render_element(const Algebra& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool compound = c.find_first_of("+*", 1) != std::string::npos || c.find('-', 1) != std::string::npos;
    if (compound) c = "(" + c + ")";
    std::string term = v[i].is_one() ? a.label(i).to_string() : c + "*" + a.label(i).to_string();
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

json matrix_json(const Matrix& m) {
  json cols = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    json col = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(m(r, c).to_string());
    cols.push_back(col);
  }
  return cols;
}

json scalars_json(const std::vector<Scalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

// Images of the degree-one basis elements (or all non-idempotent ones when ungraded).
json generator_images(const AlgebraMorphism& f) {
  const Algebra& a = *f.source;
  json out = json::object();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const BasisLabel& l = a.label(i);
    bool generator = a.graded() ? a.degree(i) == 1 : l.kind == BasisLabel::Kind::Path && l.path.size() == 1;
    if (generator) out[l.to_string()] = render_element(*f.target, f.image(i));
  }
  return out;
}

namespace {

json envelope(const std::string& command, const io::LoadedAlgebra& in, const Options& opt) {
  json r;
  r["command"] = command;
  r["version"] = kVersion;
  r["input"] = {{"file", std::filesystem::path(in.source).filename().string()}, {"digest", in.digest}};
  r["seed"] = opt.seed;
  r["options"] = {{"bound", opt.bound}, {"attempts", opt.attempts}};
  return r;
}

json notices_json(const Algebra& a) { return json(a.notices()); }

}  // namespace

// ---------------------------------------------------------------- info

json cmd_info(const io::LoadedAlgebra& in, const Options& opt) {
  const Algebra& a = *in.algebra;
  json r = envelope("info", in, opt);
  json res;
  res["field"] = a.field().to_string();
  res["dimension"] = a.dim();
  res["vertices"] = a.unit_idempotents().size();
  res["graded"] = a.graded();
  res["radical_layer_dims"] = layer_dims(radical_layers(a));
  res["loewy_length"] = loewy_length(a);
  SocleData sd = socle_data(a);
  res["socle_dim"] = sd.two_sided.dim();
  res["left_socle_dim"] = sd.left.dim();
  res["right_socle_dim"] = sd.right.dim();
  res["connected"] = is_connected(a);
  res["components"] = connected_components(a).size();
  FrobeniusSearch fs = find_frobenius_form(in.algebra, opt.attempts, opt.seed);
  res["frobenius"] = fs.form ? "yes" : fs.proven ? "no" : "unknown";
  res["frobenius_method"] = fs.method;
  res["functionals_tried"] = fs.tried;
  r["results"] = res;
  r["notices"] = notices_json(a);
  return r;
}

// ---------------------------------------------------------------- type

json graph_type_json(const GraphType& t) {
  json out;
  out["label"] = t.label();
  out["definiteness"] = t.definiteness;
  out["pivots"] = scalars_json(t.pivots);
  out["kernel_dim"] = t.kernel_dim;
  if (!t.kernel.empty()) out["kernel"] = t.kernel;
  return out;
}

json cmd_type(const io::LoadedAlgebra& in, const Options& opt) {
  json r = envelope("type", in, opt);
  AlgebraPtr a = in.algebra;
  json notices = notices_json(*a);
  if (!basic_idempotent(*a).already_basic) {
    a = share(basic_algebra(*a));
    notices.push_back("type computed on the basic algebra (dimension " + std::to_string(a->dim()) + ")");
  }
  AlgebraType t = algebra_type(*a);
  json res;
  res["type"] = t.type.label();
  res["certificate"] = graph_type_json(t.type);
  res["separated_quiver"] = {{"vertices", t.separated.vertices().size()}, {"arrows", t.separated.arrows().size()}};
  json comps = json::array();
  for (const auto& c : t.components) comps.push_back(c.label());
  res["components"] = comps;
  r["results"] = res;
  r["notices"] = notices;
  return r;
}

// ---------------------------------------------------------------- nakayama

json cmd_nakayama(const io::LoadedAlgebra& in, const Options& opt) {
  json r = envelope("nakayama", in, opt);
  const AlgebraPtr& a = in.algebra;
  FrobeniusSearch fs = find_frobenius_form(a, opt.attempts, opt.seed);
  if (!fs.form)
    fail(ErrorCode::NotSelfInjective, fs.proven ? "no nondegenerate associative form exists"
                                                : "no nondegenerate associative form found (" + fs.method + ")");
  AlgebraMorphism nu = nakayama_from_form(*fs.form);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) {
      Vector x = a->basis_vector(i), y = a->basis_vector(j);
      if (!((*fs.form)(x, y) == (*fs.form)(y, nu.apply(x))))
        fail(ErrorCode::VerificationFailed, "gram relation fails at (" + a->label(i).to_string() + ", " + a->label(j).to_string() + ")");
      ++pairs;
    }
  json res;
  res["form_method"] = fs.method;
  res["gram"] = matrix_json(fs.form->gram);
  res["convention"] = "<a, b> = <b, nu(a)>";
  res["nu_matrix"] = matrix_json(nu.matrix);
  res["nu"] = generator_images(nu);
  res["gram_relation_pairs"] = pairs;
  res["automorphism_order"] = automorphism_order(nu, opt.bound).to_string();
  res["weakly_symmetric"] = is_weakly_symmetric(nu);
  InnerResult inner = is_inner(nu, opt.seed);
  res["inner"] = to_string(inner.kind);
  res["inner_reason"] = inner.reason;
  if (inner.inner()) res["inner_witness"] = render_element(*a, inner.witness);
  res["symmetric"] = inner.inner();
  OuterOrder outer = outer_order(nu, opt.bound, opt.seed);
  res["outer_order"] = outer.order.to_string();
  res["outer_method"] = outer.method;
  res["outer_notes"] = outer.notes;
  r["results"] = res;
  r["notices"] = notices_json(*a);
  return r;
}

// ---------------------------------------------------------------- fg

json verdict_json(const FgVerdict& v) {
  json out;
  out["answer"] = to_string(v.answer);
  if (v.type) out["type"] = *v.type;
  if (v.outer) out["outer_order"] = v.outer->to_string();
  json reasons = json::array();
  for (const auto& x : v.reasons) reasons.push_back({{"check", x.check}, {"clause", x.clause}, {"outcome", x.outcome}});
  out["reasons"] = reasons;
  out["hypothesis_failures"] = v.hypothesis_failures;
  out["notices"] = v.notices;
  if (!v.blocks.empty()) {
    json blocks = json::array();
    for (const auto& b : v.blocks) blocks.push_back(verdict_json(b));
    out["blocks"] = blocks;
  }
  return out;
}

json cmd_fg(const io::LoadedAlgebra& in, const Options& opt) {
  json r = envelope("fg", in, opt);
  FgVerdict v = decide_fg(in.algebra, {opt.bound, opt.attempts, opt.seed});
  r["results"] = verdict_json(v);
  r["notices"] = notices_json(*in.algebra);
  return r;
}

// ---------------------------------------------------------------- construct

AlgebraMorphism nakayama_of(const AlgebraPtr& a, const Options& opt) {
  FrobeniusSearch fs = find_frobenius_form(a, opt.attempts, opt.seed);
  if (!fs.form) fail(ErrorCode::NotSelfInjective, "no nondegenerate associative form found (" + fs.method + ")");
  return nakayama_from_form(*fs.form);
}

// sigma: an automorphism object, or the string "nakayama".
AlgebraMorphism resolve_automorphism(const AlgebraPtr& a, const json& sigma, const Options& opt) {
  if (sigma.is_string()) {
    if (sigma.get<std::string>() != "nakayama") io::detail::malformed("automorphism must be an object or \"nakayama\"");
    return nakayama_of(a, opt);
  }
  return io::automorphism_from_json(a, sigma);
}

Algebra cmd_construct(const std::string& kind, const io::LoadedAlgebra& in, const std::optional<json>& sigma,
                             const Options& opt) {
  const AlgebraPtr& a = in.algebra;
  auto need_sigma = [&]() {
    if (!sigma) fail(ErrorCode::MalformedFile, "construction '" + kind + "' needs --sigma");
    return resolve_automorphism(a, *sigma, opt);
  };
  if (kind == "skew") {
    AlgebraMorphism s = need_sigma();
    Order o = automorphism_order(s, opt.bound);
    if (!o.is_finite()) fail(ErrorCode::InfiniteOrder, "automorphism order " + o.to_string());
    return skew_group_algebra(cyclic_action(s, o.value));
  }
  if (kind == "smash2") return smash_z2(*a);
  if (kind == "veronese2") return quasi_veronese2(*a);
  if (kind == "trivext") return *trivial_extension(a).algebra;
  if (kind == "twisted-trivext") return *twisted_trivial_extension(a, need_sigma()).algebra;
  if (kind == "beilinson") return beilinson(*a);
  if (kind == "basic") return basic_algebra(*a);
  if (kind == "double") return double_construction(*a);
  fail(ErrorCode::MalformedFile, "unknown construction '" + kind + "'");
}

// ---------------------------------------------------------------- text rendering

namespace detail {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool flat_array(const json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render(std::string& out, const json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      if (value.empty()) continue;
      out += indent + key + ":\n";
      render(out, value, indent + "  ");
    } else if (value.is_array()) {
      if (value.empty()) continue;
      if (flat_array(value)) {
        out += indent + key + ": [";
        for (std::size_t i = 0; i < value.size(); ++i) out += (i ? ", " : "") + scalar_text(value[i]);
        out += "]\n";
      } else {
        out += indent + key + ":\n";
        for (const auto& x : value) {
          if (x.is_object()) {
            std::string inner;
            render(inner, x, indent + "    ");
            out += indent + "  -" + inner.substr(indent.size() + 3);
          } else {
            out += indent + "  - " + x.dump() + "\n";
          }
        }
      }
    } else {
      out += indent + key + ": " + scalar_text(value) + "\n";
    }
  }
}

}  // namespace detail

std::string render_text(const json& report) {
  std::string out;
  detail::render(out, report, "");
  return out;
}

}  // namespace qalg::report
