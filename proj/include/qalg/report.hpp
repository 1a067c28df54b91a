#pragma once

// Command implementations shared by the CLI and the tests. Each returns a JSON report whose content
// depends only on the input bytes, the seed and the options.

#include <optional>
#include <string>

#include "qalg/classify.hpp"
#include "qalg/io.hpp"

namespace qalg::report {

using json = io::json;

inline constexpr const char* kVersion = "0.1.0";

inline constexpr const char* kConstructKinds[] = {"skew",   "smash2",    "veronese2", "trivext",
                                                  "twisted-trivext", "beilinson", "basic", "double"};

struct Options {
  std::uint64_t bound = 64;
  std::size_t attempts = 64;
  std::uint64_t seed = 0;
};

std::string render_element(const Algebra& a, const Vector& v);
json matrix_json(const Matrix& m);
json scalars_json(const std::vector<Scalar>& xs);
// Images of the degree-one basis elements (or the single arrows when ungraded).
json generator_images(const AlgebraMorphism& f);
json graph_type_json(const GraphType& t);
json verdict_json(const FgVerdict& v);

json cmd_info(const io::LoadedAlgebra& in, const Options& opt = {});
json cmd_type(const io::LoadedAlgebra& in, const Options& opt = {});
json cmd_nakayama(const io::LoadedAlgebra& in, const Options& opt = {});
json cmd_fg(const io::LoadedAlgebra& in, const Options& opt = {});

AlgebraMorphism nakayama_of(const AlgebraPtr& a, const Options& opt);
// sigma: an automorphism object, or the string "nakayama".
AlgebraMorphism resolve_automorphism(const AlgebraPtr& a, const json& sigma, const Options& opt);
Algebra cmd_construct(const std::string& kind, const io::LoadedAlgebra& in, const std::optional<json>& sigma,
                      const Options& opt = {});

std::string render_text(const json& report);

}  // namespace qalg::report
