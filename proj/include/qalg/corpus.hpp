#pragma once

// Small named algebras used by the self-test, the test suites and as construction inputs.

#include <string>
#include <vector>

#include "qalg/structure.hpp"

namespace qalg::corpus {

inline Relation relation(const Field& f, std::vector<std::pair<std::string, std::vector<std::string>>> terms) {
  Relation r;
  for (auto& [c, path] : terms) r.terms.push_back({parse_scalar(c, f), std::move(path)});
  return r;
}

inline Presentation point(const Field& f) { return {f, Quiver({"1"}, {}), {}, 2}; }

// k[x]/(x^n)
inline Presentation truncated_polynomial(const Field& f, int n) { return {f, Quiver({"1"}, {{"x", "1", "1"}}), {}, n}; }

// one vertex, loops x, y; x^2 = y^2 = xy + q yx = 0
inline Presentation quantum_exterior(const Field& f, const std::string& q) {
  return {f,
          Quiver({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}),
          {relation(f, {{"1", {"x", "x"}}}), relation(f, {{"1", {"y", "y"}}}),
           relation(f, {{"1", {"x", "y"}}, {q, {"y", "x"}}})},
          3};
}

inline Presentation kronecker(const Field& f) {
  return {f, Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}), {}, 2};
}

inline Presentation path_a2(const Field& f) { return {f, Quiver({"1", "2"}, {{"a", "1", "2"}}), {}, 2}; }

inline Presentation two_points(const Field& f) { return {f, Quiver({"1", "2"}, {}), {}, 2}; }

// M_2(k) on matrix units E11, E12, E21, E22, concentrated in degree 0.
inline Algebra matrix_algebra2(const Field& f) {
  std::vector<BasisLabel> labels;
  for (const char* v : {"E11", "E12", "E21", "E22"}) labels.push_back(BasisLabel::of_vertex(v));
  return Algebra::from_products(
      f, labels,
      [&](std::size_t i, std::size_t j) {
        Vector out = zero_vector(f, 4);
        std::size_t r1 = i / 2, c1 = i % 2, r2 = j / 2, c2 = j % 2;
        if (c1 == r2) out[r1 * 2 + c2] = f.one();
        return out;
      },
      {0, 3}, std::vector<int>(4, 0));
}

}  // namespace qalg::corpus
