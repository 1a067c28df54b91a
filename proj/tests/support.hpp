#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <string>
#include <vector>

#include "qalg/corpus.hpp"

namespace qalg::testing {

inline const Field Q{FieldDescriptor::rationals()};
inline const Field F5{FieldDescriptor::prime(5)};

inline Scalar s(const char* text, const Field& f = Q) { return parse_scalar(text, f); }

inline std::size_t idx(const Algebra& a, const BasisLabel& l) {
  auto i = a.index_of(l);
  EXPECT_TRUE(i.has_value()) << l.to_string();
  return i.value_or(0);
}

inline std::size_t path(const Algebra& a, std::vector<std::string> p) { return idx(a, BasisLabel::of_path(std::move(p))); }
inline std::size_t vertex(const Algebra& a, const std::string& v) { return idx(a, BasisLabel::of_vertex(v)); }

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InternalInconsistency;
}

inline AlgebraPtr built(const Presentation& p) { return share(build_algebra(p)); }

// Linear map given by the images of the source basis vectors.
inline AlgebraMorphism linear_map(const AlgebraPtr& src, const AlgebraPtr& dst, const std::vector<Vector>& images) {
  return {src, dst, Matrix::from_columns(dst->field(), dst->dim(), images)};
}

}  // namespace qalg::testing
