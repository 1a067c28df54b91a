#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qalg {

enum class ErrorCode {
  // input syntax
  MalformedScalar,
  WrongField,
  ZeroDenominator,
  MalformedFile,
  // arithmetic
  DivisionByZero,
  ZeroInput,
  FieldMismatch,
  // presentations and algebras
  InvalidField,
  EmptyQuiver,
  InvalidQuiver,
  NonParallelRelation,
  NonHomogeneousRelation,
  InconsistentRelations,
  InvalidAlgebra,
  NotNilpotentComplement,
  NotIdempotent,
  NotBasic,
  NotSplit,
  NotGraded,
  TopDegreeTooHigh,
  RadicalSquareNotZero,
  ShapeMismatch,
  NotInvertible,
  NotAutomorphism,
  ActionMismatch,
  SocleBasisNotInBasis,
  DegenerateForm,
  DegenerateInput,
  MonomialActionRequired,
  InfiniteOrder,
  CharDividesOrder,
  CharTwo,
  Disconnected,
  LoopPresent,
  TypeInconsistent,
  NotSelfInjective,
  OutOfScope,
  // must never fire on valid input
  LiftDivergence,
  NotMultiplicative,
  VerificationFailed,
  InternalInconsistency,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedScalar: return "MalformedScalar";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::EmptyQuiver: return "EmptyQuiver";
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::NonParallelRelation: return "NonParallelRelation";
    case ErrorCode::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorCode::InconsistentRelations: return "InconsistentRelations";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NotNilpotentComplement: return "NotNilpotentComplement";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotBasic: return "NotBasic";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::TopDegreeTooHigh: return "TopDegreeTooHigh";
    case ErrorCode::RadicalSquareNotZero: return "RadicalSquareNotZero";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::ActionMismatch: return "ActionMismatch";
    case ErrorCode::SocleBasisNotInBasis: return "SocleBasisNotInBasis";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::MonomialActionRequired: return "MonomialActionRequired";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::CharDividesOrder: return "CharDividesOrder";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LoopPresent: return "LoopPresent";
    case ErrorCode::TypeInconsistent: return "TypeInconsistent";
    case ErrorCode::NotSelfInjective: return "NotSelfInjective";
    case ErrorCode::OutOfScope: return "OutOfScope";
    case ErrorCode::LiftDivergence: return "LiftDivergence";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Process exit status for the command-line tool.
//   2 = input could not be parsed, 3 = precondition violated, 4 = internal inconsistency
inline int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedScalar:
    case ErrorCode::WrongField:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::MalformedFile:
    case ErrorCode::InvalidField:
      return 2;
    case ErrorCode::LiftDivergence:
    case ErrorCode::NotMultiplicative:
    case ErrorCode::VerificationFailed:
    case ErrorCode::InternalInconsistency:
      return 4;
    default:
      return 3;
  }
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qalg
