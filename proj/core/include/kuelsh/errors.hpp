#pragma once

#include <stdexcept>
#include <string>

namespace kuelsh {

/// Machine-readable error codes surfaced by the library and mapped to CLI
/// exit codes by the tool.
enum class errc {
  // field
  not_prime,
  degree_zero,
  size_overflow,
  mixed_fields,
  division_by_zero,
  // presentation / parser
  syntax_error,
  unknown_vertex,
  non_composable_path,
  non_parallel_relation,
  non_admissible_relation,
  bad_param,
  unknown_name,
  characteristic_mismatch,
  missing_param,
  param_forbidden_value,
  // rewriting
  bound_exceeded,
  inconsistent_presentation,
  associativity_failure,
  // linear algebra
  dimension_mismatch,
  not_a_subspace,
  degenerate_form,
  bad_twist,
  // invariants
  socle_mismatch,
  not_central_form,
  not_symmetric_algebra,
  search_exhausted,
  chain_not_descending,
  not_an_ideal,
  not_central_input,
  xi_not_central,
  // hochschild
  degree_unsupported,
  oracle_too_large,
  // cli
  reproduction_failure,
};

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::degree_zero: return "DegreeZero";
    case errc::size_overflow: return "SizeOverflow";
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::non_composable_path: return "NonComposablePath";
    case errc::non_parallel_relation: return "NonParallelRelation";
    case errc::non_admissible_relation: return "NonAdmissibleRelation";
    case errc::bad_param: return "BadParam";
    case errc::unknown_name: return "UnknownName";
    case errc::characteristic_mismatch: return "CharacteristicMismatch";
    case errc::missing_param: return "MissingParam";
    case errc::param_forbidden_value: return "ParamForbiddenValue";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::inconsistent_presentation: return "InconsistentPresentation";
    case errc::associativity_failure: return "AssociativityFailure";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_subspace: return "NotASubspace";
    case errc::degenerate_form: return "DegenerateForm";
    case errc::bad_twist: return "BadTwist";
    case errc::socle_mismatch: return "SocleMismatch";
    case errc::not_central_form: return "NotCentralForm";
    case errc::not_symmetric_algebra: return "NotSymmetricAlgebra";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::chain_not_descending: return "ChainNotDescending";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_central_input: return "NotCentralInput";
    case errc::xi_not_central: return "XiNotCentral";
    case errc::degree_unsupported: return "DegreeUnsupported";
    case errc::oracle_too_large: return "OracleTooLarge";
    case errc::reproduction_failure: return "ReproductionFailure";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace kuelsh
