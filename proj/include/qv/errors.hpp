#pragma once

#include <stdexcept>
#include <string>

namespace qv {

enum class error_kind {
  invalid_arity,
  incomplete_table,
  invalid_function_number,
  enumeration_too_large,
  invalid_function_set,
  inconsistent_coverage,
  incomplete_coverage,
  parse_error,
  semantic_error,
  cyclic_circuit,
  invalid_pattern,
  internal_invariant,
  invalid_cell,
  repair_exhausted,
  fault_encountered,
  superposition_too_large,
  unsupported_arity,
  capacity_exceeded,
  emu_sequence_error,
  image_format_error,
};

class error : public std::runtime_error {
public:
  error(error_kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  error_kind kind() const { return kind_; }

private:
  error_kind kind_;
};

/* Exit-code categories used by the CLI: 2 = input could not be parsed,
 * 3 = input parsed but is semantically invalid, 4 = internal invariant. */
inline int exit_code_for(error_kind k) {
  switch (k) {
    case error_kind::parse_error:
    case error_kind::incomplete_table:
    case error_kind::invalid_pattern:
    case error_kind::image_format_error:
      return 2;
    case error_kind::internal_invariant:
    case error_kind::emu_sequence_error:
      return 4;
    default:
      return 3;
  }
}

} // namespace qv
