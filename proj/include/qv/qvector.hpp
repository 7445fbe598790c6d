#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qv/errors.hpp"

namespace qv {

/* Bits are stored one per byte with values 0/1. */
using bitvec = std::vector<uint8_t>;

inline constexpr unsigned max_arity = 16;

struct truth_row {
  bitvec inputs;
  uint8_t out;
};

/* Address of an input combination: the inputs read as a binary number,
 * first input most significant. */
uint32_t address_of(std::span<const uint8_t> inputs);

/*! \brief Output column of a truth table, indexed by input address.
 *
 * A k-input Boolean function stored as the 2^k output bits, where bit a is
 * the function value on the input combination whose address is a. Immutable
 * after construction.
 */
class qvector {
public:
  qvector(unsigned arity, bitvec bits);

  static qvector from_truth_table(std::span<const truth_row> rows);

  /* Inverse of decimal_id(); requires arity <= 6 so the id fits a word. */
  static qvector from_id(unsigned arity, uint64_t id);

  unsigned arity() const { return arity_; }
  uint32_t size() const { return static_cast<uint32_t>(bits_.size()); }
  uint8_t bit(uint32_t addr) const { return bits_[addr]; }
  const bitvec& bits() const { return bits_; }

  uint8_t evaluate(std::span<const uint8_t> inputs) const;

  /* The bits read as a binary numeral, address 0 most significant.
   * Defined for arity <= 6 (id of a wider vector does not fit in 64 bits). */
  uint64_t decimal_id() const;
  bool has_decimal_id() const { return arity_ <= 6; }

  /* Binary form, address 0 first; groups of 4 separated by spaces when
   * group4 is set (e.g. "1111 1111 1111 0001"). */
  std::string to_binary(bool group4 = false) const;

  bool operator==(const qvector&) const = default;

private:
  unsigned arity_;
  bitvec bits_;
};

/* All 2^(2^arity) functions in increasing id order; arity <= 4. */
std::vector<qvector> enumerate_functions(unsigned arity);

/* Accepts "0b1110" (arity from length) or a decimal id with explicit
 * arity "14:2". When arity_hint is given a bare decimal id is accepted
 * and a binary literal must match the hint. */
qvector parse_qvector(const std::string& literal,
                      std::optional<unsigned> arity_hint = std::nullopt);

} // namespace qv
