#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qv/errors.hpp"
#include "qv/qvector.hpp"

namespace qv {

/*! \brief Two-stroke alphabet symbol: a subset of the four input-pair
 * values {00, 01, 10, 11} as a 4-bit unitary code.
 *
 * Bit v of the code is set iff pair value v (v = 2*x1 + x2) is in the set.
 * The printed form lists the bits for values 00, 01, 10, 11 left to right,
 * so Q = {00} prints as "1000".
 */
struct symbol2 {
  uint8_t code = 0; // low 4 bits

  constexpr bool covers(uint8_t pair_value) const {
    return ((code >> pair_value) & 1u) != 0;
  }
  constexpr bool empty() const { return (code & 0xFu) == 0; }

  friend constexpr symbol2 operator|(symbol2 a, symbol2 b) {
    return {static_cast<uint8_t>((a.code | b.code) & 0xFu)};
  }
  friend constexpr symbol2 operator&(symbol2 a, symbol2 b) {
    return {static_cast<uint8_t>((a.code & b.code) & 0xFu)};
  }
  friend constexpr symbol2 operator~(symbol2 a) {
    return {static_cast<uint8_t>(~a.code & 0xFu)};
  }
  bool operator==(const symbol2&) const = default;
};

/* Fixed name <-> code bijection of the 16 symbols. */
const std::string& symbol_name(symbol2 s);
std::optional<symbol2> symbol_from_name(const std::string& name);
std::string symbol_unitary(symbol2 s); // e.g. "1110" for V

/* Primitive symbols for the four pair values 00, 01, 10, 11. */
inline constexpr symbol2 sym_Q{0b0001};
inline constexpr symbol2 sym_E{0b0010};
inline constexpr symbol2 sym_H{0b0100};
inline constexpr symbol2 sym_J{0b1000};

/* Single-variable symbol for the trailing input of an odd-arity cube.
 * Bit 0 covers value 0, bit 1 covers value 1; printed "0", "1" or "X". */
struct symbol1 {
  uint8_t code = 0; // low 2 bits

  constexpr bool covers(uint8_t value) const {
    return ((code >> value) & 1u) != 0;
  }
  constexpr bool empty() const { return (code & 0x3u) == 0; }

  friend constexpr symbol1 operator|(symbol1 a, symbol1 b) {
    return {static_cast<uint8_t>((a.code | b.code) & 0x3u)};
  }
  friend constexpr symbol1 operator&(symbol1 a, symbol1 b) {
    return {static_cast<uint8_t>((a.code & b.code) & 0x3u)};
  }
  bool operator==(const symbol1&) const = default;
};

const std::string& symbol1_name(symbol1 s);
std::optional<symbol1> symbol1_from_name(const std::string& name);

/* One product term: consecutive input pairs in declaration order, an
 * optional trailing single-input symbol when the arity is odd, and the
 * output value. */
struct cube {
  std::vector<symbol2> pairs;
  std::optional<symbol1> tail;
  uint8_t out = 0;

  bool empty_set() const;
  bool operator==(const cube&) const = default;
};

struct coverage {
  unsigned arity = 0;
  std::vector<cube> cubes;

  bool operator==(const coverage&) const = default;
};

/* True iff the cube's value set contains the given input combination. */
bool cube_covers(const cube& c, std::span<const uint8_t> inputs);

/* One cube per truth-table row; each input pair mapped to its primitive
 * symbol (00->Q, 01->E, 10->H, 11->J). */
coverage encode_coverage(std::span<const truth_row> rows);

/* Co-edge minimization: repeatedly merge two cubes with equal output that
 * differ in exactly one symbol position, replacing them by one cube with
 * the union at that position. Deterministic first-eligible-pair order. */
coverage minimize_coverage(const coverage& c);

/* Requires every address to be covered by exactly one output value. */
qvector coverage_to_qvector(const coverage& c);

/* Text form: one cube per line, symbol names separated by spaces, then
 * "-> 0|1" (e.g. "V -> 1"). */
std::string print_coverage(const coverage& c);
coverage parse_coverage(const std::string& text);

} // namespace qv
