#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qv/errors.hpp"
#include "qv/qvector.hpp"

namespace qv {

/* One gate: output line, ordered input lines, and the q-vector whose arity
 * equals the input count. */
struct primitive {
  std::string output;
  std::vector<std::string> inputs;
  qvector q;

  // Resolved during levelization.
  uint32_t output_line = 0;
  std::vector<uint32_t> input_lines;
  unsigned rank = 0;

  bool operator==(const primitive& o) const {
    return output == o.output && inputs == o.inputs && q == o.q;
  }
};

struct diagnostic {
  std::string message;
};

/* Raw parsed netlist, before semantic validation. */
struct netlist {
  struct gate {
    std::string output;
    std::string q_literal;
    std::vector<std::string> inputs;
    size_t lineno = 0;
  };
  std::vector<std::string> inputs;
  std::vector<gate> gates;
  std::vector<std::string> outputs;
  bool outputs_declared = false;
};

/* Syntax only; throws parse_error with line/column context. */
netlist parse_netlist_text(const std::string& text);

/* Full list of semantic violations (empty when valid). */
std::vector<diagnostic> validate(const netlist& nl);

/*! \brief Validated, levelized combinational circuit.
 *
 * Lines are indexed with external inputs first (declaration order), then
 * primitive outputs in level order. Immutable after construction.
 */
class circuit {
public:
  static circuit from_netlist(const netlist& nl);

  const std::vector<std::string>& input_names() const { return inputs_; }
  const std::vector<std::string>& output_names() const { return outputs_; }
  const std::vector<primitive>& primitives() const { return prims_; }

  /* Primitive indices grouped by rank, ascending; declaration order within
   * a level. */
  const std::vector<std::vector<size_t>>& levels() const { return levels_; }

  size_t line_count() const { return line_names_.size(); }
  const std::string& line_name(uint32_t idx) const { return line_names_[idx]; }
  std::optional<uint32_t> line_index(const std::string& name) const;
  const std::vector<uint32_t>& output_lines() const { return output_lines_; }

  /* Canonical netlist text; parses back to an equal circuit. */
  std::string print() const;

  bool operator==(const circuit& o) const {
    return inputs_ == o.inputs_ && prims_ == o.prims_ && outputs_ == o.outputs_;
  }

private:
  std::vector<std::string> inputs_;
  std::vector<primitive> prims_;
  std::vector<std::string> outputs_;
  std::vector<std::vector<size_t>> levels_;
  std::vector<std::string> line_names_;
  std::vector<uint32_t> output_lines_;
};

/* Parse, validate and levelize in one step. */
circuit parse_netlist(const std::string& text);

} // namespace qv
