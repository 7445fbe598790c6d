#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qv/circuit.hpp"

namespace qv {

enum class line_state : uint8_t { s0 = 0, s1 = 1, undefined = 2 };

/* Per-line state of a circuit under one input pattern. Indexed by the
 * circuit's line numbering. */
struct modeling_vector {
  std::vector<line_state> states;

  uint8_t bit(uint32_t line) const {
    return static_cast<uint8_t>(states[line]);
  }
};

struct pattern_set {
  std::vector<std::string> input_order;
  std::vector<bitvec> rows;
};

/* Pattern file: "patterns <in1> <in2> ...", then one row of 0/1 characters
 * per pattern. */
pattern_set parse_patterns(const std::string& text);
std::string print_patterns(const pattern_set& p);

struct output_table {
  std::vector<std::string> output_names;
  std::vector<bitvec> patterns; // input bits per row
  std::vector<bitvec> rows;     // output bits per row

  bool operator==(const output_table&) const = default;
};

/* "<pattern> : <out1>=<bit> ...", one line per pattern. */
std::string print_output_table(const output_table& t);

struct sim_stats {
  uint64_t q_reads = 0;
};

/* One levelized pass: set the inputs, evaluate every primitive exactly once
 * with a single q-vector read at the address formed from its input states. */
modeling_vector simulate_pattern(const circuit& c, std::span<const uint8_t> inputs,
                                 sim_stats* stats = nullptr);

/* Serial reference: one independent simulate_pattern per row. */
output_table simulate_batch(const circuit& c, const pattern_set& p,
                            sim_stats* stats = nullptr);

/* OpenMP kernel, parallel over patterns; bit-identical to simulate_batch. */
output_table simulate_batch_parallel(const circuit& c, const pattern_set& p,
                                     sim_stats* stats = nullptr);

/* All 2^n input patterns of the circuit, in address order. */
pattern_set exhaustive_patterns(const circuit& c);

/* Reusable evaluation scratch for tight loops (one per thread); avoids a
 * modeling-vector allocation per pattern. Same semantics as
 * simulate_pattern. */
class sim_workspace {
public:
  explicit sim_workspace(const circuit& c);

  uint8_t evaluate_line(std::span<const uint8_t> inputs, uint32_t line);
  uint64_t q_reads() const { return q_reads_; }

private:
  const circuit* c_;
  modeling_vector m_;
  std::vector<uint32_t> input_lines_;
  uint64_t q_reads_ = 0;
};

} // namespace qv
