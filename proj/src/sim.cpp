#include "qv/sim.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qv {

namespace {

/* Maps pattern columns onto circuit input lines; throws when the header
 * does not name exactly the circuit's inputs. */
std::vector<uint32_t> column_lines(const circuit& c, const pattern_set& p) {
  if (p.input_order.size() != c.input_names().size())
    throw error(error_kind::invalid_pattern,
                "pattern header lists " + std::to_string(p.input_order.size()) +
                    " inputs, circuit has " +
                    std::to_string(c.input_names().size()));
  std::vector<uint32_t> lines;
  std::vector<uint8_t> used(c.input_names().size(), 0);
  for (const auto& name : p.input_order) {
    const auto idx = c.line_index(name);
    if (!idx || *idx >= c.input_names().size())
      throw error(error_kind::semantic_error,
                  "pattern header names unknown input line '" + name + "'");
    if (used[*idx])
      throw error(error_kind::semantic_error,
                  "pattern header repeats input line '" + name + "'");
    used[*idx] = 1;
    lines.push_back(*idx);
  }
  return lines;
}

void simulate_into(const circuit& c, std::span<const uint8_t> inputs,
                   std::span<const uint32_t> input_lines, modeling_vector& m,
                   uint64_t& q_reads) {
  std::fill(m.states.begin(), m.states.end(), line_state::undefined);
  for (size_t i = 0; i < inputs.size(); ++i)
    m.states[input_lines[i]] = static_cast<line_state>(inputs[i] & 1u);

  bitvec addr_bits;
  for (const auto& level : c.levels()) {
    for (size_t g : level) {
      const primitive& p = c.primitives()[g];
      addr_bits.clear();
      for (uint32_t in : p.input_lines) {
        if (m.states[in] == line_state::undefined)
          throw error(error_kind::internal_invariant,
                      "line '" + c.line_name(in) +
                          "' read before it was computed");
        addr_bits.push_back(static_cast<uint8_t>(m.states[in]));
      }
      // The single table access per primitive.
      m.states[p.output_line] = static_cast<line_state>(p.q.bit(address_of(addr_bits)));
      ++q_reads;
    }
  }
}

std::vector<uint32_t> identity_input_lines(const circuit& c) {
  std::vector<uint32_t> lines(c.input_names().size());
  for (uint32_t i = 0; i < lines.size(); ++i)
    lines[i] = i;
  return lines;
}

void check_rows(const pattern_set& p) {
  for (size_t r = 0; r < p.rows.size(); ++r)
    if (p.rows[r].size() != p.input_order.size())
      throw error(error_kind::invalid_pattern,
                  "pattern row " + std::to_string(r + 1) + " has " +
                      std::to_string(p.rows[r].size()) + " bits, expected " +
                      std::to_string(p.input_order.size()));
}

} // namespace

pattern_set parse_patterns(const std::string& text) {
  pattern_set p;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok)
      tokens.push_back(tok);
    if (tokens.empty())
      continue;
    if (!header) {
      if (tokens[0] != "patterns" || tokens.size() < 2)
        throw error(error_kind::parse_error,
                    "pattern file line " + std::to_string(lineno) +
                        ": expected 'patterns <in1> <in2> ...'");
      p.input_order.assign(tokens.begin() + 1, tokens.end());
      header = true;
      continue;
    }
    if (tokens.size() != 1)
      throw error(error_kind::parse_error,
                  "pattern file line " + std::to_string(lineno) +
                      ": expected one run of 0/1 characters");
    bitvec row;
    for (char ch : tokens[0]) {
      if (ch != '0' && ch != '1')
        throw error(error_kind::parse_error,
                    "pattern file line " + std::to_string(lineno) +
                        ": bad character '" + std::string(1, ch) + "'");
      row.push_back(static_cast<uint8_t>(ch - '0'));
    }
    if (row.size() != p.input_order.size())
      throw error(error_kind::invalid_pattern,
                  "pattern file line " + std::to_string(lineno) + ": " +
                      std::to_string(row.size()) + " bits for " +
                      std::to_string(p.input_order.size()) + " inputs");
    p.rows.push_back(std::move(row));
  }
  if (!header)
    throw error(error_kind::parse_error, "pattern file is empty");
  return p;
}

std::string print_patterns(const pattern_set& p) {
  std::string out = "patterns";
  for (const auto& in : p.input_order)
    out += " " + in;
  out += '\n';
  for (const auto& row : p.rows) {
    for (uint8_t b : row)
      out += static_cast<char>('0' + b);
    out += '\n';
  }
  return out;
}

std::string print_output_table(const output_table& t) {
  std::string out;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    for (uint8_t b : t.patterns[r])
      out += static_cast<char>('0' + b);
    out += " :";
    for (size_t o = 0; o < t.output_names.size(); ++o) {
      out += " " + t.output_names[o] + "=";
      out += static_cast<char>('0' + t.rows[r][o]);
    }
    out += '\n';
  }
  return out;
}

modeling_vector simulate_pattern(const circuit& c, std::span<const uint8_t> inputs,
                                 sim_stats* stats) {
  if (inputs.size() != c.input_names().size())
    throw error(error_kind::invalid_pattern,
                "pattern has " + std::to_string(inputs.size()) +
                    " bits, circuit has " +
                    std::to_string(c.input_names().size()) + " inputs");
  modeling_vector m;
  m.states.resize(c.line_count());
  uint64_t reads = 0;
  simulate_into(c, inputs, identity_input_lines(c), m, reads);
  if (stats)
    stats->q_reads += reads;
  return m;
}

output_table simulate_batch(const circuit& c, const pattern_set& p,
                            sim_stats* stats) {
  check_rows(p);
  const auto lines = column_lines(c, p);
  output_table t;
  t.output_names = c.output_names();
  t.patterns = p.rows;
  t.rows.resize(p.rows.size());

  modeling_vector m;
  m.states.resize(c.line_count());
  uint64_t reads = 0;
  for (size_t r = 0; r < p.rows.size(); ++r) {
    simulate_into(c, p.rows[r], lines, m, reads);
    bitvec row;
    for (uint32_t out : c.output_lines())
      row.push_back(m.bit(out));
    t.rows[r] = std::move(row);
  }
  if (stats)
    stats->q_reads += reads;
  return t;
}

output_table simulate_batch_parallel(const circuit& c, const pattern_set& p,
                                     sim_stats* stats) {
  check_rows(p);
  const auto lines = column_lines(c, p);
  output_table t;
  t.output_names = c.output_names();
  t.patterns = p.rows;
  t.rows.resize(p.rows.size());

  const auto n = static_cast<int64_t>(p.rows.size());
  uint64_t reads = 0;
#pragma omp parallel reduction(+ : reads)
  {
    modeling_vector m;
    m.states.resize(c.line_count());
#pragma omp for schedule(static)
    for (int64_t r = 0; r < n; ++r) {
      simulate_into(c, p.rows[static_cast<size_t>(r)], lines, m, reads);
      bitvec row;
      for (uint32_t out : c.output_lines())
        row.push_back(m.bit(out));
      t.rows[static_cast<size_t>(r)] = std::move(row);
    }
  }
  if (stats)
    stats->q_reads += reads;
  return t;
}

sim_workspace::sim_workspace(const circuit& c)
    : c_(&c), input_lines_(identity_input_lines(c)) {
  m_.states.resize(c.line_count());
}

uint8_t sim_workspace::evaluate_line(std::span<const uint8_t> inputs, uint32_t line) {
  if (inputs.size() != c_->input_names().size())
    throw error(error_kind::invalid_pattern,
                "pattern has " + std::to_string(inputs.size()) +
                    " bits, circuit has " +
                    std::to_string(c_->input_names().size()) + " inputs");
  simulate_into(*c_, inputs, input_lines_, m_, q_reads_);
  return m_.bit(line);
}

pattern_set exhaustive_patterns(const circuit& c) {
  const size_t n = c.input_names().size();
  if (n > max_arity)
    throw error(error_kind::invalid_pattern,
                "too many inputs for exhaustive patterns: " + std::to_string(n));
  pattern_set p;
  p.input_order = c.input_names();
  const uint32_t count = 1u << n;
  for (uint32_t a = 0; a < count; ++a) {
    bitvec row(n);
    for (size_t i = 0; i < n; ++i)
      row[i] = static_cast<uint8_t>((a >> (n - 1 - i)) & 1u);
    p.rows.push_back(std::move(row));
  }
  return p;
}

} // namespace qv
