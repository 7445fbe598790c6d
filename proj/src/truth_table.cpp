#include "qv/truth_table.hpp"

#include <sstream>

namespace qv {

std::vector<truth_row> parse_truth_table(const std::string& text) {
  std::vector<truth_row> rows;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string in_tok, out_tok, extra;
    if (!(ls >> in_tok))
      continue;
    if (!(ls >> out_tok) || (ls >> extra))
      throw error(error_kind::parse_error,
                  "truth table line " + std::to_string(lineno) +
                      ": expected '<inputs> <output>'");
    truth_row row;
    for (char c : in_tok) {
      if (c != '0' && c != '1')
        throw error(error_kind::parse_error,
                    "truth table line " + std::to_string(lineno) +
                        ": bad input bits '" + in_tok + "'");
      row.inputs.push_back(static_cast<uint8_t>(c - '0'));
    }
    if (out_tok != "0" && out_tok != "1")
      throw error(error_kind::parse_error,
                  "truth table line " + std::to_string(lineno) +
                      ": output must be 0 or 1");
    row.out = static_cast<uint8_t>(out_tok == "1");
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw error(error_kind::parse_error, "truth table is empty");
  return rows;
}

std::string print_truth_table(std::span<const truth_row> rows) {
  std::string out;
  for (const auto& row : rows) {
    for (uint8_t b : row.inputs)
      out += static_cast<char>('0' + b);
    out += ' ';
    out += static_cast<char>('0' + row.out);
    out += '\n';
  }
  return out;
}

} // namespace qv
