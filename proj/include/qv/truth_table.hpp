#pragma once

#include <string>
#include <vector>

#include "qv/qvector.hpp"

namespace qv {

/* Truth-table text: one row per line, "<inputbits> <outputbit>", e.g.
 * "00 1". '#' starts a comment. */
std::vector<truth_row> parse_truth_table(const std::string& text);

std::string print_truth_table(std::span<const truth_row> rows);

} // namespace qv
