#include "qv/qmatrix.hpp"

#include <algorithm>
#include <array>

namespace qv {

namespace {

const std::array<std::string, 5> status_names = {"active", "faulty", "spare-free",
                                                 "spare-used", "inert"};

bool evaluable(cell_status s) {
  return s == cell_status::active || s == cell_status::spare_used;
}

} // namespace

const std::string& cell_status_name(cell_status s) {
  return status_names[static_cast<size_t>(s)];
}

qmatrix qmatrix::from_circuit(const circuit& c, unsigned spares) {
  qmatrix m;
  m.spares_ = spares;
  m.cols_ = c.levels().size();
  size_t widest = 0;
  for (const auto& level : c.levels())
    widest = std::max(widest, level.size());
  m.rows_ = widest + spares;
  m.cells_.assign(m.rows_, std::vector<std::optional<quantum>>(m.cols_));

  for (size_t col = 0; col < m.cols_; ++col) {
    const auto& level = c.levels()[col];
    for (size_t row = 0; row < level.size(); ++row) {
      const primitive& p = c.primitives()[level[row]];
      m.cells_[row][col] = quantum{p.inputs, p.q, p.output, cell_status::active};
    }
    for (size_t row = m.rows_ - spares; row < m.rows_; ++row)
      m.cells_[row][col] = quantum{};
  }

  m.input_names_ = c.input_names();
  m.output_names_ = c.output_names();
  for (uint32_t i = 0; i < c.line_count(); ++i)
    m.line_index_[c.line_name(i)] = i;
  return m;
}

const std::optional<quantum>& qmatrix::cell(size_t row, size_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_)
    throw error(error_kind::invalid_cell,
                "cell (" + std::to_string(row) + "," + std::to_string(col) +
                    ") is outside the matrix");
  return cells_[row - 1][col - 1];
}

void qmatrix::inject_fault(size_t row, size_t col) {
  const auto& c = cell(row, col);
  if (!c || c->status != cell_status::active)
    throw error(error_kind::invalid_cell,
                "cell (" + std::to_string(row) + "," + std::to_string(col) +
                    ") does not hold an active quantum");
  cells_[row - 1][col - 1]->status = cell_status::faulty;
}

qmatrix::repair_report qmatrix::repair() {
  // Feasibility first, so a failed repair leaves the matrix unchanged.
  for (size_t col = 0; col < cols_; ++col) {
    size_t faults = 0, free = 0;
    for (size_t row = 0; row < rows_; ++row) {
      if (!cells_[row][col])
        continue;
      if (cells_[row][col]->status == cell_status::faulty)
        ++faults;
      if (cells_[row][col]->status == cell_status::spare_free)
        ++free;
    }
    if (faults > free)
      throw error(error_kind::repair_exhausted,
                  "column " + std::to_string(col + 1) + " has " +
                      std::to_string(faults) + " faults but only " +
                      std::to_string(free) + " free spares");
  }

  repair_report report;
  for (size_t col = 0; col < cols_; ++col) {
    for (size_t row = 0; row < rows_; ++row) {
      auto& c = cells_[row][col];
      if (!c || c->status != cell_status::faulty)
        continue;
      for (size_t s = 0; s < rows_; ++s) {
        auto& spare = cells_[s][col];
        if (spare && spare->status == cell_status::spare_free) {
          spare->x = c->x;
          spare->q = c->q;
          spare->y = c->y;
          spare->status = cell_status::spare_used;
          c->status = cell_status::inert;
          ++report.repaired;
          ++report.spares_used;
          break;
        }
      }
    }
  }
  return report;
}

output_table qmatrix::run_automaton(const pattern_set& p) const {
  if (p.input_order.size() != input_names_.size())
    throw error(error_kind::invalid_pattern,
                "pattern header lists " + std::to_string(p.input_order.size()) +
                    " inputs, matrix has " + std::to_string(input_names_.size()));
  std::vector<uint32_t> column_lines;
  for (const auto& name : p.input_order) {
    const auto it = line_index_.find(name);
    if (it == line_index_.end() || it->second >= input_names_.size())
      throw error(error_kind::semantic_error,
                  "pattern header names unknown input line '" + name + "'");
    column_lines.push_back(it->second);
  }

  output_table t;
  t.output_names = output_names_;
  t.patterns = p.rows;

  std::vector<line_state> m(line_index_.size());
  for (size_t pat = 0; pat < p.rows.size(); ++pat) {
    const auto& row_bits = p.rows[pat];
    if (row_bits.size() != p.input_order.size())
      throw error(error_kind::invalid_pattern,
                  "pattern row " + std::to_string(pat + 1) + " has " +
                      std::to_string(row_bits.size()) + " bits");
    // Step 1: next input action.
    std::fill(m.begin(), m.end(), line_state::undefined);
    for (size_t i = 0; i < row_bits.size(); ++i)
      m[column_lines[i]] = static_cast<line_state>(row_bits[i] & 1u);

    // Steps 2-3: columns left to right, all quanta of a column in one pass.
    for (size_t col = 0; col < cols_; ++col) {
      for (size_t row = 0; row < rows_; ++row) {
        const auto& c = cells_[row][col];
        if (!c)
          continue;
        if (c->status == cell_status::faulty)
          throw error(error_kind::fault_encountered,
                      "faulty quantum at (" + std::to_string(row + 1) + "," +
                          std::to_string(col + 1) + ") reached on pattern " +
                          std::to_string(pat + 1));
        if (!evaluable(c->status))
          continue;
        bitvec addr_bits;
        for (const auto& in : c->x) {
          const uint32_t idx = line_index_.at(in);
          if (m[idx] == line_state::undefined)
            throw error(error_kind::internal_invariant,
                        "line '" + in + "' read before it was computed");
          addr_bits.push_back(static_cast<uint8_t>(m[idx]));
        }
        m[line_index_.at(c->y)] = static_cast<line_state>(c->q->bit(address_of(addr_bits)));
      }
    }

    bitvec out_row;
    for (const auto& name : output_names_)
      out_row.push_back(static_cast<uint8_t>(m[line_index_.at(name)]));
    t.rows.push_back(std::move(out_row));
  }
  return t;
}

size_t qmatrix::active_count() const {
  size_t n = 0;
  for (const auto& row : cells_)
    for (const auto& c : row)
      if (c && evaluable(c->status))
        ++n;
  return n;
}

size_t qmatrix::spare_used_count() const {
  size_t n = 0;
  for (const auto& row : cells_)
    for (const auto& c : row)
      if (c && c->status == cell_status::spare_used)
        ++n;
  return n;
}

std::string qmatrix::dump() const {
  std::string out = "matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                    " spares=" + std::to_string(spares_) + "\n";
  for (size_t row = 0; row < rows_; ++row) {
    for (size_t col = 0; col < cols_; ++col) {
      out += "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ") ";
      const auto& c = cells_[row][col];
      if (!c) {
        out += "empty\n";
        continue;
      }
      out += cell_status_name(c->status);
      if (c->q) {
        out += " " + c->y + " ";
        out += c->q->has_decimal_id() ? std::to_string(c->q->decimal_id())
                                      : "0b" + c->q->to_binary();
        for (const auto& in : c->x)
          out += " " + in;
      }
      out += '\n';
    }
  }
  return out;
}

} // namespace qv
