#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qv/circuit.hpp"
#include "qv/sim.hpp"

namespace qv {

enum class cell_status { active, faulty, spare_free, spare_used, inert };

const std::string& cell_status_name(cell_status s);

/* One matrix cell: configuration (X, Q, Y) plus its repair state. A
 * spare-free cell carries no configuration yet. */
struct quantum {
  std::vector<std::string> x;
  std::optional<qvector> q;
  std::string y;
  cell_status status = cell_status::spare_free;
};

/*! \brief Layered primitive matrix: column = level, row = slot, with the
 * last `spares` rows of every column reserved as reconfigurable spares.
 *
 * Rows and columns are 1-based in the public interface, matching the dump
 * format. Spares are column-local: a spare only repairs faults in its own
 * column.
 */
class qmatrix {
public:
  static qmatrix from_circuit(const circuit& c, unsigned spares);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  unsigned spares() const { return spares_; }

  const std::optional<quantum>& cell(size_t row, size_t col) const;

  /* Marks an active non-spare cell faulty. */
  void inject_fault(size_t row, size_t col);

  struct repair_report {
    size_t repaired = 0;
    size_t spares_used = 0;
  };

  /* Readdresses every faulty quantum onto the lowest free spare of its own
   * column; the faulty cell is kept inert for audit. Throws
   * repair_exhausted without modifying the matrix when a column has more
   * faults than free spares. */
  repair_report repair();

  /* The three-step control loop: next pattern, next column with all of its
   * active quanta, until the patterns are consumed. Output format is
   * identical to simulate_batch. */
  output_table run_automaton(const pattern_set& p) const;

  size_t active_count() const;
  size_t spare_used_count() const;

  /* "matrix <rows>x<cols> spares=<s>" followed by one line per cell. */
  std::string dump() const;

private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  unsigned spares_ = 0;
  std::vector<std::vector<std::optional<quantum>>> cells_; // [row][col], 0-based
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  std::map<std::string, uint32_t> line_index_;
};

} // namespace qv
