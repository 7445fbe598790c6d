#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qv/circuit.hpp"
#include "qv/sim.hpp"

namespace qv {

/*! \brief Bit-exact contents of the emulator's five memories.
 *
 * x1/x2/out hold line numbers (depth = element capacity, width = line
 * address bits); q is 1 bit wide with address {element number, 2-bit input
 * pair}; m is the 1-bit modeling-vector memory (depth = line capacity).
 * Defaults reproduce the paper instance: 8 elements, 16 lines, 32 q bits.
 */
struct memory_images {
  unsigned elem_capacity = 8;
  unsigned line_capacity = 16;

  std::vector<uint16_t> x1, x2, out; // element -> line number
  bitvec q;                          // elem_capacity * 4 bits

  unsigned input_count = 0;
  unsigned prim_count = 0;
  std::vector<std::string> line_names;
  std::vector<std::string> output_names;

  unsigned line_addr_width() const;
  bool operator==(const memory_images&) const = default;
};

/* Transcribes a circuit of 2-input primitives into memory images; lines
 * are numbered inputs first, then primitive outputs in level order, and
 * elements are stored in level order. */
memory_images assemble_images(const circuit& c, unsigned elem_capacity = 8,
                              unsigned line_capacity = 16);

struct emu_result {
  output_table table;
  uint64_t cycles = 0;
};

/* The two-reads-then-write loop: per pattern, one cycle per input load,
 * then per element cycle 1 reads m[x1], cycle 2 reads m[x2], cycle 3 reads
 * q at {element, pair} and writes m[out]. */
emu_result run_emulator(const memory_images& img, const pattern_set& p);

/* Image files x1.mem, x2.mem, out.mem, q.mem plus meta.txt, one directory
 * per image set; bit-exact round trip. */
void dump_images(const memory_images& img, const std::string& directory);
memory_images load_images(const std::string& directory);

} // namespace qv
