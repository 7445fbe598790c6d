// Acceptance suite: runs every criterion and prints one pass/fail line each.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "oracle.hpp"
#include "qv/alphabet.hpp"
#include "qv/function_set.hpp"
#include "qv/hwemu.hpp"
#include "qv/qmatrix.hpp"
#include "qv/qvector.hpp"
#include "qv/sim.hpp"
#include "qv/synth.hpp"

using namespace qv;

namespace {

const char* fig2_text = R"(inputs 1 2 3 4 5 6
gate A 1  1 2
gate 7 1  3 4
gate 8 7  A 7
gate 9 7  7 5
gate B 14 8 6
gate C 14 6 9
outputs B C
)";

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond)
    throw check_failure(what);
}

// 1. Function numbering reproduces the f = 0..15 table.
void criterion_function_numbering() {
  const std::vector<std::string> table = {
      "0000", "0001", "0010", "0011", "0100", "0101", "0110", "0111",
      "1000", "1001", "1010", "1011", "1100", "1101", "1110", "1111"};
  for (uint64_t f = 0; f < 16; ++f) {
    const auto q = qvector::from_id(2, f);
    require(q.to_binary() == table[f], "function " + std::to_string(f));
    require(q.decimal_id() == f, "id round trip " + std::to_string(f));
  }
  require(qvector::from_id(2, 1).to_binary() == "0001", "AND = 1");
  require(qvector::from_id(2, 6).to_binary() == "0110", "XOR = 6");
  require(qvector::from_id(2, 7).to_binary() == "0111", "OR = 7");
  require(qvector::from_id(2, 14).to_binary() == "1110", "NAND = 14");
}

// 2. All 16 alphabet codes; 256 pairwise unions/intersections.
void criterion_alphabet() {
  const std::vector<std::pair<std::string, std::string>> table = {
      {"∅", "0000"}, {"Q", "1000"}, {"E", "0100"}, {"H", "0010"},
      {"J", "0001"}, {"A", "1100"}, {"B", "0011"}, {"O", "1010"},
      {"I", "0101"}, {"S", "1001"}, {"P", "0110"}, {"C", "0111"},
      {"F", "1011"}, {"L", "1101"}, {"V", "1110"}, {"Y", "1111"}};
  require(table.size() == 16, "16 symbols");
  for (const auto& [name, unitary] : table) {
    const auto s = symbol_from_name(name);
    require(s && symbol_unitary(*s) == unitary, "symbol " + name);
  }
  for (uint8_t a = 0; a < 16; ++a)
    for (uint8_t b = 0; b < 16; ++b)
      for (uint8_t v = 0; v < 4; ++v) {
        const symbol2 sa{a}, sb{b};
        require((sa | sb).covers(v) == (sa.covers(v) || sb.covers(v)), "union");
        require((sa & sb).covers(v) == (sa.covers(v) && sb.covers(v)), "intersect");
      }
}

// 3. NAND table -> {V->1, J->0} -> q-vector 1110.
void criterion_minimization() {
  const std::vector<truth_row> nand = {
      {{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}};
  const auto min = minimize_coverage(encode_coverage(nand));
  require(print_coverage(min) == "V -> 1\nJ -> 0\n", "minimized listing");
  require(coverage_to_qvector(min).to_binary() == "1110", "collapsed vector");
}

// 4. 100 random circuits: superpose == exhaustive simulation at every address.
void criterion_superposition() {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 2 + rng() % 7;  // <= 8 inputs
    const unsigned g = 1 + rng() % 20; // <= 20 primitives
    const auto c = qv_test::random_circuit(rng, n, g);
    const auto p = exhaustive_patterns(c);
    for (const auto& out : c.output_names()) {
      const auto q = superpose(c, out);
      const uint32_t line = *c.line_index(out);
      for (uint32_t a = 0; a < q.size(); ++a)
        require(q.bit(a) == simulate_pattern(c, p.rows[a]).bit(line),
                "trial " + std::to_string(trial) + " line " + out +
                    " address " + std::to_string(a));
    }
  }
}

// 5. Simulator, matrix automaton, emulator and oracle agree on fig2.
void criterion_triple_equivalence() {
  const auto c = parse_netlist(fig2_text);
  const auto p = exhaustive_patterns(c);
  require(p.rows.size() == 64, "64 patterns");
  const auto golden = qv_test::oracle_table(c, p);
  require(simulate_batch(c, p) == golden, "simulator vs oracle");
  require(qmatrix::from_circuit(c, 1).run_automaton(p) == golden,
          "automaton vs oracle");
  require(run_emulator(assemble_images(c), p).table == golden,
          "emulator vs oracle");
}

// 6. Single-fault repair at all 6 cells, triple fault, and exhaustion.
void criterion_repair() {
  const auto c = parse_netlist(fig2_text);
  const auto p = exhaustive_patterns(c);
  const auto golden = simulate_batch(c, p);
  for (size_t col = 1; col <= 3; ++col)
    for (size_t row = 1; row <= 2; ++row) {
      auto m = qmatrix::from_circuit(c, 1);
      m.inject_fault(row, col);
      m.repair();
      require(m.run_automaton(p) == golden,
              "single fault (" + std::to_string(row) + "," +
                  std::to_string(col) + ")");
    }
  auto m3 = qmatrix::from_circuit(c, 1);
  m3.inject_fault(1, 1);
  m3.inject_fault(2, 2);
  m3.inject_fault(1, 3);
  require(m3.repair().repaired == 3, "three faults repaired");
  require(m3.run_automaton(p) == golden, "three-fault table");

  auto m2 = qmatrix::from_circuit(c, 1);
  m2.inject_fault(1, 2);
  m2.inject_fault(2, 2);
  bool exhausted = false;
  try {
    m2.repair();
  } catch (const error& e) {
    exhausted = e.kind() == error_kind::repair_exhausted;
  }
  require(exhausted, "two faults in one column exhaust the spare");
}

// 7. Exactly #primitives q-vector reads per pattern; 1 for the collapsed form.
void criterion_single_access() {
  const auto c = parse_netlist(fig2_text);
  const auto p = exhaustive_patterns(c);
  sim_stats stats;
  simulate_batch(c, p, &stats);
  require(stats.q_reads == 64 * 6, "6 reads per pattern");

  const auto q = superpose(c, "B");
  const auto collapsed =
      parse_netlist("inputs 1 2 3 4 5 6\ngate B 0b" + q.to_binary() + " 1 2 3 4 5 6\n");
  sim_stats one;
  simulate_pattern(collapsed, bitvec{1, 1, 1, 1, 1, 0}, &one);
  require(one.q_reads == 1, "collapsed form reads once");
}

// 8. Fig2, 64 patterns -> 64 * (6 + 18) = 1536 cycles.
void criterion_cycle_formula() {
  const auto c = parse_netlist(fig2_text);
  const auto res = run_emulator(assemble_images(c), exhaustive_patterns(c));
  require(res.cycles == 1536, "cycle count " + std::to_string(res.cycles));
}

// 9. Netlist, coverage and image round trips on 50 random instances.
void criterion_round_trips() {
  std::mt19937 rng(9001);
  const auto dir =
      std::filesystem::temp_directory_path() / "qv_acceptance_images";
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = qv_test::random_circuit(rng, 2 + rng() % 5, 1 + rng() % 6,
                                           /*two_input_only=*/true);
    require(parse_netlist(c.print()) == c, "netlist round trip");

    const auto rows = qv_test::random_table(rng, 1 + rng() % 4);
    const auto cov = minimize_coverage(encode_coverage(rows));
    require(parse_coverage(print_coverage(cov)) == cov, "coverage round trip");

    const auto img = assemble_images(c, 16, 32);
    std::filesystem::remove_all(dir);
    dump_images(img, dir.string());
    require(load_images(dir.string()) == img, "image round trip");
  }
  std::filesystem::remove_all(dir);
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"1. function numbering f = 0..15", criterion_function_numbering},
      {"2. alphabet codes and set algebra", criterion_alphabet},
      {"3. NAND minimization golden case", criterion_minimization},
      {"4. superposition soundness (100 random circuits)", criterion_superposition},
      {"5. triple equivalence on fig2", criterion_triple_equivalence},
      {"6. repair: single, triple, exhausted", criterion_repair},
      {"7. single-access invariant", criterion_single_access},
      {"8. emulator cycle formula (1536)", criterion_cycle_formula},
      {"9. format round trips (50 instances)", criterion_round_trips},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      fn();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << ms << " ms)";
    if (!ok)
      std::cout << "  -- " << detail;
    std::cout << "\n";
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
