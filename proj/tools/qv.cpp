#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qv/alphabet.hpp"
#include "qv/circuit.hpp"
#include "qv/hwemu.hpp"
#include "qv/qmatrix.hpp"
#include "qv/qvector.hpp"
#include "qv/sim.hpp"
#include "qv/synth.hpp"
#include "qv/truth_table.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw qv::error(qv::error_kind::parse_error, "cannot read file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string format_qvector(const qv::qvector& q) {
  std::string s = q.to_binary(true);
  if (q.has_decimal_id())
    s += " (id " + std::to_string(q.decimal_id()) + ")";
  return s;
}

std::string counted(size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

unsigned next_pow2(size_t n) {
  unsigned p = 1;
  while (p < n)
    p *= 2;
  return p;
}

struct fault_loc {
  size_t row = 0, col = 0;
};

fault_loc parse_fault(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--fault", "expected R,C");
  fault_loc f;
  try {
    f.row = std::stoul(s.substr(0, comma));
    f.col = std::stoul(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--fault", "expected R,C");
  }
  return f;
}

int run(int argc, char** argv) {
  CLI::App app{"Q-vector logic toolkit"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "Q-vector from a truth table or id");
  unsigned enc_arity = 0;
  std::string enc_table;
  uint64_t enc_id = 0;
  bool enc_has_id = false;
  encode->add_option("--arity", enc_arity, "function arity");
  encode->add_option("--table", enc_table, "truth table file");
  encode->add_option("--id", enc_id, "function number")->each([&](const std::string&) {
    enc_has_id = true;
  });

  // min
  auto* min = app.add_subcommand("min", "minimized cube coverage of a truth table");
  std::string min_table;
  min->add_option("--table", min_table, "truth table file")->required();

  // sim
  auto* sim = app.add_subcommand("sim", "levelized simulation of a netlist");
  std::string sim_netlist, sim_patterns;
  bool sim_dump_m = false;
  sim->add_option("--netlist", sim_netlist, "netlist file")->required();
  sim->add_option("--patterns", sim_patterns, "pattern file")->required();
  sim->add_flag("--dump-m", sim_dump_m, "print the full modeling vector per pattern");

  // synth
  auto* synth = app.add_subcommand("synth", "superposed Q-vector of a circuit line");
  std::string synth_netlist, synth_out;
  synth->add_option("--netlist", synth_netlist, "netlist file")->required();
  synth->add_option("--out", synth_out, "line to superpose")->required();

  // matrix
  auto* matrix = app.add_subcommand("matrix", "quantum matrix automaton with repair");
  std::string mat_netlist, mat_patterns;
  unsigned mat_spares = 1;
  std::vector<std::string> mat_faults;
  bool mat_repair = false, mat_dump = false;
  matrix->add_option("--netlist", mat_netlist, "netlist file")->required();
  matrix->add_option("--patterns", mat_patterns, "pattern file")->required();
  matrix->add_option("--spares", mat_spares, "spare rows per column");
  matrix->add_option("--fault", mat_faults, "inject a fault at cell R,C (1-based)");
  matrix->add_flag("--repair", mat_repair, "repair faults before running");
  matrix->add_flag("--dump", mat_dump, "print the matrix before running");

  // emu
  auto* emu = app.add_subcommand("emu", "memory-image hardware emulator");
  std::string emu_netlist, emu_patterns, emu_dump_dir;
  emu->add_option("--netlist", emu_netlist, "netlist file")->required();
  emu->add_option("--patterns", emu_patterns, "pattern file")->required();
  emu->add_option("--dump-images", emu_dump_dir, "write memory images to a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (encode->parsed()) {
    if (enc_table.empty() == !enc_has_id) {
      std::cerr << "encode: exactly one of --table and --id is required\n";
      return 1;
    }
    qv::qvector q = [&] {
      if (enc_has_id) {
        if (enc_arity == 0) {
          throw qv::error(qv::error_kind::invalid_arity,
                          "encode --id needs --arity");
        }
        return qv::qvector::from_id(enc_arity, enc_id);
      }
      auto rows = qv::parse_truth_table(read_file(enc_table));
      auto v = qv::qvector::from_truth_table(rows);
      if (enc_arity != 0 && v.arity() != enc_arity)
        throw qv::error(qv::error_kind::invalid_arity,
                        "table arity " + std::to_string(v.arity()) +
                            " does not match --arity " + std::to_string(enc_arity));
      return v;
    }();
    std::cout << format_qvector(q) << "\n";
    return 0;
  }

  if (min->parsed()) {
    auto rows = qv::parse_truth_table(read_file(min_table));
    auto cov = qv::minimize_coverage(qv::encode_coverage(rows));
    std::cout << qv::print_coverage(cov);
    return 0;
  }

  if (sim->parsed()) {
    const auto c = qv::parse_netlist(read_file(sim_netlist));
    const auto p = qv::parse_patterns(read_file(sim_patterns));
    if (!sim_dump_m) {
      std::cout << qv::print_output_table(qv::simulate_batch(c, p));
      return 0;
    }
    // Re-run each pattern individually so M can be shown alongside the row.
    const auto table = qv::simulate_batch(c, p);
    std::vector<uint32_t> cols;
    for (const auto& name : p.input_order)
      cols.push_back(*c.line_index(name));
    for (size_t r = 0; r < table.rows.size(); ++r) {
      qv::bitvec in(c.input_names().size());
      for (size_t i = 0; i < cols.size(); ++i)
        in[cols[i]] = p.rows[r][i];
      const auto m = qv::simulate_pattern(c, in);
      qv::output_table one{table.output_names, {table.patterns[r]}, {table.rows[r]}};
      std::cout << qv::print_output_table(one);
      std::cout << "  M:";
      for (uint32_t l = 0; l < c.line_count(); ++l)
        std::cout << " " << c.line_name(l) << "=" << int(m.bit(l));
      std::cout << "\n";
    }
    return 0;
  }

  if (synth->parsed()) {
    const auto c = qv::parse_netlist(read_file(synth_netlist));
    std::cout << format_qvector(qv::superpose(c, synth_out)) << "\n";
    return 0;
  }

  if (matrix->parsed()) {
    const auto c = qv::parse_netlist(read_file(mat_netlist));
    const auto p = qv::parse_patterns(read_file(mat_patterns));
    auto m = qv::qmatrix::from_circuit(c, mat_spares);
    for (const auto& f : mat_faults) {
      const auto loc = parse_fault(f);
      m.inject_fault(loc.row, loc.col);
    }
    if (mat_repair) {
      const auto report = m.repair();
      std::cout << counted(report.repaired, "fault") << " repaired, "
                << counted(report.spares_used, "spare") << " used\n";
    }
    if (mat_dump)
      std::cout << m.dump();
    std::cout << qv::print_output_table(m.run_automaton(p));
    return 0;
  }

  if (emu->parsed()) {
    const auto c = qv::parse_netlist(read_file(emu_netlist));
    const auto p = qv::parse_patterns(read_file(emu_patterns));
    const unsigned elems = std::max(8u, next_pow2(c.primitives().size()));
    const unsigned lines = std::max(16u, next_pow2(c.line_count()));
    const auto img = qv::assemble_images(c, elems, lines);
    if (!emu_dump_dir.empty())
      qv::dump_images(img, emu_dump_dir);
    const auto res = qv::run_emulator(img, p);
    std::cout << qv::print_output_table(res.table);
    std::cout << "cycles: " << res.cycles << "\n";
    return 0;
  }

  return 1;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qv::exit_code_for(e.kind());
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
