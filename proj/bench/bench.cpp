// Compares the serial reference kernels against the OpenMP ones on a
// randomly generated circuit. Build and run manually:
//   cmake --build build --target qv_bench && ./build/bench/qv_bench

#include <chrono>
#include <iostream>
#include <random>

#include "../tests/gen.hpp"
#include "qv/sim.hpp"
#include "qv/synth.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
  unsigned inputs = 14;
  unsigned gates = 600;
  if (argc > 1)
    inputs = static_cast<unsigned>(std::stoul(argv[1]));
  if (argc > 2)
    gates = static_cast<unsigned>(std::stoul(argv[2]));

  std::mt19937 rng(12345);
  const auto c = qv_test::random_circuit(rng, inputs, gates);
  const auto out = c.output_names().front();
  std::cout << "circuit: " << inputs << " inputs, " << gates << " gates, "
            << c.levels().size() << " levels\n";

  auto t0 = clock_type::now();
  const auto serial = qv::superpose_serial(c, out);
  const double ts = seconds_since(t0);

  t0 = clock_type::now();
  const auto parallel = qv::superpose(c, out);
  const double tp = seconds_since(t0);

  if (serial != parallel) {
    std::cerr << "MISMATCH between serial and parallel superposition\n";
    return 1;
  }
  std::cout << "superpose   serial " << ts << " s, openmp " << tp << " s, speedup "
            << ts / tp << "x\n";

  const auto patterns = qv::exhaustive_patterns(c);
  t0 = clock_type::now();
  const auto batch_serial = qv::simulate_batch(c, patterns);
  const double bs = seconds_since(t0);

  t0 = clock_type::now();
  const auto batch_parallel = qv::simulate_batch_parallel(c, patterns);
  const double bp = seconds_since(t0);

  if (batch_serial != batch_parallel) {
    std::cerr << "MISMATCH between serial and parallel batch simulation\n";
    return 1;
  }
  std::cout << "batch sim   serial " << bs << " s, openmp " << bp << " s, speedup "
            << bs / bp << "x\n";
  return 0;
}
