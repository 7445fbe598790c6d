#include "qv/synth.hpp"

namespace qv {

namespace {

struct superpose_args {
  uint32_t line;
  unsigned arity;
};

superpose_args prepare(const circuit& c, const std::string& out) {
  const auto line = c.line_index(out);
  if (!line)
    throw error(error_kind::semantic_error,
                "superpose: unknown line '" + out + "'");
  const size_t n = c.input_names().size();
  if (n > max_arity)
    throw error(error_kind::superposition_too_large,
                "superpose: " + std::to_string(n) +
                    " inputs exceed the arity guard of 16");
  return {*line, static_cast<unsigned>(n)};
}

void address_inputs(unsigned n, uint32_t addr, bitvec& in) {
  for (unsigned i = 0; i < n; ++i)
    in[i] = static_cast<uint8_t>((addr >> (n - 1 - i)) & 1u);
}

} // namespace

qvector superpose(const circuit& c, const std::string& out) {
  const auto args = prepare(c, out);
  const int64_t count = int64_t{1} << args.arity;
  bitvec bits(static_cast<size_t>(count));
#pragma omp parallel
  {
    sim_workspace ws(c);
    bitvec in(args.arity);
#pragma omp for schedule(static)
    for (int64_t a = 0; a < count; ++a) {
      address_inputs(args.arity, static_cast<uint32_t>(a), in);
      bits[static_cast<size_t>(a)] = ws.evaluate_line(in, args.line);
    }
  }
  return qvector(args.arity, std::move(bits));
}

qvector superpose_serial(const circuit& c, const std::string& out) {
  const auto args = prepare(c, out);
  const uint64_t count = uint64_t{1} << args.arity;
  bitvec bits(count);
  sim_workspace ws(c);
  bitvec in(args.arity);
  for (uint64_t a = 0; a < count; ++a) {
    address_inputs(args.arity, static_cast<uint32_t>(a), in);
    bits[a] = ws.evaluate_line(in, args.line);
  }
  return qvector(args.arity, std::move(bits));
}

std::optional<uint32_t> qvector_mismatch(const qvector& a, const qvector& b) {
  if (a.arity() != b.arity())
    throw error(error_kind::invalid_arity,
                "qvector_mismatch: arities differ (" + std::to_string(a.arity()) +
                    " vs " + std::to_string(b.arity()) + ")");
  for (uint32_t addr = 0; addr < a.size(); ++addr)
    if (a.bit(addr) != b.bit(addr))
      return addr;
  return std::nullopt;
}

} // namespace qv
