#pragma once

#include <cstdint>
#include <optional>

#include "qv/circuit.hpp"
#include "qv/sim.hpp"

namespace qv {

/* Collapse the circuit into one q-vector over its external inputs for the
 * given line: bit a is the line's state under the input assignment with
 * address a. Exhaustive over all 2^n assignments; OpenMP over addresses. */
qvector superpose(const circuit& c, const std::string& out);

/* Serial reference for the parallel kernel. */
qvector superpose_serial(const circuit& c, const std::string& out);

/* nullopt when equal, otherwise the lowest differing address. */
std::optional<uint32_t> qvector_mismatch(const qvector& a, const qvector& b);

} // namespace qv
