#include "qv/qvector.hpp"

#include <algorithm>
#include <charconv>

namespace qv {

uint32_t address_of(std::span<const uint8_t> inputs) {
  if (inputs.empty() || inputs.size() > max_arity)
    throw error(error_kind::invalid_arity,
                "address_of: input count must be in [1, 16], got " +
                    std::to_string(inputs.size()));
  uint32_t addr = 0;
  for (uint8_t b : inputs)
    addr = (addr << 1) | (b & 1u);
  return addr;
}

qvector::qvector(unsigned arity, bitvec bits)
    : arity_(arity), bits_(std::move(bits)) {
  if (arity_ < 1 || arity_ > max_arity)
    throw error(error_kind::invalid_arity,
                "qvector: arity must be in [1, 16], got " +
                    std::to_string(arity_));
  if (bits_.size() != (size_t{1} << arity_))
    throw error(error_kind::invalid_arity,
                "qvector: expected " + std::to_string(size_t{1} << arity_) +
                    " bits, got " + std::to_string(bits_.size()));
  for (auto& b : bits_)
    b &= 1u;
}

qvector qvector::from_truth_table(std::span<const truth_row> rows) {
  if (rows.empty())
    throw error(error_kind::incomplete_table, "truth table is empty");
  const size_t k = rows.front().inputs.size();
  if (k < 1 || k > max_arity)
    throw error(error_kind::invalid_arity,
                "truth table arity must be in [1, 16]");
  const size_t n = size_t{1} << k;
  bitvec bits(n, 0);
  std::vector<uint8_t> seen(n, 0);
  for (const auto& row : rows) {
    if (row.inputs.size() != k)
      throw error(error_kind::invalid_arity, "truth table rows have mixed arity");
    const uint32_t a = address_of(row.inputs);
    if (seen[a])
      throw error(error_kind::incomplete_table,
                  "duplicate input combination at address " + std::to_string(a));
    seen[a] = 1;
    bits[a] = row.out & 1u;
  }
  for (size_t a = 0; a < n; ++a)
    if (!seen[a])
      throw error(error_kind::incomplete_table,
                  "missing input combination at address " + std::to_string(a));
  return qvector(static_cast<unsigned>(k), std::move(bits));
}

qvector qvector::from_id(unsigned arity, uint64_t id) {
  if (arity < 1 || arity > 6)
    throw error(error_kind::invalid_arity,
                "from_id: arity must be in [1, 6], got " + std::to_string(arity));
  const unsigned n = 1u << arity;
  if (n < 64 && id >= (uint64_t{1} << n))
    throw error(error_kind::invalid_function_number,
                "function number " + std::to_string(id) +
                    " out of range for arity " + std::to_string(arity));
  bitvec bits(n, 0);
  for (unsigned a = 0; a < n; ++a)
    bits[a] = static_cast<uint8_t>((id >> (n - 1 - a)) & 1u);
  return qvector(arity, std::move(bits));
}

uint8_t qvector::evaluate(std::span<const uint8_t> inputs) const {
  if (inputs.size() != arity_)
    throw error(error_kind::invalid_arity,
                "evaluate: expected " + std::to_string(arity_) + " inputs, got " +
                    std::to_string(inputs.size()));
  return bits_[address_of(inputs)];
}

uint64_t qvector::decimal_id() const {
  if (!has_decimal_id())
    throw error(error_kind::invalid_arity,
                "decimal id is only defined for arity <= 6");
  uint64_t id = 0;
  for (uint8_t b : bits_)
    id = (id << 1) | b;
  return id;
}

std::string qvector::to_binary(bool group4) const {
  std::string s;
  s.reserve(bits_.size() + (group4 ? bits_.size() / 4 : 0));
  for (size_t a = 0; a < bits_.size(); ++a) {
    if (group4 && a > 0 && a % 4 == 0)
      s += ' ';
    s += static_cast<char>('0' + bits_[a]);
  }
  return s;
}

std::vector<qvector> enumerate_functions(unsigned arity) {
  if (arity < 1 || arity > 4)
    throw error(error_kind::enumeration_too_large,
                "enumeration is guarded at arity 4, got " + std::to_string(arity));
  const uint64_t count = uint64_t{1} << (1u << arity);
  std::vector<qvector> out;
  out.reserve(count);
  for (uint64_t id = 0; id < count; ++id)
    out.push_back(qvector::from_id(arity, id));
  return out;
}

qvector parse_qvector(const std::string& literal,
                      std::optional<unsigned> arity_hint) {
  if (literal.rfind("0b", 0) == 0) {
    bitvec bits;
    bits.reserve(literal.size() - 2);
    for (size_t i = 2; i < literal.size(); ++i) {
      const char c = literal[i];
      if (c != '0' && c != '1')
        throw error(error_kind::parse_error,
                    "bad binary q-vector literal '" + literal + "'");
      bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    const size_t n = bits.size();
    if (n == 0 || (n & (n - 1)) != 0)
      throw error(error_kind::parse_error,
                  "binary q-vector length must be a power of two: '" + literal + "'");
    unsigned arity = 0;
    while ((size_t{1} << arity) < n)
      ++arity;
    if (arity < 1 || arity > max_arity)
      throw error(error_kind::parse_error,
                  "q-vector literal arity out of range: '" + literal + "'");
    if (arity_hint && *arity_hint != arity)
      throw error(error_kind::semantic_error,
                  "q-vector literal '" + literal + "' has arity " +
                      std::to_string(arity) + ", expected " +
                      std::to_string(*arity_hint));
    return qvector(arity, std::move(bits));
  }

  const auto colon = literal.find(':');
  const std::string id_part = literal.substr(0, colon);
  uint64_t id = 0;
  auto [p, ec] = std::from_chars(id_part.data(), id_part.data() + id_part.size(), id);
  if (ec != std::errc{} || p != id_part.data() + id_part.size())
    throw error(error_kind::parse_error,
                "bad q-vector literal '" + literal + "'");

  std::optional<unsigned> arity = arity_hint;
  if (colon != std::string::npos) {
    const std::string ar_part = literal.substr(colon + 1);
    unsigned a = 0;
    auto [pa, eca] = std::from_chars(ar_part.data(), ar_part.data() + ar_part.size(), a);
    if (eca != std::errc{} || pa != ar_part.data() + ar_part.size())
      throw error(error_kind::parse_error,
                  "bad arity suffix in q-vector literal '" + literal + "'");
    if (arity_hint && *arity_hint != a)
      throw error(error_kind::semantic_error,
                  "q-vector literal '" + literal + "' has arity " +
                      std::to_string(a) + ", expected " +
                      std::to_string(*arity_hint));
    arity = a;
  }
  if (!arity)
    throw error(error_kind::parse_error,
                "decimal q-vector literal '" + literal +
                    "' needs an explicit arity (e.g. 14:2)");
  return qvector::from_id(*arity, id);
}

} // namespace qv
