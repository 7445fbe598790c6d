#include "qv/function_set.hpp"

namespace qv {

namespace {

void check_arity(unsigned arity) {
  if (arity < 1 || arity > 4)
    throw error(error_kind::invalid_function_set,
                "function set arity must be in [1, 4], got " +
                    std::to_string(arity));
}

void check_same(const function_set& a, const function_set& b) {
  if (a.arity() != b.arity())
    throw error(error_kind::invalid_function_set,
                "function set arities differ: " + std::to_string(a.arity()) +
                    " vs " + std::to_string(b.arity()));
}

} // namespace

function_set::function_set(unsigned arity, bitvec members)
    : arity_(arity), members_(std::move(members)) {
  check_arity(arity_);
  const size_t expected = size_t{1} << (1u << arity_);
  if (members_.size() != expected)
    throw error(error_kind::invalid_function_set,
                "function set for arity " + std::to_string(arity_) +
                    " needs " + std::to_string(expected) + " bits, got " +
                    std::to_string(members_.size()));
  for (auto& b : members_)
    b &= 1u;
}

function_set function_set::empty(unsigned arity) {
  check_arity(arity);
  return function_set(arity, bitvec(size_t{1} << (1u << arity), 0));
}

function_set function_set::full(unsigned arity) {
  check_arity(arity);
  return function_set(arity, bitvec(size_t{1} << (1u << arity), 1));
}

bool function_set::contains(uint64_t id) const {
  if (id >= members_.size())
    throw error(error_kind::invalid_function_number,
                "function number " + std::to_string(id) +
                    " out of range for arity " + std::to_string(arity_));
  return members_[id] != 0;
}

function_set function_set::union_with(const function_set& other) const {
  check_same(*this, other);
  bitvec out(members_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = members_[i] | other.members_[i];
  return function_set(arity_, std::move(out));
}

function_set function_set::intersect_with(const function_set& other) const {
  check_same(*this, other);
  bitvec out(members_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = members_[i] & other.members_[i];
  return function_set(arity_, std::move(out));
}

function_set function_set::complement() const {
  bitvec out(members_.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = members_[i] ^ 1u;
  return function_set(arity_, std::move(out));
}

std::vector<uint64_t> function_set::members() const {
  std::vector<uint64_t> out;
  for (size_t i = 0; i < members_.size(); ++i)
    if (members_[i])
      out.push_back(i);
  return out;
}

} // namespace qv
