#pragma once

#include <cstdint>
#include <vector>

#include "qv/errors.hpp"
#include "qv/qvector.hpp"

namespace qv {

/*! \brief Second-level qubit: a set of k-input functions as one bit per
 * function number, 2^(2^k) bits total. Set algebra is bitwise. */
class function_set {
public:
  function_set(unsigned arity, bitvec members);

  static function_set empty(unsigned arity);
  static function_set full(unsigned arity);

  unsigned arity() const { return arity_; }
  size_t universe_size() const { return members_.size(); }
  bool contains(uint64_t id) const;

  function_set union_with(const function_set& other) const;
  function_set intersect_with(const function_set& other) const;
  function_set complement() const;

  /* Member function numbers in increasing order. */
  std::vector<uint64_t> members() const;

  bool operator==(const function_set&) const = default;

private:
  unsigned arity_;
  bitvec members_;
};

} // namespace qv
