#include "qv/alphabet.hpp"

#include <array>
#include <sstream>

namespace qv {

namespace {

/* Indexed by code; bit v of the code covers pair value v. */
const std::array<std::string, 16> names = {
    "∅", "Q", "E", "A", "H", "O", "P", "V",
    "J",      "S", "I", "L", "B", "F", "C", "Y"};

const std::array<std::string, 4> names1 = {"∅", "0", "1", "X"};

unsigned cube_arity(const cube& c) {
  return static_cast<unsigned>(2 * c.pairs.size() + (c.tail ? 1 : 0));
}

void check_shape(const coverage& c) {
  for (const auto& cb : c.cubes)
    if (cube_arity(cb) != c.arity)
      throw error(error_kind::invalid_arity,
                  "cube shape does not match coverage arity " +
                      std::to_string(c.arity));
}

bitvec inputs_of_address(unsigned arity, uint32_t addr) {
  bitvec in(arity);
  for (unsigned i = 0; i < arity; ++i)
    in[i] = static_cast<uint8_t>((addr >> (arity - 1 - i)) & 1u);
  return in;
}

/* Position count of a cube: pair symbols plus the optional tail. */
size_t position_count(const cube& c) {
  return c.pairs.size() + (c.tail ? 1 : 0);
}

bool positions_intersect(const cube& a, const cube& b) {
  for (size_t p = 0; p < a.pairs.size(); ++p)
    if ((a.pairs[p] & b.pairs[p]).empty())
      return false;
  if (a.tail && (*a.tail & *b.tail).empty())
    return false;
  return true;
}

/* Index of the single differing position, or nullopt when the cubes differ
 * in zero or more than one position. */
std::optional<size_t> single_difference(const cube& a, const cube& b) {
  std::optional<size_t> diff;
  for (size_t p = 0; p < a.pairs.size(); ++p) {
    if (a.pairs[p] != b.pairs[p]) {
      if (diff)
        return std::nullopt;
      diff = p;
    }
  }
  if (a.tail && *a.tail != *b.tail) {
    if (diff)
      return std::nullopt;
    diff = a.pairs.size();
  }
  return diff;
}

} // namespace

const std::string& symbol_name(symbol2 s) { return names[s.code & 0xFu]; }

std::optional<symbol2> symbol_from_name(const std::string& name) {
  for (uint8_t c = 0; c < 16; ++c)
    if (names[c] == name)
      return symbol2{c};
  return std::nullopt;
}

std::string symbol_unitary(symbol2 s) {
  std::string out(4, '0');
  for (uint8_t v = 0; v < 4; ++v)
    if (s.covers(v))
      out[v] = '1';
  return out;
}

const std::string& symbol1_name(symbol1 s) { return names1[s.code & 0x3u]; }

std::optional<symbol1> symbol1_from_name(const std::string& name) {
  for (uint8_t c = 0; c < 4; ++c)
    if (names1[c] == name)
      return symbol1{c};
  return std::nullopt;
}

bool cube::empty_set() const {
  for (const auto& s : pairs)
    if (s.empty())
      return true;
  return tail && tail->empty();
}

bool cube_covers(const cube& c, std::span<const uint8_t> inputs) {
  if (inputs.size() != cube_arity(c))
    throw error(error_kind::invalid_arity,
                "cube_covers: expected " + std::to_string(cube_arity(c)) +
                    " inputs, got " + std::to_string(inputs.size()));
  for (size_t p = 0; p < c.pairs.size(); ++p) {
    const uint8_t v = static_cast<uint8_t>((inputs[2 * p] << 1) | inputs[2 * p + 1]);
    if (!c.pairs[p].covers(v))
      return false;
  }
  if (c.tail && !c.tail->covers(inputs.back() & 1u))
    return false;
  return true;
}

coverage encode_coverage(std::span<const truth_row> rows) {
  // Validates completeness as a side effect.
  const qvector q = qvector::from_truth_table(rows);
  const unsigned k = q.arity();

  coverage cov;
  cov.arity = k;
  cov.cubes.reserve(rows.size());
  static constexpr symbol2 primitive[4] = {sym_Q, sym_E, sym_H, sym_J};
  for (const auto& row : rows) {
    cube cb;
    for (size_t p = 0; p + 1 < row.inputs.size(); p += 2)
      cb.pairs.push_back(primitive[(row.inputs[p] << 1) | row.inputs[p + 1]]);
    if (k % 2 != 0)
      cb.tail = symbol1{static_cast<uint8_t>(1u << (row.inputs.back() & 1u))};
    cb.out = row.out & 1u;
    cov.cubes.push_back(std::move(cb));
  }
  return cov;
}

coverage minimize_coverage(const coverage& c) {
  check_shape(c);

  // Overlapping cubes with different outputs make the coverage contradictory.
  for (size_t i = 0; i < c.cubes.size(); ++i)
    for (size_t j = i + 1; j < c.cubes.size(); ++j)
      if (c.cubes[i].out != c.cubes[j].out &&
          positions_intersect(c.cubes[i], c.cubes[j]))
        throw error(error_kind::inconsistent_coverage,
                    "cubes " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap with different outputs");

  coverage out = c;
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < out.cubes.size() && !merged; ++i) {
      for (size_t j = i + 1; j < out.cubes.size() && !merged; ++j) {
        cube& a = out.cubes[i];
        const cube& b = out.cubes[j];
        if (a.out != b.out)
          continue;
        const auto diff = single_difference(a, b);
        if (!diff)
          continue;
        if (*diff < a.pairs.size())
          a.pairs[*diff] = a.pairs[*diff] | b.pairs[*diff];
        else
          a.tail = *a.tail | *b.tail;
        out.cubes.erase(out.cubes.begin() + static_cast<ptrdiff_t>(j));
        merged = true;
      }
    }
  }
  return out;
}

qvector coverage_to_qvector(const coverage& c) {
  check_shape(c);
  if (c.arity < 1 || c.arity > max_arity)
    throw error(error_kind::invalid_arity,
                "coverage arity must be in [1, 16], got " + std::to_string(c.arity));
  const uint32_t n = 1u << c.arity;
  bitvec bits(n, 0);
  for (uint32_t a = 0; a < n; ++a) {
    const bitvec in = inputs_of_address(c.arity, a);
    int seen = -1;
    for (const auto& cb : c.cubes) {
      if (!cube_covers(cb, in))
        continue;
      if (seen >= 0 && seen != cb.out)
        throw error(error_kind::inconsistent_coverage,
                    "address " + std::to_string(a) +
                        " covered by both output values");
      seen = cb.out;
    }
    if (seen < 0)
      throw error(error_kind::incomplete_coverage,
                  "address " + std::to_string(a) + " is not covered");
    bits[a] = static_cast<uint8_t>(seen);
  }
  return qvector(c.arity, std::move(bits));
}

std::string print_coverage(const coverage& c) {
  std::string out;
  for (const auto& cb : c.cubes) {
    for (const auto& s : cb.pairs) {
      out += symbol_name(s);
      out += ' ';
    }
    if (cb.tail) {
      out += symbol1_name(*cb.tail);
      out += ' ';
    }
    out += "-> ";
    out += static_cast<char>('0' + cb.out);
    out += '\n';
  }
  return out;
}

coverage parse_coverage(const std::string& text) {
  coverage cov;
  bool have_shape = false;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok)
      tokens.push_back(tok);
    if (tokens.empty())
      continue;
    if (tokens.size() < 3 || tokens[tokens.size() - 2] != "->")
      throw error(error_kind::parse_error,
                  "coverage line " + std::to_string(lineno) +
                      ": expected '<symbols> -> <bit>'");
    const std::string& out_tok = tokens.back();
    if (out_tok != "0" && out_tok != "1")
      throw error(error_kind::parse_error,
                  "coverage line " + std::to_string(lineno) +
                      ": output must be 0 or 1");
    cube cb;
    cb.out = static_cast<uint8_t>(out_tok == "1");
    const size_t nsym = tokens.size() - 2;
    for (size_t i = 0; i < nsym; ++i) {
      const std::string& name = tokens[i];
      const bool last = (i + 1 == nsym);
      if (last && (name == "0" || name == "1" || name == "X")) {
        cb.tail = *symbol1_from_name(name);
        continue;
      }
      const auto s = symbol_from_name(name);
      if (!s)
        throw error(error_kind::parse_error,
                    "coverage line " + std::to_string(lineno) +
                        ": unknown symbol '" + name + "'");
      cb.pairs.push_back(*s);
    }
    if (!have_shape) {
      cov.arity = cube_arity(cb);
      have_shape = true;
    } else if (cube_arity(cb) != cov.arity) {
      throw error(error_kind::parse_error,
                  "coverage line " + std::to_string(lineno) +
                      ": cube shape differs from previous cubes");
    }
    cov.cubes.push_back(std::move(cb));
  }
  if (!have_shape)
    throw error(error_kind::parse_error, "coverage is empty");
  return cov;
}

} // namespace qv
