#include "qv/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qv {

namespace {

bool valid_line_name(const std::string& tok) {
  if (tok.empty())
    return false;
  for (char c : tok)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ls(line);
  std::vector<std::string> out;
  std::string tok;
  while (ls >> tok)
    out.push_back(tok);
  return out;
}

struct checked {
  std::vector<diagnostic> diags;
  std::vector<diagnostic> cycle_diags;
  // Parsed q-vectors per gate, present when the gate checked out.
  std::vector<std::optional<qvector>> qvecs;
};

checked check_netlist(const netlist& nl) {
  checked result;
  result.qvecs.resize(nl.gates.size());

  std::map<std::string, size_t> driver; // line -> gate index
  std::map<std::string, int> declared;  // all known lines

  for (size_t i = 0; i < nl.inputs.size(); ++i) {
    if (declared.count(nl.inputs[i]))
      result.diags.push_back({"input line '" + nl.inputs[i] + "' declared twice"});
    declared[nl.inputs[i]] = 1;
  }

  for (size_t g = 0; g < nl.gates.size(); ++g) {
    const auto& gate = nl.gates[g];
    if (std::find(nl.inputs.begin(), nl.inputs.end(), gate.output) != nl.inputs.end()) {
      result.diags.push_back(
          {"gate output '" + gate.output + "' redeclares an external input"});
      continue;
    }
    if (auto [it, fresh] = driver.emplace(gate.output, g); !fresh)
      result.diags.push_back({"line '" + gate.output + "' has more than one driver"});
    declared[gate.output] = 1;
  }

  for (size_t g = 0; g < nl.gates.size(); ++g) {
    const auto& gate = nl.gates[g];
    for (const auto& in : gate.inputs)
      if (!declared.count(in))
        result.diags.push_back({"gate '" + gate.output + "' reads undeclared line '" +
                                in + "'"});
    try {
      result.qvecs[g] =
          parse_qvector(gate.q_literal, static_cast<unsigned>(gate.inputs.size()));
    } catch (const error& e) {
      result.diags.push_back({"gate '" + gate.output + "': " + e.what()});
    }
  }

  for (const auto& out : nl.outputs)
    if (!declared.count(out))
      result.diags.push_back({"outputs list names undeclared line '" + out + "'"});

  // Cycle check over the gate dependency graph.
  std::vector<int> color(nl.gates.size(), 0); // 0 white, 1 grey, 2 black
  std::vector<std::string> stack;
  auto dfs = [&](auto&& self, size_t g) -> bool {
    color[g] = 1;
    stack.push_back(nl.gates[g].output);
    for (const auto& in : nl.gates[g].inputs) {
      const auto it = driver.find(in);
      if (it == driver.end())
        continue;
      const size_t d = it->second;
      if (color[d] == 1) {
        // Reconstruct the cycle from the grey stack.
        std::string cyc;
        auto start = std::find(stack.begin(), stack.end(), nl.gates[d].output);
        for (auto s = start; s != stack.end(); ++s)
          cyc += *s + " -> ";
        cyc += nl.gates[d].output;
        result.cycle_diags.push_back({"cycle: " + cyc});
        return true;
      }
      if (color[d] == 0 && self(self, d))
        return true;
    }
    stack.pop_back();
    color[g] = 2;
    return false;
  };
  for (size_t g = 0; g < nl.gates.size(); ++g)
    if (color[g] == 0) {
      stack.clear();
      dfs(dfs, g);
    }

  return result;
}

} // namespace

netlist parse_netlist_text(const std::string& text) {
  netlist nl;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool seen_inputs = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto tokens = split_ws(line);
    if (tokens.empty())
      continue;
    const auto where = [lineno](const std::string& tok) {
      return " (line " + std::to_string(lineno) + ", token '" + tok + "')";
    };
    if (nl.outputs_declared)
      throw error(error_kind::parse_error,
                  "netlist: 'outputs' must be the last statement" + where(tokens[0]));
    if (tokens[0] == "inputs") {
      if (seen_inputs)
        throw error(error_kind::parse_error,
                    "netlist: duplicate 'inputs' statement" + where(tokens[0]));
      if (tokens.size() < 2)
        throw error(error_kind::parse_error,
                    "netlist: 'inputs' needs at least one line" + where(tokens[0]));
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_line_name(tokens[i]))
          throw error(error_kind::parse_error,
                      "netlist: bad line name" + where(tokens[i]));
        nl.inputs.push_back(tokens[i]);
      }
      seen_inputs = true;
    } else if (tokens[0] == "gate") {
      if (!seen_inputs)
        throw error(error_kind::parse_error,
                    "netlist: 'inputs' must come first" + where(tokens[0]));
      if (tokens.size() < 4)
        throw error(error_kind::parse_error,
                    "netlist: 'gate' needs an output, a q-literal and at least "
                    "one input" + where(tokens[0]));
      netlist::gate g;
      g.lineno = lineno;
      if (!valid_line_name(tokens[1]))
        throw error(error_kind::parse_error,
                    "netlist: bad line name" + where(tokens[1]));
      g.output = tokens[1];
      g.q_literal = tokens[2];
      for (size_t i = 3; i < tokens.size(); ++i) {
        if (!valid_line_name(tokens[i]))
          throw error(error_kind::parse_error,
                      "netlist: bad line name" + where(tokens[i]));
        g.inputs.push_back(tokens[i]);
      }
      nl.gates.push_back(std::move(g));
    } else if (tokens[0] == "outputs") {
      if (!seen_inputs)
        throw error(error_kind::parse_error,
                    "netlist: 'inputs' must come first" + where(tokens[0]));
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_line_name(tokens[i]))
          throw error(error_kind::parse_error,
                      "netlist: bad line name" + where(tokens[i]));
        nl.outputs.push_back(tokens[i]);
      }
      nl.outputs_declared = true;
    } else {
      throw error(error_kind::parse_error,
                  "netlist: unknown statement" + where(tokens[0]));
    }
  }
  if (!seen_inputs)
    throw error(error_kind::parse_error, "netlist: missing 'inputs' statement");
  return nl;
}

std::vector<diagnostic> validate(const netlist& nl) {
  auto res = check_netlist(nl);
  for (auto& d : res.cycle_diags)
    res.diags.push_back(std::move(d));
  return res.diags;
}

circuit circuit::from_netlist(const netlist& nl) {
  const auto res = check_netlist(nl);
  if (!res.diags.empty())
    throw error(error_kind::semantic_error, res.diags.front().message);
  if (!res.cycle_diags.empty())
    throw error(error_kind::cyclic_circuit, res.cycle_diags.front().message);

  circuit c;
  c.inputs_ = nl.inputs;
  c.prims_.reserve(nl.gates.size());
  for (size_t g = 0; g < nl.gates.size(); ++g)
    c.prims_.push_back(primitive{nl.gates[g].output, nl.gates[g].inputs,
                                 *res.qvecs[g]});

  // Default outputs: lines that drive nothing.
  if (nl.outputs_declared) {
    c.outputs_ = nl.outputs;
  } else {
    for (const auto& p : c.prims_) {
      bool used = false;
      for (const auto& q : c.prims_)
        used = used ||
               std::find(q.inputs.begin(), q.inputs.end(), p.output) != q.inputs.end();
      if (!used)
        c.outputs_.push_back(p.output);
    }
  }

  // Ranks: external inputs are 0, a primitive is 1 + max of its drivers.
  std::map<std::string, size_t> driver;
  for (size_t g = 0; g < c.prims_.size(); ++g)
    driver[c.prims_[g].output] = g;
  std::vector<int> rank(c.prims_.size(), -1);
  auto rank_of = [&](auto&& self, size_t g) -> unsigned {
    if (rank[g] >= 0)
      return static_cast<unsigned>(rank[g]);
    unsigned r = 0;
    for (const auto& in : c.prims_[g].inputs)
      if (const auto it = driver.find(in); it != driver.end())
        r = std::max(r, self(self, it->second));
    rank[g] = static_cast<int>(r + 1);
    return r + 1;
  };
  unsigned max_rank = 0;
  for (size_t g = 0; g < c.prims_.size(); ++g) {
    c.prims_[g].rank = rank_of(rank_of, g);
    max_rank = std::max(max_rank, c.prims_[g].rank);
  }
  c.levels_.resize(max_rank);
  for (size_t g = 0; g < c.prims_.size(); ++g)
    c.levels_[c.prims_[g].rank - 1].push_back(g);

  // Line numbering: inputs first, then primitive outputs in level order.
  c.line_names_ = c.inputs_;
  for (const auto& level : c.levels_)
    for (size_t g : level)
      c.line_names_.push_back(c.prims_[g].output);

  std::map<std::string, uint32_t> index;
  for (uint32_t i = 0; i < c.line_names_.size(); ++i)
    index[c.line_names_[i]] = i;
  for (auto& p : c.prims_) {
    p.output_line = index.at(p.output);
    p.input_lines.clear();
    for (const auto& in : p.inputs)
      p.input_lines.push_back(index.at(in));
  }
  for (const auto& out : c.outputs_)
    c.output_lines_.push_back(index.at(out));

  return c;
}

std::optional<uint32_t> circuit::line_index(const std::string& name) const {
  for (uint32_t i = 0; i < line_names_.size(); ++i)
    if (line_names_[i] == name)
      return i;
  return std::nullopt;
}

std::string circuit::print() const {
  std::string out = "inputs";
  for (const auto& in : inputs_)
    out += " " + in;
  out += '\n';
  for (const auto& p : prims_) {
    out += "gate " + p.output + " ";
    out += p.q.has_decimal_id() ? std::to_string(p.q.decimal_id())
                                : "0b" + p.q.to_binary();
    for (const auto& in : p.inputs)
      out += " " + in;
    out += '\n';
  }
  out += "outputs";
  for (const auto& o : outputs_)
    out += " " + o;
  out += '\n';
  return out;
}

circuit parse_netlist(const std::string& text) {
  return circuit::from_netlist(parse_netlist_text(text));
}

} // namespace qv
