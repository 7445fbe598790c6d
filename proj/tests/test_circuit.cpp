#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gen.hpp"
#include "qv/circuit.hpp"

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

std::vector<std::string> level_outputs(const circuit& c, size_t level) {
  std::vector<std::string> names;
  for (size_t g : c.levels()[level])
    names.push_back(c.primitives()[g].output);
  return names;
}

} // namespace

TEST_CASE("fig2 circuit parses and levelizes") {
  const auto c = parse_netlist(fig2_text);
  CHECK(c.input_names().size() == 6);
  CHECK(c.primitives().size() == 6);
  REQUIRE(c.levels().size() == 3);
  CHECK(level_outputs(c, 0) == std::vector<std::string>{"A", "7"});
  CHECK(level_outputs(c, 1) == std::vector<std::string>{"8", "9"});
  CHECK(level_outputs(c, 2) == std::vector<std::string>{"B", "C"});
  CHECK(c.output_names() == std::vector<std::string>{"B", "C"});

  // Every primitive reads only lines of strictly lower rank.
  for (const auto& p : c.primitives())
    for (const auto& in : p.inputs) {
      unsigned driver_rank = 0;
      for (const auto& d : c.primitives())
        if (d.output == in)
          driver_rank = d.rank;
      CHECK(driver_rank < p.rank);
    }
}

TEST_CASE("single gate circuit") {
  const auto c = parse_netlist("inputs a b\ngate y 0b0001 a b\n");
  CHECK(c.levels().size() == 1);
  CHECK(c.primitives().size() == 1);
  CHECK(c.output_names() == std::vector<std::string>{"y"}); // default: sink lines
}

TEST_CASE("repeated input line is accepted") {
  const auto c = parse_netlist("inputs a\ngate y 0b0001 a a\n");
  CHECK(c.primitives().front().inputs == std::vector<std::string>{"a", "a"});
}

TEST_CASE("chain of gates levelizes one per level") {
  const auto c = parse_netlist(
      "inputs a\ngate b 0b10 a\ngate c 0b10 b\ngate d 0b10 c\ngate e 0b10 d\n");
  CHECK(c.levels().size() == 4);
  for (const auto& level : c.levels())
    CHECK(level.size() == 1);
}

TEST_CASE("validate reports all violations") {
  CHECK(validate(parse_netlist_text(fig2_text)).empty());

  const auto dup = parse_netlist_text(
      "inputs a b\ngate y 1 a b\ngate y 7 a b\n");
  const auto diags = validate(dup);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].message.find("y") != std::string::npos);
  CHECK(diags[0].message.find("driver") != std::string::npos);

  const auto undecl = validate(parse_netlist_text("inputs a b\ngate y 1 a z\n"));
  REQUIRE(undecl.size() == 1);
  CHECK(undecl[0].message.find("z") != std::string::npos);

  // Arity mismatch between q literal and input count.
  const auto mism = validate(parse_netlist_text("inputs a b\ngate y 0b01 a b\n"));
  CHECK(!mism.empty());
}

TEST_CASE("cycles are rejected with the cycle named") {
  const auto nl = parse_netlist_text(
      "inputs a\ngate x 1 a y\ngate y 1 a x\n");
  CHECK(!validate(nl).empty());
  try {
    circuit::from_netlist(nl);
    FAIL("expected cyclic_circuit");
  } catch (const error& e) {
    CHECK(e.kind() == error_kind::cyclic_circuit);
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
}

TEST_CASE("parse errors carry line context") {
  CHECK_THROWS_AS(parse_netlist("gate y 1 a b\n"), error);
  CHECK_THROWS_AS(parse_netlist("inputs a b\nfoo y 1 a b\n"), error);
  CHECK_THROWS_AS(parse_netlist("inputs a b\ngate y 1\n"), error);
  CHECK_THROWS_AS(parse_netlist("inputs a$\n"), error);
  try {
    parse_netlist("inputs a b\nbogus\n");
    FAIL("expected parse_error");
  } catch (const error& e) {
    CHECK(e.kind() == error_kind::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("comments and q-literal forms") {
  const auto c = parse_netlist(
      "# a comment\ninputs a b # trailing\ngate y 14 a b\ngate z 0b1110 a b\n");
  CHECK(c.primitives()[0].q == c.primitives()[1].q);
}

TEST_CASE("print/parse round trip") {
  const auto c = parse_netlist(fig2_text);
  CHECK(parse_netlist(c.print()) == c);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rc = qv_test::random_circuit(rng, 2 + rng() % 6, 1 + rng() % 15);
    CHECK(parse_netlist(rc.print()) == rc);
  }
}
