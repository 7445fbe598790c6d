#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "qv/alphabet.hpp"

using namespace qv;

namespace {

bitvec bits_of(const std::string& s) {
  bitvec b;
  for (char c : s)
    b.push_back(static_cast<uint8_t>(c - '0'));
  return b;
}

} // namespace

TEST_CASE("the 16 symbol codes match the alphabet table") {
  const std::vector<std::pair<std::string, std::string>> table = {
      {"∅", "0000"}, {"Q", "1000"}, {"E", "0100"}, {"H", "0010"},
      {"J", "0001"}, {"A", "1100"}, {"B", "0011"}, {"O", "1010"},
      {"I", "0101"}, {"S", "1001"}, {"P", "0110"}, {"C", "0111"},
      {"F", "1011"}, {"L", "1101"}, {"V", "1110"}, {"Y", "1111"}};
  for (const auto& [name, unitary] : table) {
    const auto s = symbol_from_name(name);
    REQUIRE(s.has_value());
    CHECK(symbol_unitary(*s) == unitary);
    CHECK(symbol_name(*s) == name);
  }
}

TEST_CASE("symbol algebra equals set algebra, exhaustively") {
  for (uint8_t a = 0; a < 16; ++a) {
    for (uint8_t b = 0; b < 16; ++b) {
      const symbol2 sa{a}, sb{b};
      const symbol2 u = sa | sb;
      const symbol2 n = sa & sb;
      for (uint8_t v = 0; v < 4; ++v) {
        CHECK(u.covers(v) == (sa.covers(v) || sb.covers(v)));
        CHECK(n.covers(v) == (sa.covers(v) && sb.covers(v)));
      }
    }
    const symbol2 c = ~symbol2{a};
    for (uint8_t v = 0; v < 4; ++v)
      CHECK(c.covers(v) == !symbol2{a}.covers(v));
  }
  CHECK((*symbol_from_name("O") | *symbol_from_name("I")) == *symbol_from_name("Y"));
  CHECK((*symbol_from_name("A") & *symbol_from_name("B")) == *symbol_from_name("∅"));
  CHECK(~*symbol_from_name("V") == *symbol_from_name("J"));
}

TEST_CASE("cube_covers") {
  cube v1{{*symbol_from_name("V")}, std::nullopt, 1};
  CHECK(cube_covers(v1, bits_of("01")));
  CHECK(!cube_covers(v1, bits_of("11")));
  cube q{{sym_Q}, std::nullopt, 1};
  CHECK(cube_covers(q, bits_of("00")));
  CHECK_THROWS_AS(cube_covers(q, bits_of("0")), error);
}

TEST_CASE("encode_coverage transcribes the table") {
  const auto nand = encode_coverage(std::vector<truth_row>{
      {bits_of("00"), 1}, {bits_of("01"), 1}, {bits_of("10"), 1}, {bits_of("11"), 0}});
  REQUIRE(nand.cubes.size() == 4);
  CHECK(nand.cubes[0] == cube{{sym_Q}, std::nullopt, 1});
  CHECK(nand.cubes[1] == cube{{sym_E}, std::nullopt, 1});
  CHECK(nand.cubes[2] == cube{{sym_H}, std::nullopt, 1});
  CHECK(nand.cubes[3] == cube{{sym_J}, std::nullopt, 0});

  const auto ident = encode_coverage(
      std::vector<truth_row>{{bits_of("0"), 0}, {bits_of("1"), 1}});
  CHECK(ident.cubes[0] == cube{{}, symbol1{0b01}, 0});
  CHECK(ident.cubes[1] == cube{{}, symbol1{0b10}, 1});

  // 3-input AND, row 110 -> 0 becomes (J, 0-symbol, 0).
  std::vector<truth_row> and3;
  for (uint32_t a = 0; a < 8; ++a)
    and3.push_back({bits_of(std::string{char('0' + ((a >> 2) & 1)),
                                        char('0' + ((a >> 1) & 1)),
                                        char('0' + (a & 1))}),
                    static_cast<uint8_t>(a == 7)});
  const auto cov = encode_coverage(and3);
  CHECK(cov.cubes[6] == cube{{sym_J}, symbol1{0b01}, 0});

  // Each cube covers exactly one address.
  for (const auto& cb : cov.cubes) {
    int covered = 0;
    for (uint32_t a = 0; a < 8; ++a) {
      bitvec in = {static_cast<uint8_t>((a >> 2) & 1),
                   static_cast<uint8_t>((a >> 1) & 1),
                   static_cast<uint8_t>(a & 1)};
      covered += cube_covers(cb, in);
    }
    CHECK(covered == 1);
  }
}

TEST_CASE("co-edge minimization of the NAND coverage") {
  const auto nand = encode_coverage(std::vector<truth_row>{
      {bits_of("00"), 1}, {bits_of("01"), 1}, {bits_of("10"), 1}, {bits_of("11"), 0}});
  const auto min = minimize_coverage(nand);
  REQUIRE(min.cubes.size() == 2);
  CHECK(min.cubes[0] == cube{{*symbol_from_name("V")}, std::nullopt, 1});
  CHECK(min.cubes[1] == cube{{sym_J}, std::nullopt, 0});
  CHECK(coverage_to_qvector(min).to_binary() == "1110");
}

TEST_CASE("single cube is a fixpoint") {
  const coverage one{2, {cube{{sym_Q}, std::nullopt, 1}}};
  CHECK(minimize_coverage(one) == one);
}

TEST_CASE("3-input majority: minimize preserves the function") {
  std::vector<truth_row> maj;
  for (uint32_t a = 0; a < 8; ++a) {
    const int ones = ((a >> 2) & 1) + ((a >> 1) & 1) + (a & 1);
    maj.push_back({bits_of(std::string{char('0' + ((a >> 2) & 1)),
                                       char('0' + ((a >> 1) & 1)),
                                       char('0' + (a & 1))}),
                   static_cast<uint8_t>(ones >= 2)});
  }
  const auto min = minimize_coverage(encode_coverage(maj));
  CHECK(min.cubes.size() < 8);
  CHECK(coverage_to_qvector(min) == qvector::from_truth_table(maj));
}

TEST_CASE("minimization soundness on random tables") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % 6);
    const auto rows = qv_test::random_table(rng, k);
    const auto cov = encode_coverage(rows);
    CHECK(cov.cubes.size() == (size_t{1} << k));
    const auto min = minimize_coverage(cov);
    CHECK(min.cubes.size() <= cov.cubes.size());
    CHECK(coverage_to_qvector(min) == qvector::from_truth_table(rows));
  }
}

TEST_CASE("coverage consistency errors") {
  // Q appears with both outputs: contradictory.
  const coverage bad{2, {cube{{sym_Q}, std::nullopt, 1}, cube{{sym_Q}, std::nullopt, 0}}};
  CHECK_THROWS_AS(minimize_coverage(bad), error);
  CHECK_THROWS_AS(coverage_to_qvector(bad), error);
  // Only Q covered: incomplete.
  const coverage partial{2, {cube{{sym_Q}, std::nullopt, 1}}};
  CHECK_THROWS_AS(coverage_to_qvector(partial), error);
  // Constant one.
  const coverage full{2, {cube{{*symbol_from_name("Y")}, std::nullopt, 1}}};
  CHECK(coverage_to_qvector(full).to_binary() == "1111");
}

TEST_CASE("coverage text round trip") {
  const coverage cov{5,
                     {cube{{*symbol_from_name("V"), sym_Q}, symbol1{0b11}, 1},
                      cube{{sym_J, *symbol_from_name("Y")}, symbol1{0b01}, 0}}};
  const auto text = print_coverage(cov);
  CHECK(parse_coverage(text) == cov);

  const auto nand_min = parse_coverage("V -> 1\nJ -> 0\n");
  CHECK(coverage_to_qvector(nand_min).to_binary() == "1110");

  CHECK_THROWS_AS(parse_coverage("Z -> 1\n"), error);
  CHECK_THROWS_AS(parse_coverage("V J -> 1\nV -> 0\n"), error); // shape mismatch
}
