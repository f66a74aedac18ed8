#include "oracles.hpp"

#include <doctest.h>

using namespace tarep;

TEST_CASE("bundle constraint order") {
  auto m = oracle::load("client_db.json");
  auto table = constraint_table(m.network);
  REQUIRE(table.size() == 6);
  std::vector<std::string> text;
  for (const auto& r : table) text.push_back(describe(m.network, constraint_at(m.network, r)));
  CHECK(text == std::vector<std::string>{"z <= 2", "z >= 1", "w <= 2", "y <= 1", "w >= 1", "y >= 1"});
  CHECK(max_constant(m.network) == 2);
}

TEST_CASE("model serialization round trip") {
  for (const auto& e : oracle::violating_corpus()) {
    auto text = serialize_model(e.model.network, e.model.property);
    auto back = parse_model(text);
    CHECK(back.network == e.model.network);
    CHECK(back.property == e.model.property);
    CHECK(serialize_model(back.network, back.property) == text);
  }
}

TEST_CASE("malformed atoms are rejected") {
  auto m = oracle::load("client_db.json");
  CHECK(parse_atom(m.network, "w <= 2") == ClockConstraint{ClockId(0), CmpOp::Le, Rational(2)});
  CHECK(parse_atom(m.network, "x = 3/2").op == CmpOp::Eq);
  CHECK_THROWS_AS(parse_atom(m.network, "w <== 2"), ModelError);
  CHECK_THROWS_AS(parse_atom(m.network, "q <= 2"), ModelError);
  CHECK_THROWS_AS(parse_atom(m.network, "w <= -1"), ModelError);

  auto text = read_file(oracle::models_dir() / "client_db.json");
  auto pos = text.find("w <= 2");
  text.replace(pos, 6, "w <== 2");
  CHECK_THROWS_AS(parse_model(text), ModelError);
  CHECK_THROWS_AS(parse_model("{\"automata\": [}"), ModelError);
}

TEST_CASE("property grammar") {
  auto m = oracle::load("client_db.json");
  auto p = parse_property(m.network, "x <= 4 || !@client.serReceiving");
  CHECK(p == m.property);
  CHECK(to_string(m.network, p) == "x <= 4 || !@client.serReceiving");
  CHECK_THROWS_AS(parse_property(m.network, "@client.nowhere"), ModelError);
  CHECK_THROWS_AS(parse_property(m.network, "(x <= 4"), ModelError);
}

TEST_CASE("trace round trip") {
  auto m = oracle::load("client_db.json");
  auto v = check(m.network, m.property);
  REQUIRE(v.trace);
  auto back = parse_trace(m.network, serialize_trace(m.network, *v.trace));
  CHECK(back.steps == v.trace->steps);
  CHECK(back.locations == v.trace->locations);
}
