#include "oracles.hpp"

#include <doctest.h>

using namespace tarep;

TEST_CASE("bundle violation trace") {
  auto m = oracle::load("client_db.json");
  auto v = check(m.network, m.property);
  REQUIRE(v.kind == Verdict::Kind::Violated);
  std::vector<std::string> labels;
  for (const auto& s : v.trace->steps) labels.push_back(step_label(m.network, s));
  CHECK(labels == std::vector<std::string>{"req", "tau", "ser"});
  CHECK(violates_at(m.network, m.property, v.trace->steps));
  // Minimality: no shorter prefix reaches a violation.
  for (std::size_t n = 0; n < v.trace->length(); ++n) {
    std::vector<NetworkTransition> prefix(v.trace->steps.begin(), v.trace->steps.begin() + n);
    CHECK_FALSE(violates_at(m.network, m.property, prefix));
  }
}

TEST_CASE("synthetic verdicts") {
  CHECK(check(oracle::load("ping_pong_safe.json").network, oracle::load("ping_pong_safe.json").property).kind ==
        Verdict::Kind::Safe);
  for (const auto& e : oracle::violating_corpus()) {
    CAPTURE(e.name);
    auto v = check(e.model.network, e.model.property);
    CHECK(v.kind == Verdict::Kind::Violated);
    // The concrete realization satisfies the trace system and violates Φ.
    auto sys = encode(e.model.network, *v.trace, e.model.property);
    CHECK(feasible(sys));
    CHECK(violation_feasible(sys));
  }
}

TEST_CASE("state limit") {
  auto m = oracle::load("client_db.json");
  CheckOptions o;
  o.state_limit = 1;
  CHECK(check(m.network, m.property, o).kind == Verdict::Kind::Exhausted);
}
