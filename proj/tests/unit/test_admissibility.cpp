#include "oracles.hpp"

#include <doctest.h>

using namespace tarep;

TEST_CASE("trivial automata") {
  Network net;
  TimedAutomaton ta;
  ta.name = "A";
  ta.locations.push_back({"only", false, {}});
  net.automata.push_back(ta);
  auto u = build_untimed(net, clock_scale({&net}));
  CHECK(u.size() == 1);
  CHECK(u.edges[0].empty());
  CHECK(accepts(u, {}));
  CHECK_FALSE(accepts(u, {"a"}));
}

TEST_CASE("bundle language") {
  auto m = oracle::load("client_db.json");
  auto u = build_untimed(m.network, clock_scale({&m.network}));
  CHECK(accepts(u, {"req", "ser"}));
  CHECK(accepts(u, {"req", "ser", "ack", "req"}) == false);  // client is done after one round
  CHECK_FALSE(accepts(u, {"ser"}));
  CHECK(equivalent(u, u).equal);
}

TEST_CASE("urgency repair is inadmissible with a checked witness") {
  auto m = oracle::load("client_db.json");
  auto repaired = m.network;
  repaired.automata[0].locations[2].urgent = true;  // serReceiving
  auto r = check_admissible(m.network, repaired);
  REQUIRE_FALSE(r.admissible);
  auto scale = clock_scale({&m.network, &repaired});
  auto a = build_untimed(m.network, scale), b = build_untimed(repaired, scale);
  CHECK(accepts(a, r.witness) != accepts(b, r.witness));
  CHECK(r.accepted_by == (accepts(a, r.witness) ? "original" : "repaired"));

  auto swapped = equivalent(b, a);
  CHECK_FALSE(swapped.equal);
  CHECK(swapped.witness.size() == r.witness.size());
}

TEST_CASE("bound repair w <= 1 is admissible") {
  auto m = oracle::load("client_db.json");
  auto repaired = m.network;
  repaired.automata[1].locations[1].invariant[0].bound = 1;
  CHECK(check_admissible(m.network, repaired).admissible);
}

TEST_CASE("desugared urgency keeps the untimed language") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto net = oracle::random_ta(rng, 1 + rng() % 2);
    for (auto& l : net.automata[0].locations) l.urgent = rng() % 3 == 0;
    auto plain = desugar_urgency(net);
    auto scale = clock_scale({&net, &plain});
    AdmissibilityOptions o;
    o.visible_internal = true;
    CHECK(equivalent(build_untimed(net, scale, o), build_untimed(plain, scale, o)).equal);
  }
}

TEST_CASE("exploration limit") {
  auto m = oracle::load("client_db.json");
  AdmissibilityOptions o;
  o.state_limit = 2;
  CHECK_THROWS_AS(build_untimed(m.network, clock_scale({&m.network}), o), ExplorationLimit);
}
