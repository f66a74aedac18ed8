#include "oracles.hpp"

#include "tarep/simplex.hpp"

#include <doctest.h>

using namespace tarep;

namespace {

Interval iv(std::optional<Rational> lo, bool ls, std::optional<Rational> hi, bool hs) {
  Interval i;
  i.lower = lo;
  i.lower_strict = ls;
  i.upper = hi;
  i.upper_strict = hs;
  return i;
}

}  // namespace

TEST_CASE("value sampling") {
  CHECK(*pick_value({iv(Rational(-2), true, Rational(-1, 2), false)}) == -1);
  CHECK(*pick_value({iv(Rational(3, 2), false, Rational(3, 2), false)}) == Rational(3, 2));
  CHECK(*pick_value({iv(Rational(0), true, Rational(1), true)}) == Rational(1, 2));
  CHECK(*pick_value({iv(Rational(-3), false, Rational(3), false)}) == -1);  // never 0, -k first
  CHECK(*pick_value({iv(std::nullopt, false, std::nullopt, false)}) == -1);
  Interval empty;
  empty.empty = true;
  CHECK_FALSE(pick_value({empty}));
}

TEST_CASE("search visits supports by cardinality and honours blocking") {
  // Oracle: any support containing variable 1, or containing both 0 and 2.
  auto oracle = [](const MaxSmtCandidate& c) {
    auto has = [&](std::size_t i) { return std::find(c.support.begin(), c.support.end(), i) != c.support.end(); };
    return has(1) || (has(0) && has(2));
  };
  MaxSmtSearch s({2, 2, 2}, {0, 0, 0}, oracle, {.max_cardinality = 3, .parallel = false});
  auto a = s.next();
  REQUIRE(a);
  CHECK(a->support == std::vector<std::size_t>{1});
  s.block(*a);
  auto b = s.next();
  REQUIRE(b);
  CHECK(b->support == std::vector<std::size_t>{0, 2});
  s.block(*b);
  CHECK_FALSE(s.next());
  CHECK(s.exhausted());
}

TEST_CASE("single-valued selectors are never modified") {
  MaxSmtSearch s({1, 3}, {0, 0}, [](const MaxSmtCandidate&) { return true; }, {.parallel = false});
  auto a = s.next();
  REQUIRE(a);
  CHECK(a->support.empty());
  s.block(*a);
  CHECK_FALSE(s.next());
}

TEST_CASE("serial and parallel search agree") {
  auto oracle = [](const MaxSmtCandidate& c) { return c.values[0] + c.values[2] >= 3 || c.values[3] == 2; };
  auto run = [&](bool parallel) {
    MaxSmtSearch s({3, 5, 2, 3}, {1, 0, 0, 0}, oracle, {.parallel = parallel});
    std::vector<MaxSmtCandidate> out;
    while (auto c = s.next()) {
      out.push_back(*c);
      s.block(*c);
    }
    return out;
  };
  auto a = run(false);
  CHECK(!a.empty());
  CHECK(a == run(true));
}

TEST_CASE("hard constraint of the running example") {
  auto m = oracle::load("client_db.json");
  auto t = *check(m.network, m.property).trace;
  VariedSystem vs(m.network, t, m.property, RepairKind::Bound);
  auto sys = vs.materialize(vs.zero_selectors());
  auto hard = build_hard_constraint(sys, vs.side_conditions(sys));
  std::map<VarId, Rational> zeros, w_minus_one;
  for (auto [c, v] : sys.bound_vars) {
    zeros[v] = 0;
    w_minus_one[v] = c == 2 ? -1 : 0;
  }
  CHECK_FALSE(solve_formula(hard.fix(zeros), sys.vars.size()));
  CHECK(solve_formula(hard.fix(w_minus_one), sys.vars.size()));
  CHECK(oracle::exhaustive_min_modifications(vs) == 1u);
}
