#include "oracles.hpp"

#include "tarep/seeder.hpp"
#include "tarep/simplex.hpp"

#include <doctest.h>

using namespace tarep;

namespace {

SymbolicTimedTrace bundle_trace(const ModelFile& m) { return *check(m.network, m.property).trace; }

}  // namespace

TEST_CASE("running example trace system") {
  auto m = oracle::load("client_db.json");
  auto t = bundle_trace(m);
  EncodeOptions explicit_clocks;
  explicit_clocks.eliminate_clocks = false;
  auto sys = encode(m.network, t, m.property, explicit_clocks);
  CHECK(feasible(sys));
  CHECK(violation_feasible(sys));

  // The w <= 2 invariant (#3) is encoded at entry and at exit of the delay.
  int entry = 0, exit = 0;
  for (const auto& a : sys.atoms)
    if (a.origin.block == TdtBlock::I && a.origin.constraint == 2) (a.origin.with_delay ? exit : entry)++;
  CHECK(entry >= 1);
  CHECK(exit >= 1);

  auto elim = eliminate_clock_variables(sys);
  CHECK(elim.eliminated());
  CHECK(elim.vars.size() == t.length() + 1);  // delays only
  CHECK(feasible(elim) == feasible(sys));
  CHECK(violation_feasible(elim) == violation_feasible(sys));

  auto bad = elim;
  TdtAtom neg{LinearAtom::compare(LinearExpr::variable(elim.delays[0]), CmpOp::Lt, LinearExpr::value(0)), {}};
  bad.atoms.push_back(neg);
  CHECK_FALSE(feasible(bad));
}

TEST_CASE("elimination substitutes delay sums") {
  auto m = oracle::load("client_db.json");
  auto t = bundle_trace(m);
  auto sys = encode(m.network, t, m.property);
  auto x = *m.network.find_clock("x");
  // x is reset on the first step only: at n+1 it equals δ1 + δ2 + δ3.
  const auto& term = sys.clock_terms.back()[x.index()];
  CHECK(term.terms.size() == 3);
  CHECK(term.coefficient(sys.delays[0]) == 0);
  for (std::size_t j = 1; j <= 3; ++j) CHECK(term.coefficient(sys.delays[j]) == 1);
}

TEST_CASE("empty trace") {
  auto m = oracle::load("client_db.json");
  SymbolicTimedTrace t;
  t.locations = {initial_locations(m.network)};
  auto sys = encode(m.network, t, m.property);
  CHECK(sys.delays.size() == 1);
  CHECK(feasible(sys));
  CHECK_FALSE(violation_feasible(sys));  // client is not in serReceiving
}

TEST_CASE("eliminated and explicit systems agree on mutant traces") {
  auto m = oracle::load("client_db.json");
  auto mutants = seed(m.network, {RepairKind::Bound, RepairKind::Reset});
  int checked = 0;
  for (std::size_t i = 0; i < mutants.size() && checked < 20; i += 3) {
    auto v = check(mutants[i].network, m.property);
    if (!v.trace) continue;
    ++checked;
    EncodeOptions o;
    o.eliminate_clocks = false;
    auto a = encode(mutants[i].network, *v.trace, m.property, o);
    auto b = encode(mutants[i].network, *v.trace, m.property);
    CHECK(feasible(a) == feasible(b));
    CHECK(violation_feasible(a) == violation_feasible(b));
  }
  CHECK(checked >= 10);
}

TEST_CASE("variation encoders: sizes and zero meaning") {
  auto m = oracle::load("client_db.json");
  auto t = bundle_trace(m);
  auto base = encode(m.network, t, m.property);

  VariedSystem bound(m.network, t, m.property, RepairKind::Bound);
  // every indexed constraint met on the trace gets one variable
  CHECK(bound.variables().size() == bound.materialize({}).bound_vars.size());

  VariedSystem clockref(m.network, t, m.property, RepairKind::ClockRef);
  for (const auto& v : clockref.variables()) CHECK(v.domain == 4);

  VariedSystem op(m.network, t, m.property, RepairKind::Operator);
  for (const auto& v : op.variables()) CHECK(v.domain == kCmpOpCount);

  for (auto kind : kAllRepairKinds) {
    CAPTURE(to_string(kind));
    VariedSystem vs(m.network, t, m.property, kind);
    auto zero = vs.materialize(vs.zero_selectors());
    if (kind == RepairKind::Bound) {
      std::map<VarId, Rational> fixed;
      for (auto [c, v] : zero.bound_vars) fixed[v] = 0;
      CHECK(solve_formula(zero.formula().fix(fixed), zero.vars.size()).has_value() == feasible(base));
    } else {
      CHECK(feasible(zero) == feasible(base));
      CHECK(violation_feasible(zero) == violation_feasible(base));
    }
  }
}

TEST_CASE("operator branches are exclusive") {
  auto m = oracle::load("client_db.json");
  auto t = bundle_trace(m);
  VariedSystem op(m.network, t, m.property, RepairKind::Operator);
  auto enc = op.encoded();
  REQUIRE(!enc.selectors.empty());
  // A selector outside 0..4 admits no branch.
  std::map<VarId, Rational> fixed;
  auto zeros = op.zero_selectors();
  for (std::size_t i = 0; i < enc.selectors.size(); ++i) fixed[enc.selectors[i]] = Rational(static_cast<long>(zeros[i]));
  CHECK(solve_formula(enc.system.fix(fixed), enc.vars.size()).has_value());
  fixed[enc.selectors[0]] = Rational(7);
  CHECK_FALSE(solve_formula(enc.system.fix(fixed), enc.vars.size()).has_value());
  fixed[enc.selectors[0]] = Rational(1, 2);
  CHECK_FALSE(solve_formula(enc.system.fix(fixed), enc.vars.size()).has_value());
}
