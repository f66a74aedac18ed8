#include "oracles.hpp"

#include "tarep/report.hpp"

#include <doctest.h>

using namespace tarep;

TEST_CASE("apply and revert") {
  auto m = oracle::load("client_db.json");
  RepairCandidate c;
  c.kind = RepairKind::Bound;
  RepairEdit e;
  e.kind = RepairKind::Bound;
  e.constraint = 2;
  e.before = parse_atom(m.network, "w <= 2");
  e.after = parse_atom(m.network, "w <= 1");
  c.edits = {e};
  auto r = apply(m.network, c);
  CHECK(serialize_model(r, m.property).find("\"w <= 1\"") != std::string::npos);
  CHECK(c.modifications(m.network) == std::vector<std::string>{"#3 w <= 2 -> w <= 1"});
  CHECK(c.anchors(m.network) == std::vector<std::string>{"#3"});
  CHECK(revert(r, c) == m.network);
  CHECK_THROWS_AS(apply(r, c), AnchorMismatch);

  RepairEdit op = e;
  op.kind = RepairKind::Operator;
  op.constraint = 4;
  op.before = parse_atom(m.network, "w >= 1");
  op.after = parse_atom(m.network, "w < 1");
  RepairCandidate oc{RepairKind::Operator, {op}, {}, {}};
  auto ro = apply(m.network, oc);
  CHECK(describe(ro, ro.automata[1].transitions[1].guard[0]) == "w < 1");
}

TEST_CASE("reset edits keep order on revert") {
  auto m = oracle::load("client_db.json");
  auto x = *m.network.find_clock("x"), y = *m.network.find_clock("y");
  RepairEdit add;
  add.kind = RepairKind::Reset;
  add.automaton = AutomatonId(1);
  add.transition = 1;
  add.clock = x;
  add.add = true;
  add.position = 1;
  RepairEdit remove = add;
  remove.clock = y;
  remove.add = false;
  remove.position = 0;
  RepairCandidate c{RepairKind::Reset, {add, remove}, {}, {}};
  auto r = apply(m.network, c);
  CHECK(r.automata[1].transitions[1].resets == std::vector<ClockId>{x});
  CHECK(revert(r, c) == m.network);
}

TEST_CASE("safe model needs no repair") {
  auto m = oracle::load("ping_pong_safe.json");
  auto run = run_repair(m.network, m.property, RepairKind::Bound);
  CHECK(run.termination == Termination::NoRepairNeeded);
  CHECK(run.records.empty());
}

TEST_CASE("candidates satisfy the contract by both solvers") {
  for (const auto& e : oracle::violating_corpus()) {
    CAPTURE(e.name);
    for (auto kind : kAllRepairKinds) {
      auto run = run_repair(e.model.network, e.model.property, kind);
      REQUIRE(run.trace);
      for (const auto& rec : run.records) {
        auto repaired = apply(e.model.network, rec.candidate);
        CHECK(rec.contract_ok);
        CHECK(oracle::fm_contract(repaired, *run.trace, e.model.property));
      }
    }
  }
}

TEST_CASE("report golden output") {
  auto m = oracle::load("client_db.json");
  CHECK(format_report(m.network, m.property, {}) ==
        "# repair report\n# property: x <= 4 || !@client.serReceiving\n");

  auto run = run_repair(m.network, m.property, RepairKind::Urgency);
  RunArtifacts files{{"repair_urgent_001.json", "repair_urgent_002.json"},
                     {"witness_urgent_001.json", "witness_urgent_002.json"}};
  auto text = format_report(m.network, m.property, {run}, {files});
  CHECK(text ==
        "# repair report\n"
        "# property: x <= 4 || !@client.serReceiving\n"
        "# kind=urgent trace_length=3 repairs=2 admissible=0 timeouts=0 variables=10 constraints=38 termination=exhausted\n"
        "urgent 001 anchors=@client.serReceiving values=vuv_client_serReceiving=1 admissible=no contract=ok "
        "model=repair_urgent_001.json witness=witness_urgent_001.json\n"
        "    client.serReceiving: make urgent\n"
        "    distinguishing word: req ser ack (accepted by original)\n"
        "urgent 002 anchors=@db.reqAwaiting values=vuv_db_reqAwaiting=1 admissible=no contract=ok "
        "model=repair_urgent_002.json witness=witness_urgent_002.json\n"
        "    db.reqAwaiting: make urgent\n"
        "    distinguishing word: req ser ack (accepted by original)\n");
}

TEST_CASE("written artifacts") {
  auto m = oracle::load("client_db.json");
  auto dir = std::filesystem::temp_directory_path() / "tarep_unit_report";
  std::filesystem::remove_all(dir);
  auto run = run_repair(m.network, m.property, RepairKind::Bound);
  write_report(m.network, m.property, {run}, dir);
  CHECK(std::filesystem::exists(dir / "report.txt"));
  CHECK(std::filesystem::exists(dir / "repair_bound_001.json"));
  CHECK(std::filesystem::exists(dir / "repair_bound_002.json"));
  auto second = load_model(dir / "repair_bound_002.json");
  CHECK(describe(second.network, second.network.automata[1].locations[1].invariant[0]) == "w <= 1");
  std::filesystem::remove_all(dir);
}
