// Command-line front end: check, repair, seed, admissible.

#include "tarep/model_io.hpp"
#include "tarep/report.hpp"
#include "tarep/seeder.hpp"
#include "tarep/zone_checker.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace tarep;

constexpr int kOk = 0;
constexpr int kFound = 1;  // violation (check) or inadmissible (admissible)
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::vector<RepairKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<RepairKind> out;
  for (const auto& n : names) {
    if (n == "all") return {kAllRepairKinds.begin(), kAllRepairKinds.end()};
    auto k = parse_repair_kind(n);
    if (!k) throw CLI::ValidationError("--kind", "unknown repair kind '" + n + "'");
    out.push_back(*k);
  }
  return out;
}

void print_warnings(const ModelFile& m) {
  for (const auto& d : m.warnings) std::cerr << "warning: " << d.path << ": " << d.message << "\n";
}

int cmd_check(const std::string& model_path, const std::string& trace_out) {
  auto m = load_model(model_path);
  print_warnings(m);
  auto v = check(m.network, m.property);
  switch (v.kind) {
    case Verdict::Kind::Safe:
      std::cout << "no violation found (" << v.states << " symbolic states)\n";
      return kOk;
    case Verdict::Kind::Exhausted:
      std::cout << "state limit reached after " << v.states << " symbolic states\n";
      return kBudget;
    case Verdict::Kind::Violated: break;
  }
  std::cout << "property violated; trace of length " << v.trace->length() << ":\n";
  for (const auto& s : v.trace->steps) std::cout << "  " << step_label(m.network, s) << "\n";
  if (!trace_out.empty()) write_file(trace_out, serialize_trace(m.network, *v.trace));
  return kFound;
}

struct RepairArgs {
  std::string model, tdt, out, dump_smt;
  std::vector<std::string> kinds{"all"};
  std::size_t max_repairs = 64;
  std::size_t qe_budget = kDefaultQeBudget;
  std::size_t max_modifications = 0;
  bool serial = false;
};

int cmd_repair(const RepairArgs& a) {
  auto m = load_model(a.model);
  print_warnings(m);
  std::optional<SymbolicTimedTrace> trace;
  if (!a.tdt.empty()) trace = load_trace(m.network, a.tdt);

  RepairOptions opts;
  opts.max_repairs = a.max_repairs;
  opts.qe_budget = a.qe_budget;
  if (a.max_modifications) opts.max_modifications = a.max_modifications;
  opts.parallel = !a.serial;

  std::vector<RepairRun> runs;
  bool budget = false;
  for (auto kind : parse_kinds(a.kinds)) {
    auto run = run_repair(m.network, m.property, kind, trace, opts);
    if (!trace && run.trace) trace = run.trace;  // reuse the TDT for the other kinds
    if (run.termination == Termination::NoRepairNeeded) {
      std::cout << "no violation found; nothing to repair\n";
      return kOk;
    }
    budget = budget || run.termination == Termination::Budget;
    std::cout << to_string(kind) << ": " << run.records.size() << " repair(s), " << run.admissible_count()
              << " admissible (" << to_string(run.termination) << ")\n";
    for (const auto& rec : run.records) {
      std::cout << "  " << (rec.admissible ? (*rec.admissible ? "[admissible]   " : "[inadmissible] ") : "[unknown]      ");
      for (std::size_t i = 0; i < rec.candidate.edits.size(); ++i)
        std::cout << (i ? "; " : "") << rec.candidate.modifications(m.network)[i];
      std::cout << "\n";
    }
    if (!a.dump_smt.empty() && run.trace) {
      VariedSystem vs(m.network, *run.trace, m.property, kind);
      auto enc = vs.encoded();
      std::string smt = "; " + std::string(to_string(kind)) + " variation\n" + to_smtlib(Formula::conj({enc.system, enc.violation}), enc.vars);
      write_file(std::filesystem::path(a.dump_smt) / ("tdt_" + std::string(to_string(kind)) + ".smt2"), smt);
    }
    runs.push_back(std::move(run));
  }
  if (!a.out.empty()) {
    auto path = write_report(m.network, m.property, runs, a.out);
    std::cout << "report written to " << path.string() << "\n";
  }
  return budget ? kBudget : kOk;
}

struct SeedArgs {
  std::string model, out;
  std::vector<std::string> kinds{"all"};
  std::vector<std::string> repair_kinds{"all"};
  std::size_t max_repairs = 64;
  std::size_t max_modifications = 0;
  bool serial = false;
};

int cmd_seed(const SeedArgs& a) {
  auto m = load_model(a.model);
  print_warnings(m);
  CampaignOptions opts;
  opts.repair_kinds = parse_kinds(a.repair_kinds);
  opts.repair.max_repairs = a.max_repairs;
  if (a.max_modifications) opts.repair.max_modifications = a.max_modifications;
  opts.parallel = !a.serial;
  auto c = campaign(m.network, m.property, parse_kinds(a.kinds), opts);
  auto csv = to_csv(c.rows);
  std::cout << csv;
  if (!a.out.empty()) {
    std::filesystem::path dir(a.out);
    write_file(dir / "campaign.csv", csv);
    write_file(dir / "campaign.txt", format_campaign(m.network, m.property, c));
  }
  return kOk;
}

int cmd_admissible(const std::string& a_path, const std::string& b_path, bool visible_internal) {
  auto a = load_model(a_path);
  auto b = load_model(b_path);
  AdmissibilityOptions opts;
  opts.visible_internal = visible_internal;
  Admissibility r;
  try {
    r = check_admissible(a.network, b.network, opts);
  } catch (const ExplorationLimit& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  }
  if (r.admissible) {
    std::cout << "same untimed language\n";
    return kOk;
  }
  std::cout << "untimed languages differ; witness accepted only by the " << (r.accepted_by == "original" ? "first" : "second")
            << " model:\n  ";
  for (const auto& l : r.witness) std::cout << l << " ";
  std::cout << "\n";
  return kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timed automata model checking and repair"};
  app.require_subcommand(1);

  std::string check_model, check_trace;
  auto* check_cmd = app.add_subcommand("check", "model-check the property of a model");
  check_cmd->add_option("model", check_model, "model file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--trace-out", check_trace, "write the violating trace here");

  RepairArgs ra;
  auto* repair_cmd = app.add_subcommand("repair", "compute repairs for a violating trace");
  repair_cmd->add_option("model", ra.model, "model file")->required()->check(CLI::ExistingFile);
  repair_cmd->add_option("--tdt", ra.tdt, "trace file (default: model-check for one)")->check(CLI::ExistingFile);
  repair_cmd->add_option("--kind", ra.kinds, "bound|operator|clockref|reset|urgent|all")->delimiter(',');
  repair_cmd->add_option("--out", ra.out, "directory for repaired models and the report");
  repair_cmd->add_option("--max-repairs", ra.max_repairs, "repairs per kind");
  repair_cmd->add_option("--qe-budget", ra.qe_budget, "atom budget per quantifier elimination");
  repair_cmd->add_option("--max-modifications", ra.max_modifications, "largest modification set tried (0 = no limit)");
  repair_cmd->add_option("--dump-smt", ra.dump_smt, "directory for SMT-LIB2 dumps of the varied systems");
  repair_cmd->add_flag("--serial", ra.serial, "evaluate candidates serially");

  SeedArgs sa;
  auto* seed_cmd = app.add_subcommand("seed", "fault-seeding campaign");
  seed_cmd->add_option("model", sa.model, "model file")->required()->check(CLI::ExistingFile);
  seed_cmd->add_option("--kinds", sa.kinds, "mutation kinds")->delimiter(',');
  seed_cmd->add_option("--repair-kinds", sa.repair_kinds, "repair analyses run on each violating mutant")->delimiter(',');
  seed_cmd->add_option("--out", sa.out, "directory for campaign.csv and campaign.txt");
  seed_cmd->add_option("--max-repairs", sa.max_repairs, "repairs per kind and mutant");
  seed_cmd->add_option("--max-modifications", sa.max_modifications, "largest modification set tried (0 = no limit)");
  seed_cmd->add_flag("--serial", sa.serial, "process mutants serially");

  std::string adm_a, adm_b;
  bool visible = false;
  auto* adm_cmd = app.add_subcommand("admissible", "compare the untimed languages of two models");
  adm_cmd->add_option("first", adm_a, "model file")->required()->check(CLI::ExistingFile);
  adm_cmd->add_option("second", adm_b, "model file")->required()->check(CLI::ExistingFile);
  adm_cmd->add_flag("--visible-internal", visible, "treat internal transitions as observable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check_model, check_trace);
    if (*repair_cmd) return cmd_repair(ra);
    if (*seed_cmd) return cmd_seed(sa);
    if (*adm_cmd) return cmd_admissible(adm_a, adm_b, visible);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";  // carries line:column when known
    return kUsage;
  } catch (const QeTimeout& e) {
    std::cerr << "quantifier elimination budget exceeded\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
