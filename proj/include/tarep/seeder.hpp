#pragma once

#include "tarep/repair.hpp"

#include <string>
#include <vector>

namespace tarep {

/// A single-edit mutant. Mutation kinds mirror the repair kinds.
struct Mutant {
  RepairKind kind = RepairKind::Bound;
  RepairEdit edit;
  Network network;
  std::string description;
};

/// Bound deltas applied to every constraint: -10, -1, +1, ceil(M/10), +M.
std::vector<Rational> bound_deltas(const Network& net);

/// All single-edit mutants of the given kinds, in kind order, then document
/// order. Bounds clamp at 0; duplicates and identities are dropped.
std::vector<Mutant> seed(const Network& net, const std::vector<RepairKind>& kinds);

struct MutantResult {
  Verdict::Kind verdict = Verdict::Kind::Safe;
  std::size_t trace_length = 0;
  std::vector<RepairRun> runs;  // one per repair kind, empty unless violated
  std::size_t errors = 0;       // runs aborted by a budget or exception
};

/// One results table row: the whole campaign ("model") or one repair kind.
struct CampaignRow {
  std::string scope;
  std::size_t seeds = 0;       // Sd
  std::size_t tdts = 0;        // T
  std::size_t max_length = 0;  // Ln
  std::size_t repairs = 0;     // R
  std::size_t admissible = 0;  // A
  std::size_t solved = 0;      // S: TDTs with at least one admissible repair
  std::size_t timeouts = 0;    // O
  std::size_t max_vars = 0;    // Vr
  std::size_t max_atoms = 0;   // Cn
};

struct CampaignOptions {
  std::vector<RepairKind> repair_kinds{kAllRepairKinds.begin(), kAllRepairKinds.end()};
  RepairOptions repair;
  bool parallel = true;  // mutants in parallel; each repair run stays serial
};

struct Campaign {
  std::vector<Mutant> mutants;
  std::vector<MutantResult> results;
  std::vector<CampaignRow> rows;
};

Campaign campaign(const Network& net, const Property& prop, const std::vector<RepairKind>& seed_kinds,
                  const CampaignOptions& options = {});

/// Aggregates per-mutant results into the table rows.
std::vector<CampaignRow> tabulate(const std::vector<MutantResult>& results, const std::vector<RepairKind>& repair_kinds);

std::string to_csv(const std::vector<CampaignRow>& rows);

/// Per-mutant detail listing (no timings, so reruns are byte-identical).
std::string format_campaign(const Network& net, const Property& prop, const Campaign& c);

}  // namespace tarep
