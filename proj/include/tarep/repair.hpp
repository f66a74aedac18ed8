#pragma once

#include "tarep/admissibility.hpp"
#include "tarep/fourier_motzkin.hpp"
#include "tarep/maxsmt.hpp"
#include "tarep/variation.hpp"
#include "tarep/zone_checker.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tarep {

/// The model no longer matches what a candidate was computed against.
class AnchorMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One syntactic change with enough of the old state to check and undo it.
struct RepairEdit {
  RepairKind kind = RepairKind::Bound;

  // bound / operator / clockref: global constraint index and old -> new
  std::size_t constraint = 0;
  ClockConstraint before, after;

  // reset: clock toggled on one transition
  AutomatonId automaton;
  std::size_t transition = 0;
  ClockId clock;
  bool add = false;
  std::size_t position = 0;  // index in the reset list (restores order on revert)

  // urgency
  LocationId location;
  bool urgent = false;  // new flag

  bool operator==(const RepairEdit&) const = default;
};

struct RepairCandidate {
  RepairKind kind = RepairKind::Bound;
  std::vector<RepairEdit> edits;
  MaxSmtCandidate raw;
  std::vector<std::string> assignment;  // "name=value" per modified variable

  /// Anchors touched (constraint indices, or automaton/transition/location keys).
  std::vector<std::string> anchors(const Network& net) const;
  /// One line per edit, e.g. "#3 w <= 2 -> w <= 1".
  std::vector<std::string> modifications(const Network& net) const;
};

/// Rewrites the anchored elements; throws AnchorMismatch if the current
/// value is not the one the edit expects.
Network apply(const Network& net, const RepairCandidate& c);
Network revert(const Network& repaired, const RepairCandidate& c);

/// Re-encoding the trace against `repaired` gives a feasible 𝒯' with 𝒯' ∧ ¬Φ
/// infeasible.
bool satisfies_contract(const Network& repaired, const SymbolicTimedTrace& trace, const Property& prop);

struct RepairOptions {
  std::size_t max_repairs = 64;
  std::size_t qe_budget = kDefaultQeBudget;
  std::size_t max_modifications = static_cast<std::size_t>(-1);
  bool parallel = true;
  bool check_admissibility = true;
  AdmissibilityOptions admissibility;
  CheckOptions check;
};

struct RepairRecord {
  RepairCandidate candidate;
  std::optional<bool> admissible;  // nullopt: check skipped or over budget
  std::vector<std::string> witness;
  std::string accepted_by;
  bool contract_ok = false;
};

enum class Termination : std::uint8_t { Exhausted, Budget, NoRepair, NoRepairNeeded, CandidateCap };

std::string_view to_string(Termination t);

struct RepairRun {
  RepairKind kind = RepairKind::Bound;
  std::optional<SymbolicTimedTrace> trace;
  std::vector<RepairRecord> records;
  Termination termination = Termination::NoRepair;
  std::size_t timeouts = 0;        // QE budget overruns
  std::size_t variable_count = 0;  // variables of the varied system
  std::size_t constraint_count = 0;  // atoms of the hard constraint / varied system
  std::size_t evaluated = 0;       // MaxSMT assignments tried

  std::size_t admissible_count() const;
};

/// Steps 0–4: obtain a TDT (model-checking when `trace` is absent), vary,
/// enumerate minimal repairs with blocking, apply and check each.
RepairRun run_repair(const Network& net, const Property& prop, RepairKind kind,
                     std::optional<SymbolicTimedTrace> trace = std::nullopt, const RepairOptions& options = {});

}  // namespace tarep
