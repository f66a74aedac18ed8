#pragma once

#include "tarep/linear.hpp"
#include "tarep/model.hpp"
#include "tarep/trace.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tarep {

enum class TdtBlock : std::uint8_t { C0, A, R, U, D, I, G };

std::string_view to_string(TdtBlock b);

/// Where an atom of the system came from.
struct AtomOrigin {
  TdtBlock block = TdtBlock::A;
  std::size_t step = 0;
  std::optional<std::size_t> constraint;  // global constraint index (I and G)
  ClockId clock;                          // clock involved (C0, R, D, I, G)
  bool with_delay = false;                // I: exit copy c_j + δ_j
};

struct TdtAtom {
  LinearAtom atom;
  AtomOrigin origin;
};

/// Per-encoding deviations from the model, used by the variation encoders.
struct EncodeOptions {
  bool eliminate_clocks = true;
  std::map<std::size_t, CmpOp> op_override;       // constraint index -> operator
  std::map<std::size_t, ClockId> clock_override;  // constraint index -> clock
  std::vector<std::size_t> varied_bounds;         // constraint indices receiving b_i + v_i
  std::optional<std::vector<std::vector<bool>>> resets;  // [step 0..n-1][clock]
  std::optional<std::vector<bool>> urgent;               // [step 0..n]
};

/// The constraint system of a symbolic timed trace. Variables are laid out as
/// δ_0..δ_n, then bound variation variables, then (unless eliminated) the
/// clock copies c_j for j = 0..n+1.
struct TdtConstraintSystem {
  std::size_t steps = 0;
  VarTable vars;
  std::vector<VarId> delays;
  std::map<std::size_t, VarId> bound_vars;          // constraint index -> v_i
  std::vector<std::vector<VarId>> clock_vars;       // [j][clock], empty once eliminated
  std::vector<std::vector<LinearExpr>> clock_terms;  // [j][clock] value of c_j
  std::vector<std::vector<bool>> resets;            // effective resets per step
  std::vector<bool> urgent;                         // effective urgency per step
  std::vector<TdtAtom> atoms;
  std::vector<std::vector<LinearAtom>> violation;   // DNF of ¬Φ over clocks at n+1

  bool eliminated() const { return clock_vars.empty(); }
  std::vector<LinearAtom> conjunction() const;
  std::vector<LinearAtom> block(TdtBlock b) const;
  /// Variables quantified away in Φ_H: delays and clock copies.
  std::vector<VarId> trace_variables() const;

  Formula formula() const;            // 𝒯
  Formula violation_formula() const;  // ¬Φ
};

/// Global constraint index of each invariant / guard atom.
struct ConstraintIndexer {
  explicit ConstraintIndexer(const Network& net);
  std::size_t invariant(std::size_t automaton, std::size_t location, std::size_t position) const;
  std::size_t guard(std::size_t automaton, std::size_t transition, std::size_t position) const;

  std::vector<std::vector<std::size_t>> inv_offset, guard_offset;
};

TdtConstraintSystem encode(const Network& net, const SymbolicTimedTrace& trace, const Property& prop,
                           const EncodeOptions& options = {});

/// Substitutes every clock copy by its delay sum since the last reset and
/// drops C0, R and D. The result ranges over δ (and variation) variables only.
TdtConstraintSystem eliminate_clock_variables(const TdtConstraintSystem& sys);

/// 𝒯 satisfiable.
bool feasible(const TdtConstraintSystem& sys);
/// 𝒯 ∧ ¬Φ satisfiable.
bool violation_feasible(const TdtConstraintSystem& sys);
/// A realization of 𝒯 ∧ ¬Φ, when one exists.
std::optional<Assignment> violating_realization(const TdtConstraintSystem& sys);

std::string to_smtlib(const TdtConstraintSystem& sys, bool with_violation);

}  // namespace tarep
