#pragma once

#include "tarep/linear.hpp"

#include <optional>
#include <vector>

namespace tarep {

/// Exact feasibility of a conjunction of linear atoms over free rational
/// variables 0..var_count-1. Returns a satisfying point, strict atoms included.
///
/// Two-phase tableau simplex with Bland's rule. Strict rows share one slack t
/// (a.x + t <= b, t <= 1); the system is feasible iff max t > 0.
std::optional<Assignment> solve_conjunction(const std::vector<LinearAtom>& atoms, std::size_t var_count);

inline bool satisfiable(const std::vector<LinearAtom>& atoms, std::size_t var_count) {
  return solve_conjunction(atoms, var_count).has_value();
}

/// Satisfiability of an arbitrary negation-free formula by depth-first case
/// splitting on disjunctions, pruning with the conjunction solver.
std::optional<Assignment> solve_formula(const Formula& f, std::size_t var_count);

/// Every conjunction of atoms selected by the disjunctive normal form of `f`
/// that is satisfiable, in deterministic order. Stops after `limit` branches.
std::vector<std::vector<LinearAtom>> satisfiable_branches(const Formula& f, std::size_t var_count,
                                                          std::size_t limit = 4096);

}  // namespace tarep
