#pragma once

#include "tarep/linear.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace tarep {

/// Raised when an elimination produces more intermediate atoms than allowed.
class QeTimeout : public std::runtime_error {
 public:
  explicit QeTimeout(std::size_t atoms)
      : std::runtime_error("quantifier elimination budget exceeded after " + std::to_string(atoms) + " atoms"),
        atoms_(atoms) {}
  std::size_t atoms() const { return atoms_; }

 private:
  std::size_t atoms_;
};

inline constexpr std::size_t kDefaultQeBudget = 50000;

/// Projects the conjunction onto the variables not in `vars`. Equalities are
/// substituted first; remaining variables are eliminated one by one, cheapest
/// (fewest lower*upper pairs) first, with dominance pruning after each step.
/// An unsatisfiable projection is returned as the single atom 0 < 0.
std::vector<LinearAtom> eliminate(std::vector<LinearAtom> conj, const std::set<VarId>& vars,
                                  std::size_t budget = kDefaultQeBudget);

/// Removes constant-true atoms, duplicates and atoms dominated by a tighter
/// atom over the same left-hand side. Detects constant-false atoms.
std::vector<LinearAtom> prune(std::vector<LinearAtom> conj);

/// Closed/open bounds of one variable as implied by a conjunction over it alone.
struct Interval {
  std::optional<Rational> lower, upper;
  bool lower_strict = false, upper_strict = false;
  bool empty = false;

  bool contains(const Rational& x) const;
};

/// Interval of `var` in the projection of `conj` onto `var`.
Interval project_interval(const std::vector<LinearAtom>& conj, VarId var, std::size_t budget = kDefaultQeBudget);

}  // namespace tarep
