#pragma once

#include "tarep/fourier_motzkin.hpp"
#include "tarep/linear.hpp"
#include "tarep/tdt.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace tarep {

/// Φ_H = (∃δ. 𝒯) ∧ (∀δ. 𝒯 ⇒ Φ), computed as eliminate(𝒯) conjoined, per
/// disjunct D of ¬Φ, with the negation of eliminate(𝒯 ∧ D). `side` atoms are
/// added as they are. Throws QeTimeout.
Formula build_hard_constraint(const TdtConstraintSystem& sys, const std::vector<LinearAtom>& side = {},
                              std::size_t budget = kDefaultQeBudget);

/// Modified variables with their selector values. Rational variables carry
/// the placeholder value 1 inside the support.
struct MaxSmtCandidate {
  std::vector<std::size_t> support;  // ascending variable positions
  std::vector<std::size_t> values;   // full selector vector

  bool extends(const MaxSmtCandidate& other) const;
  bool operator==(const MaxSmtCandidate&) const = default;
};

struct MaxSmtLimits {
  std::size_t max_cardinality = static_cast<std::size_t>(-1);
  bool parallel = true;
};

/// Partial MaxSMT over soft constraints v_i = zero_i: candidates are visited
/// by increasing number of modified variables (fewest violated soft
/// constraints first), then lexicographically by support and values. The
/// search resumes where it stopped; blocked candidates and their extensions
/// are never returned again.
class MaxSmtSearch {
 public:
  /// True iff the hard constraint is satisfiable with exactly the support
  /// modified (everything else at its zero value).
  using Oracle = std::function<bool(const MaxSmtCandidate&)>;

  MaxSmtSearch(std::vector<std::size_t> domains, std::vector<std::size_t> zeros, Oracle oracle,
               MaxSmtLimits limits = {});

  std::optional<MaxSmtCandidate> next();
  void block(const MaxSmtCandidate& c) { blocked_.push_back(c); }

  std::size_t evaluated() const { return evaluated_; }
  std::size_t failures() const { return failures_; }  // oracle exceptions
  bool exhausted() const { return level_ > domains_.size() || level_ > limits_.max_cardinality; }

 private:
  void fill_level();
  bool is_blocked(const MaxSmtCandidate& c) const;

  std::vector<std::size_t> domains_, zeros_;
  Oracle oracle_;
  MaxSmtLimits limits_;
  std::size_t level_ = 0;
  std::vector<MaxSmtCandidate> pending_;
  std::size_t pending_pos_ = 0;
  std::vector<MaxSmtCandidate> blocked_;
  std::size_t evaluated_ = 0, failures_ = 0;
};

/// Concrete values for the modified rational variables `order` of a hard
/// constraint in which all other variation variables are already fixed.
/// Prefers integers of least magnitude (-k before +k), otherwise an interior
/// point; never 0. Returns nullopt if the formula is unsatisfiable.
std::optional<std::map<VarId, Rational>> sample_repair_values(const Formula& hard, std::size_t var_count,
                                                              const std::vector<VarId>& order,
                                                              std::size_t budget = kDefaultQeBudget);

/// Pick a value from a union of intervals following the rule above.
std::optional<Rational> pick_value(const std::vector<Interval>& intervals);

}  // namespace tarep
