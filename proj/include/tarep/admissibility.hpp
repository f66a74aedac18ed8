#pragma once

#include "tarep/model.hpp"
#include "tarep/zone_graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tarep {

/// Raised when a construction exceeds its state budget.
class ExplorationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdmissibilityOptions {
  /// Label internal transitions with their action (or "tau") instead of ε.
  bool visible_internal = false;
  std::size_t state_limit = 200'000;
  std::size_t pair_limit = 200'000;
};

/// Finite automaton over action labels; every state accepts. Label -1 is ε.
struct UntimedAutomaton {
  std::vector<std::string> alphabet;  // sorted
  std::size_t initial = 0;
  std::vector<std::vector<std::pair<int, std::size_t>>> edges;

  std::size_t size() const { return edges.size(); }
};

/// Untimed abstraction of the extrapolated zone graph under `scale`.
UntimedAutomaton build_untimed(const Network& net, const ClockScale& scale, const AdmissibilityOptions& options = {});

/// Is the word a prefix of some run?
bool accepts(const UntimedAutomaton& a, const std::vector<std::string>& word);

struct Equivalence {
  bool equal = true;
  std::vector<std::string> witness;  // shortest word in exactly one language
  bool witness_in_first = false;
};

/// Language equivalence after ε-closure: on-the-fly subset construction with
/// Hopcroft–Karp union-find, then a pair BFS for the shortest witness.
Equivalence equivalent(const UntimedAutomaton& a, const UntimedAutomaton& b, const AdmissibilityOptions& options = {});

struct Admissibility {
  bool admissible = true;
  std::vector<std::string> witness;
  std::string accepted_by;  // "original" or "repaired"
};

/// Same untimed language, with one extrapolation constant for both networks.
Admissibility check_admissible(const Network& original, const Network& repaired,
                               const AdmissibilityOptions& options = {});

}  // namespace tarep
