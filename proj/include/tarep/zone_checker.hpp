#pragma once

#include "tarep/model.hpp"
#include "tarep/trace.hpp"

#include <cstddef>
#include <optional>

namespace tarep {

struct CheckOptions {
  std::size_t state_limit = 1'000'000;
};

struct Verdict {
  enum class Kind { Safe, Violated, Exhausted };

  Kind kind = Kind::Safe;
  std::optional<SymbolicTimedTrace> trace;  // set iff Violated
  std::size_t states = 0;                   // symbolic states stored
};

/// Breadth-first search of the zone graph for a state intersecting ¬prop.
/// The returned trace has minimum length; ties resolve to the
/// lexicographically smallest step sequence.
Verdict check(const Network& net, const Property& prop, const CheckOptions& options = {});

/// Does some delay-closed state at the end of the trace violate `prop`?
/// Exposed for the bounded-search oracle in tests.
bool violates_at(const Network& net, const Property& prop, const std::vector<NetworkTransition>& steps);

}  // namespace tarep
