#pragma once

#include "tarep/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tarep {

struct FiredTransition {
  AutomatonId automaton;
  std::size_t transition = 0;

  auto operator<=>(const FiredTransition&) const = default;
};

/// One network step: a single internal transition or a sender/receiver pair,
/// listed in automaton order.
struct NetworkTransition {
  std::vector<FiredTransition> parts;

  auto operator<=>(const NetworkTransition&) const = default;
};

/// θ_0..θ_{n-1} with the visited location vectors λ_0..λ_n and, when known, a
/// concrete realization δ_0..δ_n.
struct SymbolicTimedTrace {
  std::vector<NetworkTransition> steps;
  std::vector<LocationVector> locations;
  std::vector<Rational> delays;

  std::size_t length() const { return steps.size(); }
  bool operator==(const SymbolicTimedTrace&) const = default;
};

/// Observable label of a network transition: the channel name for a
/// handshake, the action (or "tau") for an internal move.
std::string step_label(const Network& net, const NetworkTransition& step);

/// Rebuilds λ_0..λ_n from the fired transitions. Returns nullopt if a
/// transition does not leave the current location of its automaton or a
/// handshake is malformed.
std::optional<std::vector<LocationVector>> replay_locations(const Network& net,
                                                            const std::vector<NetworkTransition>& steps);

}  // namespace tarep
