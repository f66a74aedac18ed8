#pragma once

#include "tarep/dbm.hpp"
#include "tarep/model.hpp"
#include "tarep/trace.hpp"

#include <optional>
#include <vector>

namespace tarep {

/// Rational constants are mapped to integers by a common factor; k is the
/// scaled extrapolation constant.
struct ClockScale {
  Rational factor = 1;
  std::int64_t k = 0;
};

/// Factor = lcm of all denominators, k = largest scaled constant, over every
/// listed network plus `extra` (e.g. property constants).
ClockScale clock_scale(const std::vector<const Network*>& nets, const std::vector<Rational>& extra = {});

struct SymbolicState {
  LocationVector locations;
  Dbm zone;

  bool operator==(const SymbolicState&) const = default;
};

struct SymbolicStateHash {
  std::size_t operator()(const SymbolicState& s) const;
};

/// Delay-closed, extrapolated zone graph of a network. A state is delayed
/// after every discrete step unless one of its locations is urgent.
class ZoneGraph {
 public:
  ZoneGraph(const Network& net, ClockScale scale);

  const Network& network() const { return net_; }
  const ClockScale& scale() const { return scale_; }

  std::optional<SymbolicState> initial() const;

  struct Successor {
    NetworkTransition step;
    SymbolicState state;
  };
  /// Successors ordered lexicographically by their (automaton, transition) parts.
  std::vector<Successor> successors(const SymbolicState& s) const;

  /// Enabled network steps from a location vector, in lexicographic order.
  std::vector<NetworkTransition> steps_from(const LocationVector& locs) const;

  /// Does the zone intersect the conjunction?
  bool intersects(const SymbolicState& s, const std::vector<ClockConstraint>& conj) const;

  void apply(Dbm& zone, const ClockConstraint& c) const;

 private:
  void apply_invariants(Dbm& zone, const LocationVector& locs) const;
  void close(SymbolicState& s) const;

  const Network& net_;
  ClockScale scale_;
};

}  // namespace tarep
