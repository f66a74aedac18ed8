#pragma once

#include "tarep/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tarep {

/// Dense identifier scoped to its owning container.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr std::size_t index() const { return value; }
  auto operator<=>(const Id&) const = default;
};

using ClockId = Id<struct ClockTag>;
using LocationId = Id<struct LocationTag>;
using AutomatonId = Id<struct AutomatonTag>;
using ChannelId = Id<struct ChannelTag>;

/// Comparison operators, ordered as the operator-variation index expects.
enum class CmpOp : std::uint8_t { Lt = 0, Le = 1, Eq = 2, Ge = 3, Gt = 4 };

inline constexpr std::size_t kCmpOpCount = 5;

std::string_view to_string(CmpOp op);
CmpOp cmp_op_from_index(std::size_t index);
/// Negation of `clock op bound` as a disjunction; Eq yields two operators.
std::vector<CmpOp> negate(CmpOp op);

struct ClockConstraint {
  ClockId clock;
  CmpOp op = CmpOp::Le;
  Rational bound;

  bool operator==(const ClockConstraint&) const = default;
};

enum class SyncKind : std::uint8_t { Internal, Send, Receive };

struct Transition {
  LocationId source;
  LocationId target;
  std::vector<ClockConstraint> guard;
  SyncKind sync = SyncKind::Internal;
  ChannelId channel;   // meaningful unless sync == Internal
  std::string action;  // optional label of an internal transition
  std::vector<ClockId> resets;

  bool resets_clock(ClockId c) const;
  bool operator==(const Transition&) const = default;
};

struct Location {
  std::string name;
  bool urgent = false;
  std::vector<ClockConstraint> invariant;

  bool operator==(const Location&) const = default;
};

struct TimedAutomaton {
  std::string name;
  LocationId initial;
  std::vector<ClockId> clocks;
  std::vector<Location> locations;
  std::vector<Transition> transitions;

  bool owns_clock(ClockId c) const;
  std::optional<LocationId> find_location(std::string_view name) const;
  bool operator==(const TimedAutomaton&) const = default;
};

/// Clocks and channels live in one network-wide namespace; each automaton
/// lists the clocks it may read or reset.
struct Network {
  std::vector<std::string> clock_names;
  std::vector<std::string> channel_names;
  std::vector<TimedAutomaton> automata;

  std::optional<ClockId> find_clock(std::string_view name) const;
  std::optional<ChannelId> find_channel(std::string_view name) const;
  std::optional<AutomatonId> find_automaton(std::string_view name) const;

  const TimedAutomaton& automaton(AutomatonId a) const { return automata[a.index()]; }
  TimedAutomaton& automaton(AutomatonId a) { return automata[a.index()]; }
  const std::string& clock_name(ClockId c) const { return clock_names[c.index()]; }
  std::size_t clock_count() const { return clock_names.size(); }

  bool operator==(const Network&) const = default;
};

using LocationVector = std::vector<LocationId>;

LocationVector initial_locations(const Network& net);
bool any_urgent(const Network& net, const LocationVector& locs);

/// Largest constant over all invariants and guards (0 for none).
Rational max_constant(const Network& net);

// --- global constraint indexing --------------------------------------------

enum class ConstraintSite : std::uint8_t { Invariant, Guard };

/// Position of one atomic constraint in document order: per automaton, all
/// location invariants first, then all transition guards.
struct ConstraintRef {
  AutomatonId automaton;
  ConstraintSite site = ConstraintSite::Invariant;
  std::size_t owner = 0;     // location or transition index
  std::size_t position = 0;  // index inside the conjunction

  bool operator==(const ConstraintRef&) const = default;
};

std::vector<ConstraintRef> constraint_table(const Network& net);
std::optional<std::size_t> constraint_index(const Network& net, const ConstraintRef& ref);
const ClockConstraint& constraint_at(const Network& net, const ConstraintRef& ref);
ClockConstraint& constraint_at(Network& net, const ConstraintRef& ref);
std::string describe(const Network& net, const ClockConstraint& c);

// --- properties --------------------------------------------------------------

/// Boolean combination of clock constraints and location predicates.
struct Property {
  enum class Kind : std::uint8_t { True, False, Clock, At, Not, And, Or };

  Kind kind = Kind::True;
  ClockConstraint clock;    // Kind::Clock
  AutomatonId automaton;    // Kind::At
  LocationId location;      // Kind::At
  std::vector<Property> children;

  static Property constant(bool value);
  static Property atom(ClockConstraint c);
  static Property at(AutomatonId a, LocationId l);
  static Property negation(Property p);
  static Property conjunction(std::vector<Property> ps);
  static Property disjunction(std::vector<Property> ps);

  bool operator==(const Property&) const = default;
};

/// Disjunction of conjunctions of clock constraints.
using ClockDnf = std::vector<std::vector<ClockConstraint>>;

/// DNF of the negated property with location predicates fixed by `locs`.
ClockDnf negated_dnf(const Property& prop, const LocationVector& locs);
/// DNF of the property itself under `locs`.
ClockDnf positive_dnf(const Property& prop, const LocationVector& locs);

std::string to_string(const Network& net, const Property& prop);
Rational max_constant(const Property& prop);

// --- well-formedness ---------------------------------------------------------

struct Diagnostic {
  enum class Severity : std::uint8_t { Error, Warning };
  Severity severity = Severity::Error;
  std::string path;
  std::string message;
};

std::vector<Diagnostic> validate(const Network& net, const Property& prop);
bool has_errors(const std::vector<Diagnostic>& diags);

/// Replace urgency flags by a fresh clock per automaton that is reset on
/// every edge entering an urgent location and constrained to 0 there.
Network desugar_urgency(const Network& net);

}  // namespace tarep
