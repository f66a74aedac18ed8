#pragma once

#include "tarep/tdt.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tarep {

enum class RepairKind : std::uint8_t { Bound, Operator, ClockRef, Reset, Urgency };

inline constexpr std::array<RepairKind, 5> kAllRepairKinds = {
    RepairKind::Bound, RepairKind::Operator, RepairKind::ClockRef, RepairKind::Reset, RepairKind::Urgency};

/// "bound", "operator", "clockref", "reset", "urgent".
std::string_view to_string(RepairKind kind);
std::optional<RepairKind> parse_repair_kind(std::string_view text);

/// One candidate syntactic change. Bound variables range over the rationals
/// (domain 0); all others are finite selectors 0..domain-1.
struct VariationVariable {
  RepairKind kind = RepairKind::Bound;
  std::size_t constraint = 0;  // bound, operator, clockref: global constraint index
  std::size_t step = 0;        // reset: trace step whose transition is toggled
  ClockId clock;               // reset: clock toggled
  AutomatonId automaton;       // urgency
  LocationId location;         // urgency
  std::vector<ClockId> clocks;  // clockref: selector value k means clocks[k]
  std::size_t domain = 0;
  std::size_t zero = 0;  // selector value meaning "no change"
  std::string name;

  bool rational() const { return domain == 0; }
};

/// A trace constraint system with one kind of variation. `materialize`
/// instantiates the selectors; `encoded` gives the single formula with
/// selectors as variables, branches joined by exclusive disjunctions.
class VariedSystem {
 public:
  VariedSystem(const Network& net, const SymbolicTimedTrace& trace, const Property& prop, RepairKind kind);

  RepairKind kind() const { return kind_; }
  const std::vector<VariationVariable>& variables() const { return variables_; }
  const Network& network() const { return net_; }
  const SymbolicTimedTrace& trace() const { return trace_; }
  const Property& property() const { return prop_; }

  /// 𝒯 of the unmodified trace, encoded as this analysis encodes it.
  const TdtConstraintSystem& original() const { return original_; }

  std::vector<std::size_t> zero_selectors() const;

  /// The system for one selector assignment. For the bound kind the
  /// selectors are ignored and the result keeps the v_i symbolic.
  TdtConstraintSystem materialize(const std::vector<std::size_t>& selectors, bool explicit_clocks = false) const;

  struct Encoded {
    VarTable vars;
    Formula system;     // 𝒯^var including selector domains
    Formula violation;  // ¬Φ
    std::vector<VarId> selectors;  // one per discrete variable, in order
  };
  Encoded encoded() const;

  /// Extra hard atoms over the bound variables (repaired bounds stay >= 0).
  std::vector<LinearAtom> side_conditions(const TdtConstraintSystem& materialized) const;

 private:
  EncodeOptions options_for(const std::vector<std::size_t>& selectors) const;

  Network net_;
  SymbolicTimedTrace trace_;
  Property prop_;
  RepairKind kind_;
  std::vector<VariationVariable> variables_;
  TdtConstraintSystem original_;
};

}  // namespace tarep
