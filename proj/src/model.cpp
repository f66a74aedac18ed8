#include "tarep/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tarep {

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

CmpOp cmp_op_from_index(std::size_t index) {
  if (index >= kCmpOpCount) throw std::out_of_range("operator index");
  return static_cast<CmpOp>(index);
}

std::vector<CmpOp> negate(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return {CmpOp::Ge};
    case CmpOp::Le: return {CmpOp::Gt};
    case CmpOp::Eq: return {CmpOp::Lt, CmpOp::Gt};
    case CmpOp::Ge: return {CmpOp::Lt};
    case CmpOp::Gt: return {CmpOp::Le};
  }
  return {};
}

bool Transition::resets_clock(ClockId c) const {
  return std::find(resets.begin(), resets.end(), c) != resets.end();
}

bool TimedAutomaton::owns_clock(ClockId c) const {
  return std::find(clocks.begin(), clocks.end(), c) != clocks.end();
}

std::optional<LocationId> TimedAutomaton::find_location(std::string_view n) const {
  for (std::size_t i = 0; i < locations.size(); ++i)
    if (locations[i].name == n) return LocationId(i);
  return std::nullopt;
}

namespace {

template <class IdT>
std::optional<IdT> find_name(const std::vector<std::string>& names, std::string_view n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return IdT(i);
  return std::nullopt;
}

}  // namespace

std::optional<ClockId> Network::find_clock(std::string_view n) const {
  return find_name<ClockId>(clock_names, n);
}

std::optional<ChannelId> Network::find_channel(std::string_view n) const {
  return find_name<ChannelId>(channel_names, n);
}

std::optional<AutomatonId> Network::find_automaton(std::string_view n) const {
  for (std::size_t i = 0; i < automata.size(); ++i)
    if (automata[i].name == n) return AutomatonId(i);
  return std::nullopt;
}

LocationVector initial_locations(const Network& net) {
  LocationVector v;
  v.reserve(net.automata.size());
  for (const auto& a : net.automata) v.push_back(a.initial);
  return v;
}

bool any_urgent(const Network& net, const LocationVector& locs) {
  for (std::size_t a = 0; a < locs.size(); ++a)
    if (net.automata[a].locations[locs[a].index()].urgent) return true;
  return false;
}

Rational max_constant(const Network& net) {
  Rational m = 0;
  for (const auto& a : net.automata) {
    for (const auto& l : a.locations)
      for (const auto& c : l.invariant) m = std::max(m, c.bound);
    for (const auto& t : a.transitions)
      for (const auto& c : t.guard) m = std::max(m, c.bound);
  }
  return m;
}

std::vector<ConstraintRef> constraint_table(const Network& net) {
  std::vector<ConstraintRef> table;
  for (std::size_t a = 0; a < net.automata.size(); ++a) {
    const auto& ta = net.automata[a];
    for (std::size_t l = 0; l < ta.locations.size(); ++l)
      for (std::size_t p = 0; p < ta.locations[l].invariant.size(); ++p)
        table.push_back({AutomatonId(a), ConstraintSite::Invariant, l, p});
    for (std::size_t t = 0; t < ta.transitions.size(); ++t)
      for (std::size_t p = 0; p < ta.transitions[t].guard.size(); ++p)
        table.push_back({AutomatonId(a), ConstraintSite::Guard, t, p});
  }
  return table;
}

std::optional<std::size_t> constraint_index(const Network& net, const ConstraintRef& ref) {
  std::size_t index = 0;
  for (std::size_t a = 0; a < net.automata.size(); ++a) {
    const auto& ta = net.automata[a];
    for (std::size_t l = 0; l < ta.locations.size(); ++l) {
      const auto n = ta.locations[l].invariant.size();
      if (a == ref.automaton.index() && ref.site == ConstraintSite::Invariant && l == ref.owner)
        return ref.position < n ? std::optional(index + ref.position) : std::nullopt;
      index += n;
    }
    for (std::size_t t = 0; t < ta.transitions.size(); ++t) {
      const auto n = ta.transitions[t].guard.size();
      if (a == ref.automaton.index() && ref.site == ConstraintSite::Guard && t == ref.owner)
        return ref.position < n ? std::optional(index + ref.position) : std::nullopt;
      index += n;
    }
  }
  return std::nullopt;
}

const ClockConstraint& constraint_at(const Network& net, const ConstraintRef& ref) {
  const auto& ta = net.automata.at(ref.automaton.index());
  if (ref.site == ConstraintSite::Invariant) return ta.locations.at(ref.owner).invariant.at(ref.position);
  return ta.transitions.at(ref.owner).guard.at(ref.position);
}

ClockConstraint& constraint_at(Network& net, const ConstraintRef& ref) {
  auto& ta = net.automata.at(ref.automaton.index());
  if (ref.site == ConstraintSite::Invariant) return ta.locations.at(ref.owner).invariant.at(ref.position);
  return ta.transitions.at(ref.owner).guard.at(ref.position);
}

std::string describe(const Network& net, const ClockConstraint& c) {
  std::string s = c.clock.index() < net.clock_names.size() ? net.clock_names[c.clock.index()] : "?";
  s += ' ';
  s += to_string(c.op);
  s += ' ';
  s += to_string(c.bound);
  return s;
}

// --- validation --------------------------------------------------------------

namespace {

struct Validator {
  const Network& net;
  std::vector<Diagnostic> out;

  void error(std::string path, std::string msg) {
    out.push_back({Diagnostic::Severity::Error, std::move(path), std::move(msg)});
  }
  void warning(std::string path, std::string msg) {
    out.push_back({Diagnostic::Severity::Warning, std::move(path), std::move(msg)});
  }

  void check_atoms(const TimedAutomaton& ta, const std::vector<ClockConstraint>& atoms,
                   const std::string& path) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const auto& c = atoms[i];
      const auto p = path + "[" + std::to_string(i) + "]";
      if (c.clock.index() >= net.clock_count()) {
        error(p, "unknown clock");
      } else if (!ta.owns_clock(c.clock)) {
        error(p, "clock '" + net.clock_name(c.clock) + "' not declared by automaton '" + ta.name + "'");
      }
      if (c.bound < 0) error(p, "negative bound");
      if (static_cast<std::size_t>(c.op) >= kCmpOpCount) error(p, "invalid operator");
    }
  }

  void check_property(const Property& p, const std::string& path) {
    switch (p.kind) {
      case Property::Kind::Clock:
        if (p.clock.clock.index() >= net.clock_count()) error(path, "unknown clock in property");
        if (p.clock.bound < 0) error(path, "negative bound in property");
        break;
      case Property::Kind::At:
        if (p.automaton.index() >= net.automata.size() ||
            p.location.index() >= net.automata[p.automaton.index()].locations.size())
          error(path, "unresolved location predicate");
        break;
      default:
        for (std::size_t i = 0; i < p.children.size(); ++i)
          check_property(p.children[i], path + "." + std::to_string(i));
    }
  }

  void run(const Property& prop) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < net.clock_names.size(); ++i)
      if (!names.insert(net.clock_names[i]).second) error("clocks[" + std::to_string(i) + "]", "duplicate clock name");
    names.clear();
    for (std::size_t i = 0; i < net.channel_names.size(); ++i)
      if (!names.insert(net.channel_names[i]).second) error("channels[" + std::to_string(i) + "]", "duplicate channel name");
    names.clear();

    std::set<std::size_t> sent, received;
    for (std::size_t a = 0; a < net.automata.size(); ++a) {
      const auto& ta = net.automata[a];
      const auto ap = "automata[" + std::to_string(a) + "]";
      if (!names.insert(ta.name).second) error(ap, "duplicate automaton name '" + ta.name + "'");
      if (ta.locations.empty()) error(ap, "automaton has no locations");
      if (ta.initial.index() >= ta.locations.size()) error(ap + ".initial", "initial location out of range");
      for (auto c : ta.clocks)
        if (c.index() >= net.clock_count()) error(ap + ".clocks", "unknown clock");

      std::set<std::string> locnames;
      for (std::size_t l = 0; l < ta.locations.size(); ++l) {
        const auto lp = ap + ".locations[" + std::to_string(l) + "]";
        if (!locnames.insert(ta.locations[l].name).second) error(lp, "duplicate location name");
        check_atoms(ta, ta.locations[l].invariant, lp + ".invariant");
      }
      for (std::size_t t = 0; t < ta.transitions.size(); ++t) {
        const auto& tr = ta.transitions[t];
        const auto tp = ap + ".transitions[" + std::to_string(t) + "]";
        if (tr.source.index() >= ta.locations.size()) error(tp + ".source", "unknown location in transition " + std::to_string(t));
        if (tr.target.index() >= ta.locations.size()) error(tp + ".target", "unknown location in transition " + std::to_string(t));
        check_atoms(ta, tr.guard, tp + ".guard");
        for (auto c : tr.resets)
          if (c.index() >= net.clock_count() || !ta.owns_clock(c)) error(tp + ".resets", "reset of undeclared clock");
        if (tr.sync != SyncKind::Internal) {
          if (tr.channel.index() >= net.channel_names.size()) {
            error(tp + ".sync", "unknown channel");
          } else {
            (tr.sync == SyncKind::Send ? sent : received).insert(tr.channel.index());
          }
        }
      }
    }
    for (auto ch : sent)
      if (!received.count(ch)) warning("channels[" + std::to_string(ch) + "]", "channel '" + net.channel_names[ch] + "' is sent but never received");
    for (auto ch : received)
      if (!sent.count(ch)) warning("channels[" + std::to_string(ch) + "]", "channel '" + net.channel_names[ch] + "' is received but never sent");
    check_property(prop, "property");
  }
};

}  // namespace

std::vector<Diagnostic> validate(const Network& net, const Property& prop) {
  Validator v{net, {}};
  v.run(prop);
  return std::move(v.out);
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::Error; });
}

Network desugar_urgency(const Network& net) {
  Network out = net;
  for (auto& ta : out.automata) {
    bool has_urgent = std::any_of(ta.locations.begin(), ta.locations.end(),
                                  [](const Location& l) { return l.urgent; });
    if (!has_urgent) continue;
    std::string name = "urg_" + ta.name;
    while (out.find_clock(name)) name += "_";
    ClockId p(out.clock_names.size());
    out.clock_names.push_back(name);
    ta.clocks.push_back(p);
    for (auto& tr : ta.transitions)
      if (ta.locations[tr.target.index()].urgent && !tr.resets_clock(p)) tr.resets.push_back(p);
    for (auto& loc : ta.locations) {
      if (!loc.urgent) continue;
      loc.invariant.push_back({p, CmpOp::Eq, 0});
      loc.urgent = false;
    }
  }
  return out;
}

}  // namespace tarep
