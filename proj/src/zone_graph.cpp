#include "tarep/zone_graph.hpp"

#include <algorithm>

namespace tarep {

std::string step_label(const Network& net, const NetworkTransition& step) {
  for (const auto& p : step.parts) {
    const auto& tr = net.automata.at(p.automaton.index()).transitions.at(p.transition);
    if (tr.sync != SyncKind::Internal) return net.channel_names.at(tr.channel.index());
  }
  if (step.parts.size() == 1) {
    const auto& tr = net.automata.at(step.parts[0].automaton.index()).transitions.at(step.parts[0].transition);
    if (!tr.action.empty()) return tr.action;
  }
  return "tau";
}

std::optional<std::vector<LocationVector>> replay_locations(const Network& net,
                                                            const std::vector<NetworkTransition>& steps) {
  std::vector<LocationVector> out{initial_locations(net)};
  for (const auto& step : steps) {
    LocationVector next = out.back();
    if (step.parts.empty() || step.parts.size() > 2) return std::nullopt;
    for (const auto& p : step.parts) {
      if (p.automaton.index() >= net.automata.size()) return std::nullopt;
      const auto& ta = net.automata[p.automaton.index()];
      if (p.transition >= ta.transitions.size()) return std::nullopt;
      const auto& tr = ta.transitions[p.transition];
      if (tr.source != out.back()[p.automaton.index()]) return std::nullopt;
      next[p.automaton.index()] = tr.target;
    }
    if (step.parts.size() == 1) {
      const auto& p = step.parts[0];
      if (net.automata[p.automaton.index()].transitions[p.transition].sync != SyncKind::Internal) return std::nullopt;
    } else {
      const auto& a = net.automata[step.parts[0].automaton.index()].transitions[step.parts[0].transition];
      const auto& b = net.automata[step.parts[1].automaton.index()].transitions[step.parts[1].transition];
      if (step.parts[0].automaton == step.parts[1].automaton) return std::nullopt;
      bool paired = (a.sync == SyncKind::Send && b.sync == SyncKind::Receive) ||
                    (a.sync == SyncKind::Receive && b.sync == SyncKind::Send);
      if (!paired || a.channel != b.channel) return std::nullopt;
    }
    out.push_back(std::move(next));
  }
  return out;
}

ClockScale clock_scale(const std::vector<const Network*>& nets, const std::vector<Rational>& extra) {
  std::vector<Rational> constants = extra;
  for (const auto* net : nets)
    for (const auto& ta : net->automata) {
      for (const auto& l : ta.locations)
        for (const auto& c : l.invariant) constants.push_back(c.bound);
      for (const auto& t : ta.transitions)
        for (const auto& c : t.guard) constants.push_back(c.bound);
    }
  ClockScale s;
  mpz_class factor = 1;
  for (const auto& c : constants) mpz_lcm(factor.get_mpz_t(), factor.get_mpz_t(), c.get_den_mpz_t());
  s.factor = Rational(factor);
  Rational k = 0;
  for (const auto& c : constants) k = std::max(k, Rational(c * s.factor));
  s.k = ceil(k).get_num().get_si();
  return s;
}

std::size_t SymbolicStateHash::operator()(const SymbolicState& s) const {
  std::size_t h = s.zone.hash();
  for (auto l : s.locations) h = h * 31 + l.index();
  return h;
}

ZoneGraph::ZoneGraph(const Network& net, ClockScale scale) : net_(net), scale_(scale) {}

void ZoneGraph::apply(Dbm& zone, const ClockConstraint& c) const {
  Rational scaled = c.bound * scale_.factor;
  std::int64_t b = scaled.get_num().get_si();
  std::size_t x = c.clock.index() + 1;
  switch (c.op) {
    case CmpOp::Lt: zone.constrain(x, 0, raw_bound(b, true)); break;
    case CmpOp::Le: zone.constrain(x, 0, raw_bound(b, false)); break;
    case CmpOp::Eq:
      zone.constrain(x, 0, raw_bound(b, false));
      zone.constrain(0, x, raw_bound(-b, false));
      break;
    case CmpOp::Ge: zone.constrain(0, x, raw_bound(-b, false)); break;
    case CmpOp::Gt: zone.constrain(0, x, raw_bound(-b, true)); break;
  }
}

void ZoneGraph::apply_invariants(Dbm& zone, const LocationVector& locs) const {
  for (std::size_t a = 0; a < locs.size(); ++a)
    for (const auto& c : net_.automata[a].locations[locs[a].index()].invariant) apply(zone, c);
}

void ZoneGraph::close(SymbolicState& s) const {
  apply_invariants(s.zone, s.locations);
  if (!any_urgent(net_, s.locations)) {
    s.zone.up();
    apply_invariants(s.zone, s.locations);
  }
  s.zone.extrapolate(scale_.k);
}

std::optional<SymbolicState> ZoneGraph::initial() const {
  SymbolicState s{initial_locations(net_), Dbm::zero(net_.clock_count())};
  close(s);
  if (s.zone.is_empty()) return std::nullopt;
  return s;
}

std::vector<NetworkTransition> ZoneGraph::steps_from(const LocationVector& locs) const {
  std::vector<NetworkTransition> steps;
  for (std::size_t a = 0; a < net_.automata.size(); ++a) {
    const auto& ta = net_.automata[a];
    for (std::size_t t = 0; t < ta.transitions.size(); ++t) {
      const auto& tr = ta.transitions[t];
      if (tr.source != locs[a]) continue;
      if (tr.sync == SyncKind::Internal) {
        steps.push_back({{{AutomatonId(a), t}}});
        continue;
      }
      if (tr.sync != SyncKind::Send) continue;
      for (std::size_t b = 0; b < net_.automata.size(); ++b) {
        if (b == a) continue;
        const auto& tb = net_.automata[b];
        for (std::size_t u = 0; u < tb.transitions.size(); ++u) {
          const auto& tu = tb.transitions[u];
          if (tu.source != locs[b] || tu.sync != SyncKind::Receive || tu.channel != tr.channel) continue;
          NetworkTransition step{{{AutomatonId(a), t}, {AutomatonId(b), u}}};
          std::sort(step.parts.begin(), step.parts.end());
          steps.push_back(std::move(step));
        }
      }
    }
  }
  std::sort(steps.begin(), steps.end());
  return steps;
}

std::vector<ZoneGraph::Successor> ZoneGraph::successors(const SymbolicState& s) const {
  std::vector<Successor> out;
  for (auto& step : steps_from(s.locations)) {
    SymbolicState next = s;
    for (const auto& p : step.parts)
      for (const auto& g : net_.automata[p.automaton.index()].transitions[p.transition].guard) apply(next.zone, g);
    if (next.zone.is_empty()) continue;
    for (const auto& p : step.parts) {
      const auto& tr = net_.automata[p.automaton.index()].transitions[p.transition];
      for (auto c : tr.resets) next.zone.reset(c.index() + 1);
      next.locations[p.automaton.index()] = tr.target;
    }
    close(next);
    if (next.zone.is_empty()) continue;
    out.push_back({std::move(step), std::move(next)});
  }
  return out;
}

bool ZoneGraph::intersects(const SymbolicState& s, const std::vector<ClockConstraint>& conj) const {
  Dbm z = s.zone;
  for (const auto& c : conj) apply(z, c);
  return !z.is_empty();
}

}  // namespace tarep
