#include "tarep/repair.hpp"

#include "tarep/simplex.hpp"

#include <algorithm>
#include <map>

namespace tarep {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Exhausted: return "exhausted";
    case Termination::Budget: return "budget";
    case Termination::NoRepair: return "no-repair";
    case Termination::NoRepairNeeded: return "no-repair-needed";
    case Termination::CandidateCap: return "candidate-cap";
  }
  return "?";
}

std::size_t RepairRun::admissible_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const RepairRecord& r) { return r.admissible == true; }));
}

namespace {

std::string transition_name(const Network& net, AutomatonId a, std::size_t t) {
  const auto& ta = net.automaton(a);
  const auto& tr = ta.transitions.at(t);
  return ta.name + ".t" + std::to_string(t) + " (" + ta.locations[tr.source.index()].name + " -> " +
         ta.locations[tr.target.index()].name + ")";
}

void apply_edit(Network& net, const RepairEdit& e, bool forward) {
  switch (e.kind) {
    case RepairKind::Bound:
    case RepairKind::Operator:
    case RepairKind::ClockRef: {
      auto table = constraint_table(net);
      if (e.constraint >= table.size()) throw AnchorMismatch("constraint #" + std::to_string(e.constraint + 1) + " does not exist");
      auto& c = constraint_at(net, table[e.constraint]);
      const auto& expect = forward ? e.before : e.after;
      if (!(c == expect))
        throw AnchorMismatch("constraint #" + std::to_string(e.constraint + 1) + " is " + describe(net, c) +
                             ", expected " + describe(net, expect));
      c = forward ? e.after : e.before;
      break;
    }
    case RepairKind::Reset: {
      if (e.automaton.index() >= net.automata.size() || e.transition >= net.automaton(e.automaton).transitions.size())
        throw AnchorMismatch("transition anchor does not exist");
      auto& resets = net.automaton(e.automaton).transitions[e.transition].resets;
      bool insert = e.add == forward;
      if (insert) {
        if (std::find(resets.begin(), resets.end(), e.clock) != resets.end() || e.position > resets.size())
          throw AnchorMismatch("transition already resets " + net.clock_name(e.clock));
        resets.insert(resets.begin() + static_cast<std::ptrdiff_t>(e.position), e.clock);
      } else {
        if (e.position >= resets.size() || resets[e.position] != e.clock)
          throw AnchorMismatch("transition does not reset " + net.clock_name(e.clock));
        resets.erase(resets.begin() + static_cast<std::ptrdiff_t>(e.position));
      }
      break;
    }
    case RepairKind::Urgency: {
      if (e.automaton.index() >= net.automata.size() ||
          e.location.index() >= net.automaton(e.automaton).locations.size())
        throw AnchorMismatch("location anchor does not exist");
      auto& l = net.automaton(e.automaton).locations[e.location.index()];
      bool expect = forward ? !e.urgent : e.urgent;
      if (l.urgent != expect) throw AnchorMismatch("urgency of " + l.name + " changed");
      l.urgent = forward ? e.urgent : !e.urgent;
      break;
    }
  }
}

}  // namespace

std::vector<std::string> RepairCandidate::anchors(const Network& net) const {
  std::vector<std::string> out;
  for (const auto& e : edits) {
    switch (e.kind) {
      case RepairKind::Reset:
        out.push_back(net.automaton(e.automaton).name + ".t" + std::to_string(e.transition) + ":" + net.clock_name(e.clock));
        break;
      case RepairKind::Urgency:
        out.push_back("@" + net.automaton(e.automaton).name + "." + net.automaton(e.automaton).locations[e.location.index()].name);
        break;
      default:
        out.push_back("#" + std::to_string(e.constraint + 1));
    }
  }
  return out;
}

std::vector<std::string> RepairCandidate::modifications(const Network& net) const {
  std::vector<std::string> out;
  for (const auto& e : edits) {
    switch (e.kind) {
      case RepairKind::Reset:
        out.push_back(transition_name(net, e.automaton, e.transition) + (e.add ? ": add reset of " : ": remove reset of ") +
                      net.clock_name(e.clock));
        break;
      case RepairKind::Urgency: {
        const auto& ta = net.automaton(e.automaton);
        out.push_back(ta.name + "." + ta.locations[e.location.index()].name +
                      (e.urgent ? ": make urgent" : ": make non-urgent"));
        break;
      }
      default:
        out.push_back("#" + std::to_string(e.constraint + 1) + " " + describe(net, e.before) + " -> " +
                      describe(net, e.after));
    }
  }
  return out;
}

Network apply(const Network& net, const RepairCandidate& c) {
  Network out = net;
  for (const auto& e : c.edits) apply_edit(out, e, true);
  return out;
}

Network revert(const Network& repaired, const RepairCandidate& c) {
  Network out = repaired;
  for (auto it = c.edits.rbegin(); it != c.edits.rend(); ++it) apply_edit(out, *it, false);
  return out;
}

bool satisfies_contract(const Network& repaired, const SymbolicTimedTrace& trace, const Property& prop) {
  auto sys = encode(repaired, trace, prop);
  return feasible(sys) && !violation_feasible(sys);
}

namespace {

// Edits for the selector part of a discrete candidate; nullopt when the
// selection cannot be expressed on the model (contradicting reset toggles).
std::optional<std::vector<RepairEdit>> discrete_edits(const VariedSystem& vs, const MaxSmtCandidate& c) {
  const auto& net = vs.network();
  const auto& vars = vs.variables();
  const auto table = constraint_table(net);
  std::vector<RepairEdit> edits;
  Network work = net;

  for (auto i : c.support) {
    const auto& v = vars[i];
    RepairEdit e;
    e.kind = v.kind;
    switch (v.kind) {
      case RepairKind::Operator:
      case RepairKind::ClockRef:
        e.constraint = v.constraint;
        e.before = constraint_at(net, table[v.constraint]);
        e.after = e.before;
        if (v.kind == RepairKind::Operator)
          e.after.op = cmp_op_from_index(c.values[i]);
        else
          e.after.clock = v.clocks.at(c.values[i]);
        edits.push_back(e);
        break;
      case RepairKind::Urgency:
        e.automaton = v.automaton;
        e.location = v.location;
        e.urgent = !net.automaton(v.automaton).locations[v.location.index()].urgent;
        edits.push_back(e);
        break;
      case RepairKind::Reset: {
        const auto& step = vs.trace().steps[v.step];
        bool had = vs.original().resets.at(v.step).at(v.clock.index());
        bool now = std::any_of(step.parts.begin(), step.parts.end(), [&](const FiredTransition& p) {
          return work.automaton(p.automaton).transitions[p.transition].resets_clock(v.clock);
        });
        if (now != had) break;  // already toggled through a transition shared with another step
        std::vector<FiredTransition> targets;
        for (const auto& p : step.parts) {
          const auto& ta = work.automaton(p.automaton);
          if (had ? ta.transitions[p.transition].resets_clock(v.clock) : ta.owns_clock(v.clock)) {
            targets.push_back(p);
            if (!had) break;  // one owner is enough to add the reset
          }
        }
        for (const auto& p : targets) {
          RepairEdit r;
          r.kind = RepairKind::Reset;
          r.automaton = p.automaton;
          r.transition = p.transition;
          r.clock = v.clock;
          r.add = !had;
          auto& resets = work.automaton(p.automaton).transitions[p.transition].resets;
          auto pos = std::find(resets.begin(), resets.end(), v.clock);
          if (r.add != (pos == resets.end())) return std::nullopt;
          r.position = r.add ? resets.size() : static_cast<std::size_t>(pos - resets.begin());
          apply_edit(work, r, true);
          edits.push_back(r);
        }
        break;
      }
      case RepairKind::Bound: break;
    }
  }
  return edits;
}

std::string selector_text(const VariationVariable& v, std::size_t value) {
  return v.name + "=" + std::to_string(value);
}

}  // namespace

RepairRun run_repair(const Network& net, const Property& prop, RepairKind kind, std::optional<SymbolicTimedTrace> trace,
                     const RepairOptions& options) {
  RepairRun run;
  run.kind = kind;
  if (!trace) {
    auto verdict = check(net, prop, options.check);
    if (verdict.kind == Verdict::Kind::Safe) {
      run.termination = Termination::NoRepairNeeded;
      return run;
    }
    if (verdict.kind == Verdict::Kind::Exhausted) {
      run.termination = Termination::Budget;
      return run;
    }
    trace = verdict.trace;
  }

  VariedSystem vs(net, *trace, prop, kind);
  run.trace = vs.trace();
  const auto& vars = vs.variables();
  std::vector<std::size_t> domains, zeros = vs.zero_selectors();
  for (const auto& v : vars) domains.push_back(v.domain);

  MaxSmtLimits limits{options.max_modifications, options.parallel};
  MaxSmtSearch::Oracle oracle;
  TdtConstraintSystem bound_sys;
  Formula hard = Formula::verum();
  std::vector<VarId> bound_ids;

  auto fix_outside = [&](const MaxSmtCandidate& c) {
    std::map<VarId, Rational> zero;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!std::binary_search(c.support.begin(), c.support.end(), i)) zero[bound_ids[i]] = 0;
    return hard.fix(zero);
  };

  if (kind == RepairKind::Bound) {
    bound_sys = vs.materialize(zeros);
    for (const auto& v : vars) bound_ids.push_back(bound_sys.bound_vars.at(v.constraint));
    try {
      hard = build_hard_constraint(bound_sys, vs.side_conditions(bound_sys), options.qe_budget);
    } catch (const QeTimeout&) {
      run.timeouts = 1;
      run.termination = Termination::Budget;
      return run;
    }
    run.variable_count = bound_sys.vars.size();
    run.constraint_count = hard.atom_count();
    const std::size_t n = bound_sys.vars.size();
    oracle = [&, n](const MaxSmtCandidate& c) { return solve_formula(fix_outside(c), n).has_value(); };
  } else {
    auto enc = vs.encoded();
    run.variable_count = enc.vars.size();
    run.constraint_count = enc.system.atom_count() + enc.violation.atom_count();
    oracle = [&](const MaxSmtCandidate& c) {
      auto sys = vs.materialize(c.values);
      if (kind == RepairKind::Reset) {
        // A per-step flip must be expressible as a model edit that changes
        // nothing else along the trace.
        auto edits = discrete_edits(vs, c);
        if (!edits) return false;
        RepairCandidate probe;
        probe.edits = std::move(*edits);
        if (encode(apply(net, probe), *trace, prop).resets != sys.resets) return false;
      }
      return feasible(sys) && !violation_feasible(sys);
    };
  }

  MaxSmtSearch search(domains, zeros, oracle, limits);
  run.termination = Termination::Exhausted;
  while (auto c = search.next()) {
    search.block(*c);
    if (c->support.empty()) {
      // The trace does not violate the property under this encoding.
      run.termination = Termination::NoRepairNeeded;
      break;
    }
    if (run.records.size() >= options.max_repairs) {
      run.termination = Termination::CandidateCap;
      break;
    }

    RepairCandidate cand;
    cand.kind = kind;
    cand.raw = *c;
    if (kind == RepairKind::Bound) {
      std::vector<VarId> order;
      for (auto i : c->support) order.push_back(bound_ids[i]);
      std::optional<std::map<VarId, Rational>> values;
      try {
        values = sample_repair_values(fix_outside(*c), bound_sys.vars.size(), order, options.qe_budget);
      } catch (const QeTimeout&) {
        ++run.timeouts;
        continue;
      }
      if (!values) continue;
      const auto table = constraint_table(net);
      for (auto i : c->support) {
        RepairEdit e;
        e.kind = kind;
        e.constraint = vars[i].constraint;
        e.before = constraint_at(net, table[e.constraint]);
        e.after = e.before;
        e.after.bound = e.before.bound + values->at(bound_ids[i]);
        cand.edits.push_back(e);
        cand.assignment.push_back(vars[i].name + "=" + to_string(values->at(bound_ids[i])));
      }
    } else {
      auto edits = discrete_edits(vs, *c);
      if (!edits) continue;
      cand.edits = std::move(*edits);
      for (auto i : c->support) cand.assignment.push_back(selector_text(vars[i], c->values[i]));
    }

    RepairRecord rec;
    auto repaired = apply(net, cand);
    rec.contract_ok = satisfies_contract(repaired, *trace, prop);
    if (options.check_admissibility) {
      try {
        auto adm = check_admissible(net, repaired, options.admissibility);
        rec.admissible = adm.admissible;
        rec.witness = std::move(adm.witness);
        rec.accepted_by = std::move(adm.accepted_by);
      } catch (const ExplorationLimit&) {
        rec.admissible = std::nullopt;
      }
    }
    rec.candidate = std::move(cand);
    run.records.push_back(std::move(rec));
  }
  run.evaluated = search.evaluated();
  run.timeouts += search.failures();
  if (run.termination == Termination::Exhausted && run.records.empty()) run.termination = Termination::NoRepair;
  return run;
}

}  // namespace tarep
