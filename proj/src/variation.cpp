#include "tarep/variation.hpp"

#include <algorithm>
#include <set>

namespace tarep {

std::string_view to_string(RepairKind kind) {
  switch (kind) {
    case RepairKind::Bound: return "bound";
    case RepairKind::Operator: return "operator";
    case RepairKind::ClockRef: return "clockref";
    case RepairKind::Reset: return "reset";
    case RepairKind::Urgency: return "urgent";
  }
  return "?";
}

std::optional<RepairKind> parse_repair_kind(std::string_view text) {
  for (auto k : kAllRepairKinds)
    if (to_string(k) == text) return k;
  if (text == "urgency") return RepairKind::Urgency;
  return std::nullopt;
}

VariedSystem::VariedSystem(const Network& net, const SymbolicTimedTrace& trace, const Property& prop,
                           RepairKind kind)
    : net_(net), trace_(trace), prop_(prop), kind_(kind) {
  if (trace_.locations.size() != trace_.steps.size() + 1) {
    auto replay = replay_locations(net_, trace_.steps);
    if (!replay) throw std::invalid_argument("trace is not consistent with the network");
    trace_.locations = std::move(*replay);
  }
  EncodeOptions explicit_opts;
  explicit_opts.eliminate_clocks = false;
  TdtConstraintSystem plain = encode(net_, trace_, prop_, explicit_opts);

  std::set<std::size_t> on_trace;
  for (const auto& a : plain.atoms)
    if (a.origin.constraint) on_trace.insert(*a.origin.constraint);
  const auto table = constraint_table(net_);

  switch (kind_) {
    case RepairKind::Bound:
      for (auto ci : on_trace) {
        VariationVariable v;
        v.kind = kind_;
        v.constraint = ci;
        v.name = "v_" + std::to_string(ci + 1);
        variables_.push_back(v);
      }
      break;
    case RepairKind::Operator:
      for (auto ci : on_trace) {
        VariationVariable v;
        v.kind = kind_;
        v.constraint = ci;
        v.domain = kCmpOpCount;
        v.zero = static_cast<std::size_t>(constraint_at(net_, table[ci]).op);
        v.name = "vov_" + std::to_string(ci + 1);
        variables_.push_back(v);
      }
      break;
    case RepairKind::ClockRef:
      for (auto ci : on_trace) {
        VariationVariable v;
        v.kind = kind_;
        v.constraint = ci;
        v.clocks = net_.automaton(table[ci].automaton).clocks;
        auto original = constraint_at(net_, table[ci]).clock;
        v.domain = v.clocks.size();
        v.zero = static_cast<std::size_t>(std::find(v.clocks.begin(), v.clocks.end(), original) - v.clocks.begin());
        v.name = "vcv_" + std::to_string(ci + 1);
        variables_.push_back(v);
      }
      break;
    case RepairKind::Reset:
      for (std::size_t j = 0; j < trace_.steps.size(); ++j) {
        std::set<ClockId> clocks;
        for (const auto& p : trace_.steps[j].parts)
          for (auto c : net_.automaton(p.automaton).clocks) clocks.insert(c);
        for (auto c : clocks) {
          VariationVariable v;
          v.kind = kind_;
          v.step = j;
          v.clock = c;
          v.domain = 2;
          v.name = "vrv_" + net_.clock_name(c) + "_" + std::to_string(j);
          variables_.push_back(v);
        }
      }
      break;
    case RepairKind::Urgency: {
      std::set<std::pair<AutomatonId, LocationId>> seen;
      for (const auto& lv : trace_.locations)
        for (std::size_t a = 0; a < lv.size(); ++a) seen.insert({AutomatonId(a), lv[a]});
      for (const auto& [a, l] : seen) {
        VariationVariable v;
        v.kind = kind_;
        v.automaton = a;
        v.location = l;
        v.domain = 2;
        v.name = "vuv_" + net_.automaton(a).name + "_" + net_.automaton(a).locations[l.index()].name;
        variables_.push_back(v);
      }
      break;
    }
  }

  EncodeOptions opts;
  opts.eliminate_clocks = kind_ != RepairKind::Reset;
  original_ = encode(net_, trace_, prop_, opts);
}

std::vector<std::size_t> VariedSystem::zero_selectors() const {
  std::vector<std::size_t> z;
  for (const auto& v : variables_) z.push_back(v.zero);
  return z;
}

EncodeOptions VariedSystem::options_for(const std::vector<std::size_t>& sel) const {
  EncodeOptions opts;
  switch (kind_) {
    case RepairKind::Bound:
      for (const auto& v : variables_) opts.varied_bounds.push_back(v.constraint);
      break;
    case RepairKind::Operator:
      for (std::size_t i = 0; i < variables_.size(); ++i)
        if (sel.at(i) != variables_[i].zero) opts.op_override[variables_[i].constraint] = cmp_op_from_index(sel[i]);
      break;
    case RepairKind::ClockRef:
      for (std::size_t i = 0; i < variables_.size(); ++i)
        if (sel.at(i) != variables_[i].zero) opts.clock_override[variables_[i].constraint] = variables_[i].clocks.at(sel[i]);
      break;
    case RepairKind::Reset: {
      auto resets = original_.resets;
      for (std::size_t i = 0; i < variables_.size(); ++i)
        if (sel.at(i) != 0) {
          auto r = resets[variables_[i].step][variables_[i].clock.index()];
          resets[variables_[i].step][variables_[i].clock.index()] = !r;
        }
      opts.resets = std::move(resets);
      break;
    }
    case RepairKind::Urgency: {
      std::vector<bool> urgent(trace_.locations.size(), false);
      for (std::size_t j = 0; j < trace_.locations.size(); ++j)
        for (std::size_t a = 0; a < trace_.locations[j].size(); ++a) {
          LocationId l = trace_.locations[j][a];
          bool u = net_.automata[a].locations[l.index()].urgent;
          for (std::size_t i = 0; i < variables_.size(); ++i)
            if (variables_[i].automaton.index() == a && variables_[i].location == l && sel.at(i) != 0) u = !u;
          if (u) urgent[j] = true;
        }
      opts.urgent = std::move(urgent);
      break;
    }
  }
  return opts;
}

TdtConstraintSystem VariedSystem::materialize(const std::vector<std::size_t>& selectors, bool explicit_clocks) const {
  auto opts = options_for(selectors);
  opts.eliminate_clocks = !explicit_clocks;
  return encode(net_, trace_, prop_, opts);
}

std::vector<LinearAtom> VariedSystem::side_conditions(const TdtConstraintSystem& sys) const {
  std::vector<LinearAtom> out;
  if (kind_ != RepairKind::Bound) return out;
  const auto table = constraint_table(net_);
  for (const auto& [ci, var] : sys.bound_vars)
    out.push_back(LinearAtom::compare(LinearExpr::variable(var), CmpOp::Ge,
                                      LinearExpr::value(-constraint_at(net_, table[ci]).bound)));
  return out;
}

VariedSystem::Encoded VariedSystem::encoded() const {
  Encoded out;
  const auto zero = zero_selectors();

  if (kind_ == RepairKind::Bound) {
    auto sys = materialize(zero);
    out.vars = sys.vars;
    out.system = sys.formula();
    out.violation = sys.violation_formula();
    return out;
  }

  // Reset flips switch between R and D atoms, so clock copies stay explicit.
  const bool explicit_clocks = kind_ == RepairKind::Reset;
  auto base = materialize(zero, explicit_clocks);
  out.vars = base.vars;
  for (const auto& v : variables_) out.selectors.push_back(out.vars.add(v.name));
  auto sel_is = [&](std::size_t i, std::size_t k) {
    return Formula::of(LinearAtom::compare(LinearExpr::variable(out.selectors[i]), CmpOp::Eq, LinearExpr::value(k)));
  };

  std::vector<Formula> parts;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    std::vector<Formula> dom;
    for (std::size_t k = 0; k < variables_[i].domain; ++k) dom.push_back(sel_is(i, k));
    parts.push_back(Formula::disj(std::move(dom)));
  }

  if (kind_ == RepairKind::Operator || kind_ == RepairKind::ClockRef) {
    // Same atom layout for every instantiation; swap varied atoms for a
    // selector-guarded disjunction over their instantiations.
    std::vector<std::vector<TdtConstraintSystem>> inst(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i)
      for (std::size_t k = 0; k < variables_[i].domain; ++k) {
        auto sel = zero;
        sel[i] = k;
        inst[i].push_back(materialize(sel, explicit_clocks));
      }
    for (std::size_t p = 0; p < base.atoms.size(); ++p) {
      const auto& origin = base.atoms[p].origin;
      std::size_t owner = variables_.size();
      for (std::size_t i = 0; i < variables_.size() && origin.constraint; ++i)
        if (variables_[i].constraint == *origin.constraint) owner = i;
      if (owner == variables_.size()) {
        parts.push_back(Formula::of(base.atoms[p].atom));
        continue;
      }
      std::vector<Formula> branches;
      for (std::size_t k = 0; k < variables_[owner].domain; ++k)
        branches.push_back(Formula::conj({sel_is(owner, k), Formula::of(inst[owner][k].atoms[p].atom)}));
      parts.push_back(Formula::disj(std::move(branches)));
    }
  } else if (kind_ == RepairKind::Reset) {
    auto flip_of = [&](std::size_t step, ClockId c) {
      for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].step == step && variables_[i].clock == c) return i;
      return variables_.size();
    };
    for (const auto& a : base.atoms) {
      auto b = a.origin.block;
      bool flippable = (b == TdtBlock::R || (b == TdtBlock::D && a.origin.step < base.steps)) &&
                       flip_of(a.origin.step, a.origin.clock) < variables_.size();
      if (!flippable) {
        parts.push_back(Formula::of(a.atom));
        continue;
      }
      std::size_t i = flip_of(a.origin.step, a.origin.clock);
      std::size_t j = a.origin.step, c = a.origin.clock.index();
      auto reset = LinearAtom::compare(base.clock_terms[j + 1][c], CmpOp::Eq, LinearExpr::value(0));
      auto flow = LinearAtom::compare(base.clock_terms[j + 1][c], CmpOp::Eq,
                                      base.clock_terms[j][c] + LinearExpr::variable(base.delays[j]));
      auto& kept = b == TdtBlock::R ? reset : flow;
      auto& swapped = b == TdtBlock::R ? flow : reset;
      parts.push_back(Formula::disj({Formula::conj({sel_is(i, 0), Formula::of(kept)}),
                                     Formula::conj({sel_is(i, 1), Formula::of(swapped)})}));
    }
  } else {
    for (const auto& a : base.atoms)
      if (a.origin.block != TdtBlock::U) parts.push_back(Formula::of(a.atom));
    for (std::size_t j = 0; j < trace_.locations.size(); ++j) {
      auto zero_delay = Formula::of(LinearAtom::compare(LinearExpr::variable(base.delays[j]), CmpOp::Eq, LinearExpr::value(0)));
      for (std::size_t a = 0; a < trace_.locations[j].size(); ++a) {
        LocationId l = trace_.locations[j][a];
        bool orig = net_.automata[a].locations[l.index()].urgent;
        for (std::size_t i = 0; i < variables_.size(); ++i)
          if (variables_[i].automaton.index() == a && variables_[i].location == l)
            // step j is urgent through this location iff orig XOR flip
            parts.push_back(Formula::disj({sel_is(i, orig ? 1 : 0), zero_delay}));
      }
    }
  }
  out.system = Formula::conj(std::move(parts));
  out.violation = base.violation_formula();
  return out;
}

}  // namespace tarep
