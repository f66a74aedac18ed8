#include "tarep/tdt.hpp"

#include "tarep/simplex.hpp"

#include <algorithm>

namespace tarep {

std::string_view to_string(TdtBlock b) {
  switch (b) {
    case TdtBlock::C0: return "clock initialization";
    case TdtBlock::A: return "time advancement";
    case TdtBlock::R: return "clock resets";
    case TdtBlock::U: return "urgent location";
    case TdtBlock::D: return "sojourn time";
    case TdtBlock::I: return "location invariants";
    case TdtBlock::G: return "transition guards";
  }
  return "?";
}

ConstraintIndexer::ConstraintIndexer(const Network& net) {
  std::size_t index = 0;
  for (const auto& ta : net.automata) {
    auto& inv = inv_offset.emplace_back();
    for (const auto& l : ta.locations) {
      inv.push_back(index);
      index += l.invariant.size();
    }
    auto& g = guard_offset.emplace_back();
    for (const auto& t : ta.transitions) {
      g.push_back(index);
      index += t.guard.size();
    }
  }
}

std::size_t ConstraintIndexer::invariant(std::size_t a, std::size_t l, std::size_t p) const {
  return inv_offset.at(a).at(l) + p;
}

std::size_t ConstraintIndexer::guard(std::size_t a, std::size_t t, std::size_t p) const {
  return guard_offset.at(a).at(t) + p;
}

std::vector<LinearAtom> TdtConstraintSystem::conjunction() const {
  std::vector<LinearAtom> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(a.atom);
  return out;
}

std::vector<LinearAtom> TdtConstraintSystem::block(TdtBlock b) const {
  std::vector<LinearAtom> out;
  for (const auto& a : atoms)
    if (a.origin.block == b) out.push_back(a.atom);
  return out;
}

std::vector<VarId> TdtConstraintSystem::trace_variables() const {
  std::vector<VarId> out = delays;
  for (const auto& row : clock_vars) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Formula TdtConstraintSystem::formula() const { return Formula::conj(conjunction()); }

Formula TdtConstraintSystem::violation_formula() const {
  std::vector<Formula> fs;
  for (const auto& d : violation) fs.push_back(Formula::conj(d));
  return Formula::disj(std::move(fs));
}

TdtConstraintSystem encode(const Network& net, const SymbolicTimedTrace& trace, const Property& prop,
                           const EncodeOptions& options) {
  const std::size_t n = trace.steps.size();
  const std::size_t nc = net.clock_count();
  std::vector<LocationVector> lambda = trace.locations;
  if (lambda.size() != n + 1) {
    auto replay = replay_locations(net, trace.steps);
    if (!replay) throw std::invalid_argument("trace is not consistent with the network");
    lambda = std::move(*replay);
  }

  TdtConstraintSystem sys;
  sys.steps = n;

  sys.resets.assign(n, std::vector<bool>(nc, false));
  if (options.resets) {
    sys.resets = *options.resets;
  } else {
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& p : trace.steps[j].parts)
        for (auto c : net.automata[p.automaton.index()].transitions[p.transition].resets) sys.resets[j][c.index()] = true;
  }
  sys.urgent.assign(n + 1, false);
  for (std::size_t j = 0; j <= n; ++j)
    sys.urgent[j] = options.urgent ? (*options.urgent)[j] : any_urgent(net, lambda[j]);

  for (std::size_t j = 0; j <= n; ++j) sys.delays.push_back(sys.vars.add("delta_" + std::to_string(j)));
  std::vector<std::size_t> varied = options.varied_bounds;
  std::sort(varied.begin(), varied.end());
  varied.erase(std::unique(varied.begin(), varied.end()), varied.end());
  for (auto i : varied) sys.bound_vars[i] = sys.vars.add("v_" + std::to_string(i + 1));
  sys.clock_vars.assign(n + 2, {});
  sys.clock_terms.assign(n + 2, {});
  for (std::size_t j = 0; j <= n + 1; ++j)
    for (std::size_t c = 0; c < nc; ++c) {
      VarId v = sys.vars.add(net.clock_names[c] + "_" + std::to_string(j));
      sys.clock_vars[j].push_back(v);
      sys.clock_terms[j].push_back(LinearExpr::variable(v));
    }

  auto delay = [&](std::size_t j) { return LinearExpr::variable(sys.delays[j]); };
  auto emit = [&](LinearAtom atom, AtomOrigin origin) { sys.atoms.push_back({std::move(atom), origin}); };

  for (std::size_t c = 0; c < nc; ++c)
    emit(LinearAtom::compare(sys.clock_terms[0][c], CmpOp::Eq, LinearExpr::value(0)),
         {TdtBlock::C0, 0, std::nullopt, ClockId(c), false});
  for (std::size_t j = 0; j <= n; ++j)
    emit(LinearAtom::compare(delay(j), CmpOp::Ge, LinearExpr::value(0)), {TdtBlock::A, j, std::nullopt, {}, false});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < nc; ++c)
      if (sys.resets[j][c])
        emit(LinearAtom::compare(sys.clock_terms[j + 1][c], CmpOp::Eq, LinearExpr::value(0)),
             {TdtBlock::R, j, std::nullopt, ClockId(c), false});
  for (std::size_t j = 0; j <= n; ++j)
    if (sys.urgent[j])
      emit(LinearAtom::compare(delay(j), CmpOp::Eq, LinearExpr::value(0)), {TdtBlock::U, j, std::nullopt, {}, false});
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t c = 0; c < nc; ++c)
      if (j == n || !sys.resets[j][c])
        emit(LinearAtom::compare(sys.clock_terms[j + 1][c], CmpOp::Eq, sys.clock_terms[j][c] + delay(j)),
             {TdtBlock::D, j, std::nullopt, ClockId(c), false});

  ConstraintIndexer index(net);
  auto constraint_atom = [&](std::size_t j, std::size_t ci, const ClockConstraint& cc, bool with_delay) {
    ClockId clock = cc.clock;
    CmpOp op = cc.op;
    if (auto it = options.clock_override.find(ci); it != options.clock_override.end()) clock = it->second;
    if (auto it = options.op_override.find(ci); it != options.op_override.end()) op = it->second;
    LinearExpr lhs = sys.clock_terms[j][clock.index()];
    if (with_delay) lhs += delay(j);
    LinearExpr rhs = LinearExpr::value(cc.bound);
    if (auto it = sys.bound_vars.find(ci); it != sys.bound_vars.end()) rhs += LinearExpr::variable(it->second);
    return LinearAtom::compare(lhs, op, rhs);
  };

  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t a = 0; a < net.automata.size(); ++a) {
      std::size_t l = lambda[j][a].index();
      const auto& inv = net.automata[a].locations[l].invariant;
      for (std::size_t p = 0; p < inv.size(); ++p) {
        std::size_t ci = index.invariant(a, l, p);
        emit(constraint_atom(j, ci, inv[p], false), {TdtBlock::I, j, ci, inv[p].clock, false});
        emit(constraint_atom(j, ci, inv[p], true), {TdtBlock::I, j, ci, inv[p].clock, true});
      }
    }
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& part : trace.steps[j].parts) {
      const auto& guard = net.automata[part.automaton.index()].transitions[part.transition].guard;
      for (std::size_t p = 0; p < guard.size(); ++p) {
        std::size_t ci = index.guard(part.automaton.index(), part.transition, p);
        emit(constraint_atom(j, ci, guard[p], true), {TdtBlock::G, j, ci, guard[p].clock, true});
      }
    }

  for (const auto& conj : negated_dnf(prop, lambda[n])) {
    std::vector<LinearAtom> d;
    for (const auto& cc : conj)
      d.push_back(LinearAtom::compare(sys.clock_terms[n + 1][cc.clock.index()], cc.op, LinearExpr::value(cc.bound)));
    sys.violation.push_back(std::move(d));
  }

  return options.eliminate_clocks ? eliminate_clock_variables(sys) : sys;
}

TdtConstraintSystem eliminate_clock_variables(const TdtConstraintSystem& sys) {
  if (sys.eliminated()) return sys;
  const std::size_t n = sys.steps;
  const std::size_t nc = sys.clock_vars.front().size();

  std::vector<std::vector<LinearExpr>> terms(n + 2, std::vector<LinearExpr>(nc));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t c = 0; c < nc; ++c) {
      bool reset = j < n && sys.resets[j][c];
      terms[j + 1][c] = reset ? LinearExpr{} : terms[j][c] + LinearExpr::variable(sys.delays[j]);
    }

  auto substitute = [&](LinearAtom atom) {
    for (std::size_t j = 0; j <= n + 1; ++j)
      for (std::size_t c = 0; c < nc; ++c)
        if (atom.mentions(sys.clock_vars[j][c])) atom = atom.substitute(sys.clock_vars[j][c], terms[j][c]);
    return atom;
  };

  TdtConstraintSystem out;
  out.steps = n;
  const std::size_t keep = sys.delays.size() + sys.bound_vars.size();
  for (std::size_t v = 0; v < keep; ++v) out.vars.add(sys.vars.name(static_cast<VarId>(v)));
  out.delays = sys.delays;
  out.bound_vars = sys.bound_vars;
  out.clock_terms = terms;
  out.resets = sys.resets;
  out.urgent = sys.urgent;
  for (const auto& a : sys.atoms) {
    auto b = a.origin.block;
    if (b == TdtBlock::C0 || b == TdtBlock::R || b == TdtBlock::D) continue;
    out.atoms.push_back({substitute(a.atom), a.origin});
  }
  for (const auto& d : sys.violation) {
    std::vector<LinearAtom> e;
    for (const auto& a : d) e.push_back(substitute(a));
    out.violation.push_back(std::move(e));
  }
  return out;
}

bool feasible(const TdtConstraintSystem& sys) { return satisfiable(sys.conjunction(), sys.vars.size()); }

std::optional<Assignment> violating_realization(const TdtConstraintSystem& sys) {
  auto base = sys.conjunction();
  for (const auto& d : sys.violation) {
    auto conj = base;
    conj.insert(conj.end(), d.begin(), d.end());
    if (auto model = solve_conjunction(conj, sys.vars.size())) return model;
  }
  return std::nullopt;
}

bool violation_feasible(const TdtConstraintSystem& sys) { return violating_realization(sys).has_value(); }

std::string to_smtlib(const TdtConstraintSystem& sys, bool with_violation) {
  std::string header;
  for (auto b : {TdtBlock::C0, TdtBlock::A, TdtBlock::R, TdtBlock::U, TdtBlock::D, TdtBlock::I, TdtBlock::G}) {
    auto atoms = sys.block(b);
    header += "; " + std::string(to_string(b)) + ": " + std::to_string(atoms.size()) + " atoms\n";
  }
  Formula f = with_violation ? Formula::conj({sys.formula(), sys.violation_formula()}) : sys.formula();
  return header + to_smtlib(f, sys.vars);
}

}  // namespace tarep
