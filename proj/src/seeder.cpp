#include "tarep/seeder.hpp"

#include <algorithm>
#include <sstream>

namespace tarep {

std::vector<Rational> bound_deltas(const Network& net) {
  Rational m = max_constant(net);
  return {Rational(-10), Rational(-1), Rational(1), Rational(ceil(Rational(m / 10))), m};
}

namespace {

Mutant make(const Network& net, RepairEdit edit) {
  Mutant m;
  m.kind = edit.kind;
  RepairCandidate c;
  c.kind = edit.kind;
  c.edits = {edit};
  m.network = apply(net, c);
  m.description = c.modifications(net).front();
  m.edit = std::move(edit);
  return m;
}

}  // namespace

std::vector<Mutant> seed(const Network& net, const std::vector<RepairKind>& kinds) {
  std::vector<Mutant> out;
  const auto table = constraint_table(net);
  const auto deltas = bound_deltas(net);

  for (auto kind : kAllRepairKinds) {
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) continue;
    switch (kind) {
      case RepairKind::Bound:
      case RepairKind::Operator:
      case RepairKind::ClockRef:
        for (std::size_t ci = 0; ci < table.size(); ++ci) {
          const auto& c = constraint_at(net, table[ci]);
          std::vector<ClockConstraint> variants;
          if (kind == RepairKind::Bound) {
            for (const auto& d : deltas) {
              auto v = c;
              v.bound = std::max(Rational(0), Rational(c.bound + d));
              variants.push_back(v);
            }
          } else if (kind == RepairKind::Operator) {
            for (std::size_t k = 0; k < kCmpOpCount; ++k) {
              auto v = c;
              v.op = cmp_op_from_index(k);
              variants.push_back(v);
            }
          } else {
            for (auto clock : net.automaton(table[ci].automaton).clocks) {
              auto v = c;
              v.clock = clock;
              variants.push_back(v);
            }
          }
          std::vector<ClockConstraint> seen{c};
          for (const auto& v : variants) {
            if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
            seen.push_back(v);
            RepairEdit e;
            e.kind = kind;
            e.constraint = ci;
            e.before = c;
            e.after = v;
            out.push_back(make(net, e));
          }
        }
        break;
      case RepairKind::Reset:
        for (std::size_t a = 0; a < net.automata.size(); ++a) {
          const auto& ta = net.automata[a];
          for (std::size_t t = 0; t < ta.transitions.size(); ++t)
            for (auto clock : ta.clocks) {
              const auto& resets = ta.transitions[t].resets;
              auto pos = std::find(resets.begin(), resets.end(), clock);
              RepairEdit e;
              e.kind = kind;
              e.automaton = AutomatonId(a);
              e.transition = t;
              e.clock = clock;
              e.add = pos == resets.end();
              e.position = static_cast<std::size_t>(pos - resets.begin());
              out.push_back(make(net, e));
            }
        }
        break;
      case RepairKind::Urgency:
        for (std::size_t a = 0; a < net.automata.size(); ++a)
          for (std::size_t l = 0; l < net.automata[a].locations.size(); ++l) {
            RepairEdit e;
            e.kind = kind;
            e.automaton = AutomatonId(a);
            e.location = LocationId(l);
            e.urgent = !net.automata[a].locations[l].urgent;
            out.push_back(make(net, e));
          }
        break;
    }
  }
  return out;
}

namespace {

MutantResult process(const Mutant& m, const Property& prop, const CampaignOptions& options) {
  MutantResult r;
  Verdict v;
  try {
    v = check(m.network, prop, options.repair.check);
  } catch (const std::exception&) {
    r.verdict = Verdict::Kind::Exhausted;
    ++r.errors;
    return r;
  }
  r.verdict = v.kind;
  if (v.kind == Verdict::Kind::Exhausted) ++r.errors;
  if (v.kind != Verdict::Kind::Violated) return r;
  r.trace_length = v.trace->length();
  for (auto kind : options.repair_kinds) {
    try {
      r.runs.push_back(run_repair(m.network, prop, kind, v.trace, options.repair));
    } catch (const std::exception&) {
      RepairRun failed;
      failed.kind = kind;
      failed.trace = v.trace;
      failed.termination = Termination::Budget;
      failed.timeouts = 1;
      r.runs.push_back(std::move(failed));
      ++r.errors;
    }
  }
  return r;
}

}  // namespace

Campaign campaign(const Network& net, const Property& prop, const std::vector<RepairKind>& seed_kinds,
                  const CampaignOptions& options) {
  Campaign c;
  c.mutants = seed(net, seed_kinds);
  c.results.resize(c.mutants.size());
  CampaignOptions inner = options;
  if (options.parallel) inner.repair.parallel = false;  // parallelism lives at the mutant level

  const long count = static_cast<long>(c.mutants.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (long i = 0; i < count; ++i) c.results[i] = process(c.mutants[i], prop, inner);

  c.rows = tabulate(c.results, options.repair_kinds);
  return c;
}

std::vector<CampaignRow> tabulate(const std::vector<MutantResult>& results, const std::vector<RepairKind>& repair_kinds) {
  CampaignRow total;
  total.scope = "model";
  std::vector<CampaignRow> per(repair_kinds.size());
  for (std::size_t k = 0; k < repair_kinds.size(); ++k) per[k].scope = std::string(to_string(repair_kinds[k]));

  for (const auto& r : results) {
    ++total.seeds;
    if (r.verdict == Verdict::Kind::Exhausted) ++total.timeouts;
    if (r.verdict != Verdict::Kind::Violated) continue;
    ++total.tdts;
    total.max_length = std::max(total.max_length, r.trace_length);
    bool solved = false;
    for (const auto& run : r.runs) {
      auto k = static_cast<std::size_t>(std::find(repair_kinds.begin(), repair_kinds.end(), run.kind) - repair_kinds.begin());
      if (k == per.size()) continue;
      auto& row = per[k];
      ++row.seeds;
      ++row.tdts;
      row.max_length = std::max(row.max_length, r.trace_length);
      row.repairs += run.records.size();
      row.admissible += run.admissible_count();
      row.timeouts += run.timeouts;
      row.max_vars = std::max(row.max_vars, run.variable_count);
      row.max_atoms = std::max(row.max_atoms, run.constraint_count);
      if (run.admissible_count() > 0) {
        ++row.solved;
        solved = true;
      }
    }
    if (solved) ++total.solved;
  }
  for (const auto& row : per) {
    total.repairs += row.repairs;
    total.admissible += row.admissible;
    total.timeouts += row.timeouts;
    total.max_vars = std::max(total.max_vars, row.max_vars);
    total.max_atoms = std::max(total.max_atoms, row.max_atoms);
  }
  std::vector<CampaignRow> rows{total};
  rows.insert(rows.end(), per.begin(), per.end());
  return rows;
}

std::string to_csv(const std::vector<CampaignRow>& rows) {
  std::ostringstream os;
  os << "scope,Sd,T,Ln,R,A,S,O,Vr,Cn\n";
  for (const auto& r : rows)
    os << r.scope << ',' << r.seeds << ',' << r.tdts << ',' << r.max_length << ',' << r.repairs << ',' << r.admissible
       << ',' << r.solved << ',' << r.timeouts << ',' << r.max_vars << ',' << r.max_atoms << '\n';
  return os.str();
}

std::string format_campaign(const Network& net, const Property& prop, const Campaign& c) {
  std::ostringstream os;
  os << "# seeding campaign\n";
  os << "# property: " << to_string(net, prop) << "\n";
  os << "# bound deltas:";
  for (const auto& d : bound_deltas(net)) os << ' ' << to_string(d);
  os << " (clamped at 0, duplicates dropped)\n";
  for (std::size_t i = 0; i < c.mutants.size(); ++i) {
    const auto& m = c.mutants[i];
    const auto& r = c.results[i];
    char id[16];
    std::snprintf(id, sizeof id, "%04zu", i + 1);
    os << id << ' ' << to_string(m.kind) << ' ' << m.description << ": ";
    switch (r.verdict) {
      case Verdict::Kind::Safe: os << "safe\n"; continue;
      case Verdict::Kind::Exhausted: os << "check exhausted\n"; continue;
      case Verdict::Kind::Violated: os << "violated, trace length " << r.trace_length << "\n"; break;
    }
    for (const auto& run : r.runs) {
      os << "    " << to_string(run.kind) << ": repairs=" << run.records.size() << " admissible=" << run.admissible_count()
         << " timeouts=" << run.timeouts << " termination=" << to_string(run.termination) << "\n";
      for (const auto& rec : run.records) {
        std::string mods;
        for (const auto& s : rec.candidate.modifications(m.network)) mods += (mods.empty() ? "" : "; ") + s;
        os << "        " << mods << " admissible=" << (rec.admissible ? (*rec.admissible ? "yes" : "no") : "unknown") << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace tarep
