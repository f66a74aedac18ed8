#include "tarep/maxsmt.hpp"

#include "tarep/simplex.hpp"

#include <algorithm>
#include <set>

namespace tarep {

Formula build_hard_constraint(const TdtConstraintSystem& sys, const std::vector<LinearAtom>& side,
                              std::size_t budget) {
  auto trace_vars = sys.trace_variables();
  std::set<VarId> quantified(trace_vars.begin(), trace_vars.end());
  const auto base = sys.conjunction();

  std::vector<Formula> parts;
  parts.push_back(Formula::conj(eliminate(base, quantified, budget)));
  for (const auto& d : sys.violation) {
    auto conj = base;
    conj.insert(conj.end(), d.begin(), d.end());
    parts.push_back(Formula::conj(eliminate(std::move(conj), quantified, budget)).negate());
  }
  parts.push_back(Formula::conj(side));
  return Formula::conj(std::move(parts));
}

bool MaxSmtCandidate::extends(const MaxSmtCandidate& other) const {
  for (auto i : other.support) {
    if (!std::binary_search(support.begin(), support.end(), i)) return false;
    if (values.at(i) != other.values.at(i)) return false;
  }
  return true;
}

MaxSmtSearch::MaxSmtSearch(std::vector<std::size_t> domains, std::vector<std::size_t> zeros, Oracle oracle,
                           MaxSmtLimits limits)
    : domains_(std::move(domains)), zeros_(std::move(zeros)), oracle_(std::move(oracle)), limits_(limits) {}

bool MaxSmtSearch::is_blocked(const MaxSmtCandidate& c) const {
  return std::any_of(blocked_.begin(), blocked_.end(), [&](const MaxSmtCandidate& b) { return c.extends(b); });
}

namespace {

// Non-zero values of one variable, ascending; rational variables have one
// placeholder value.
std::vector<std::size_t> alternatives(std::size_t domain, std::size_t zero) {
  if (domain == 0) return {1};
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < domain; ++k)
    if (k != zero) out.push_back(k);
  return out;
}

}  // namespace

void MaxSmtSearch::fill_level() {
  pending_.clear();
  pending_pos_ = 0;
  while (pending_.empty() && !exhausted()) {
    const std::size_t n = domains_.size();
    const std::size_t c = level_++;
    std::vector<MaxSmtCandidate> level;

    // Supports of size c in lexicographic order, then value products.
    std::vector<std::size_t> support(c);
    for (std::size_t i = 0; i < c; ++i) support[i] = i;
    for (;;) {
      std::vector<std::vector<std::size_t>> alts;
      for (auto i : support) alts.push_back(alternatives(domains_[i], zeros_[i]));
      std::vector<std::size_t> pick(c, 0);
      // A variable without alternatives (single-valued domain) rules out the support.
      bool any = std::none_of(alts.begin(), alts.end(), [](const auto& a) { return a.empty(); });
      while (any) {
        MaxSmtCandidate cand;
        cand.support = support;
        cand.values = zeros_;
        for (std::size_t i = 0; i < c; ++i) cand.values[support[i]] = alts[i][pick[i]];
        if (!is_blocked(cand)) level.push_back(std::move(cand));
        std::size_t p = c;
        while (p > 0 && ++pick[p - 1] == alts[p - 1].size()) pick[--p] = 0;
        if (p == 0) break;
      }
      std::size_t i = c;
      while (i > 0 && support[i - 1] == n - c + i - 1) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t k = i; k < c; ++k) support[k] = support[k - 1] + 1;
    }

    std::vector<char> ok(level.size(), 0);
    std::vector<char> failed(level.size(), 0);
    const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic) if (limits_.parallel)
    for (long i = 0; i < count; ++i) {
      try {
        ok[i] = oracle_(level[i]) ? 1 : 0;
      } catch (...) {
        failed[i] = 1;
      }
    }
    evaluated_ += level.size();
    for (std::size_t i = 0; i < level.size(); ++i) {
      failures_ += failed[i];
      if (ok[i]) pending_.push_back(std::move(level[i]));
    }
  }
}

std::optional<MaxSmtCandidate> MaxSmtSearch::next() {
  for (;;) {
    while (pending_pos_ < pending_.size()) {
      auto& c = pending_[pending_pos_++];
      if (!is_blocked(c)) return c;
    }
    if (exhausted()) return std::nullopt;
    fill_level();
  }
}

std::optional<Rational> pick_value(const std::vector<Interval>& intervals) {
  std::vector<const Interval*> live;
  for (const auto& iv : intervals)
    if (!iv.empty) live.push_back(&iv);
  if (live.empty()) return std::nullopt;

  auto contains = [&](const Rational& x) {
    return std::any_of(live.begin(), live.end(), [&](const Interval* iv) { return iv->contains(x); });
  };
  Rational reach = 1;
  for (const auto* iv : live) {
    if (iv->lower) reach = std::max(reach, Rational(abs(*iv->lower) + 1));
    if (iv->upper) reach = std::max(reach, Rational(abs(*iv->upper) + 1));
  }
  for (Rational k = 1; k <= reach; k += 1) {
    if (contains(-k)) return Rational(-k);
    if (contains(k)) return k;
  }
  for (const auto* iv : live) {
    if (iv->lower && iv->upper) {
      if (*iv->lower == *iv->upper) {
        if (*iv->lower != 0) return *iv->lower;
        continue;
      }
      Rational mid = (*iv->lower + *iv->upper) / 2;
      if (mid == 0) mid = *iv->lower / 2;
      return mid;
    }
  }
  return std::nullopt;
}

std::optional<std::map<VarId, Rational>> sample_repair_values(const Formula& hard, std::size_t var_count,
                                                              const std::vector<VarId>& order,
                                                              std::size_t budget) {
  std::map<VarId, Rational> chosen;
  Formula current = hard;
  for (VarId v : order) {
    auto branches = satisfiable_branches(current, var_count);
    if (branches.empty()) return std::nullopt;
    std::vector<Interval> intervals;
    for (const auto& b : branches) intervals.push_back(project_interval(b, v, budget));
    auto value = pick_value(intervals);
    if (!value) return std::nullopt;
    chosen[v] = *value;
    current = current.fix({{v, *value}});
  }
  if (!solve_formula(current, var_count)) return std::nullopt;
  return chosen;
}

}  // namespace tarep
