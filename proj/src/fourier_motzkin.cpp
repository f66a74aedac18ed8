#include "tarep/fourier_motzkin.hpp"

#include <algorithm>
#include <map>

namespace tarep {

namespace {

LinearExpr lhs_minus_rhs(const LinearAtom& a) {
  LinearExpr e;
  e.terms = a.terms;
  e.constant = -a.rhs;
  return e;
}

bool terms_less(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].var != b[i].var) return a[i].var < b[i].var;
    if (a[i].coef != b[i].coef) return a[i].coef < b[i].coef;
  }
  return false;
}

struct TermsLess {
  bool operator()(const std::vector<Term>& a, const std::vector<Term>& b) const { return terms_less(a, b); }
};

// Tighter of two upper bounds on the same left-hand side.
bool tighter(const LinearAtom& a, const LinearAtom& b) {
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return a.rel == Rel::Lt && b.rel != Rel::Lt;
}

}  // namespace

std::vector<LinearAtom> prune(std::vector<LinearAtom> conj) {
  std::map<std::vector<Term>, LinearAtom, TermsLess> upper;
  std::map<std::vector<Term>, LinearAtom, TermsLess> equal;
  for (auto& a : conj) {
    if (a.is_constant()) {
      if (!a.constant_truth()) return {LinearAtom::falsum()};
      continue;
    }
    if (a.rel == Rel::Eq) {
      auto [it, inserted] = equal.emplace(a.terms, a);
      if (!inserted && it->second.rhs != a.rhs) return {LinearAtom::falsum()};
      continue;
    }
    auto [it, inserted] = upper.emplace(a.terms, a);
    if (!inserted && tighter(a, it->second)) it->second = a;
  }
  std::vector<LinearAtom> out;
  for (auto& [terms, eq] : equal) {
    // An equality decides any inequality over the same (or negated) terms.
    auto it = upper.find(terms);
    if (it != upper.end()) {
      if (!it->second.holds_value(eq.rhs)) return {LinearAtom::falsum()};
      upper.erase(it);
    }
    std::vector<Term> neg = terms;
    for (auto& t : neg) t.coef = -t.coef;
    it = upper.find(neg);
    if (it != upper.end()) {
      if (!it->second.holds_value(-eq.rhs)) return {LinearAtom::falsum()};
      upper.erase(it);
    }
    out.push_back(eq);
  }
  for (auto& [terms, a] : upper) {
    // Opposite single-direction pair: t <= a and -t <= b need -b <= t <= a.
    std::vector<Term> neg = terms;
    for (auto& t : neg) t.coef = -t.coef;
    auto it = upper.find(neg);
    if (it != upper.end()) {
      Rational lo = -it->second.rhs;
      bool strict = a.rel == Rel::Lt || it->second.rel == Rel::Lt;
      if (lo > a.rhs || (lo == a.rhs && strict)) return {LinearAtom::falsum()};
    }
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearAtom> eliminate(std::vector<LinearAtom> conj, const std::set<VarId>& vars, std::size_t budget) {
  std::size_t produced = 0;
  conj = prune(std::move(conj));
  auto is_false = [](const std::vector<LinearAtom>& c) { return c.size() == 1 && c[0] == LinearAtom::falsum(); };
  if (is_false(conj)) return conj;

  // Gaussian substitution through equalities.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < conj.size() && !changed; ++i) {
      if (conj[i].rel != Rel::Eq) continue;
      for (const auto& t : conj[i].terms) {
        if (!vars.count(t.var)) continue;
        // t.var = (rhs - rest) / coef
        LinearExpr solution = LinearExpr::value(conj[i].rhs / t.coef);
        for (const auto& u : conj[i].terms)
          if (u.var != t.var) solution -= LinearExpr::variable(u.var, u.coef / t.coef);
        VarId v = t.var;
        std::vector<LinearAtom> next;
        next.reserve(conj.size());
        for (std::size_t j = 0; j < conj.size(); ++j)
          if (j != i) next.push_back(conj[j].substitute(v, solution));
        produced += next.size();
        if (produced > budget) throw QeTimeout(produced);
        conj = prune(std::move(next));
        if (is_false(conj)) return conj;
        changed = true;
        break;
      }
    }
  }

  std::set<VarId> remaining;
  for (const auto& a : conj)
    for (const auto& t : a.terms)
      if (vars.count(t.var)) remaining.insert(t.var);

  while (!remaining.empty()) {
    // Cheapest variable first; ties broken by id for determinism.
    VarId pick = *remaining.begin();
    std::size_t best = SIZE_MAX;
    for (VarId v : remaining) {
      std::size_t pos = 0, neg = 0;
      for (const auto& a : conj) {
        auto c = a.coefficient(v);
        pos += c > 0;
        neg += c < 0;
      }
      std::size_t cost = pos * neg;
      if (cost < best) {
        best = cost;
        pick = v;
      }
    }
    remaining.erase(pick);

    std::vector<LinearAtom> lower, upper, next;
    for (auto& a : conj) {
      auto c = a.coefficient(pick);
      if (c > 0) upper.push_back(std::move(a));
      else if (c < 0) lower.push_back(std::move(a));
      else next.push_back(std::move(a));
    }
    for (const auto& u : upper) {
      Rational p = u.coefficient(pick);
      LinearExpr eu = lhs_minus_rhs(u);
      eu *= Rational(1 / p);
      for (const auto& l : lower) {
        Rational q = -l.coefficient(pick);
        LinearExpr el = lhs_minus_rhs(l);
        el *= Rational(1 / q);
        bool strict = u.rel == Rel::Lt || l.rel == Rel::Lt;
        next.push_back(LinearAtom::make(eu + el, strict ? Rel::Lt : Rel::Le));
        if (++produced > budget) throw QeTimeout(produced);
      }
    }
    conj = prune(std::move(next));
    if (is_false(conj)) return conj;
  }
  return conj;
}

bool Interval::contains(const Rational& x) const {
  if (empty) return false;
  if (lower && (x < *lower || (lower_strict && x == *lower))) return false;
  if (upper && (x > *upper || (upper_strict && x == *upper))) return false;
  return true;
}

Interval project_interval(const std::vector<LinearAtom>& conj, VarId var, std::size_t budget) {
  std::set<VarId> others;
  for (const auto& a : conj)
    for (const auto& t : a.terms)
      if (t.var != var) others.insert(t.var);
  auto projected = eliminate(conj, others, budget);
  Interval iv;
  for (const auto& a : projected) {
    if (a.is_constant()) {
      if (!a.constant_truth()) iv.empty = true;
      continue;
    }
    // a.terms == {var, +-1}
    Rational c = a.terms.front().coef;
    Rational b = a.rhs / c;
    bool strict = a.rel == Rel::Lt;
    if (a.rel == Rel::Eq) {
      iv.lower = iv.upper = b;
      iv.lower_strict = iv.upper_strict = false;
      continue;
    }
    if (c > 0) {
      if (!iv.upper || b < *iv.upper || (b == *iv.upper && strict)) {
        iv.upper = b;
        iv.upper_strict = strict;
      }
    } else {
      if (!iv.lower || b > *iv.lower || (b == *iv.lower && strict)) {
        iv.lower = b;
        iv.lower_strict = strict;
      }
    }
  }
  if (iv.lower && iv.upper &&
      (*iv.lower > *iv.upper || (*iv.lower == *iv.upper && (iv.lower_strict || iv.upper_strict))))
    iv.empty = true;
  return iv;
}

}  // namespace tarep
