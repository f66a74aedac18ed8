#include "tarep/simplex.hpp"

#include <algorithm>
#include <functional>

namespace tarep {

namespace {

// Dense tableau: rows are constraints in equality form with basic variables,
// the last row holds the objective (reduced costs) to be maximised.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows), obj_(cols + 1) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return a_.size(); }

  // obj_[c] = reduced cost of column c for maximising sum(cost_j x_j);
  // obj_[cols_] = -(current objective value).
  void set_objective(const std::vector<Rational>& cost) {
    for (std::size_t c = 0; c <= cols_; ++c) obj_[c] = c < cols_ ? cost[c] : Rational(0);
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) obj_[c] -= cb * a_[r][c];
    }
  }

  Rational objective_value() const { return -obj_[cols_]; }

  // Maximise with Bland's rule; columns with allowed[c] == false never enter.
  // Returns false on unboundedness.
  bool maximise(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c)
        if (allowed[c] && obj_[c] > 0) {
          enter = c;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    if (obj_[c] != 0) {
      Rational f = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (a_[r][j] != 0) obj_[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  std::vector<Rational> values() const {
    std::vector<Rational> v(cols_);
    for (std::size_t r = 0; r < rows(); ++r) v[basis_[r]] = a_[r][cols_];
    return v;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
};

}  // namespace

std::optional<Assignment> solve_conjunction(const std::vector<LinearAtom>& input, std::size_t var_count) {
  std::vector<const LinearAtom*> atoms;
  bool strict = false;
  for (const auto& a : input) {
    if (a.is_constant()) {
      if (!a.constant_truth()) return std::nullopt;
      continue;
    }
    atoms.push_back(&a);
    strict = strict || a.rel == Rel::Lt;
  }

  // Columns: x+ and x- per variable, then t, then one slack per inequality
  // row, then one artificial per row.
  const std::size_t nx = 2 * var_count;
  const std::size_t t_col = nx;
  const std::size_t base = strict ? nx + 1 : nx;
  std::size_t rows = atoms.size() + (strict ? 1 : 0);
  std::size_t slack_count = 0;
  for (auto* a : atoms) slack_count += a->rel != Rel::Eq;
  if (strict) ++slack_count;
  const std::size_t art0 = base + slack_count;
  const std::size_t cols = art0 + rows;

  Tableau tab(rows, cols);
  std::size_t slack = base;
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t slack_col = cols;
    if (r < atoms.size()) {
      const auto& a = *atoms[r];
      for (const auto& t : a.terms) {
        tab.at(r, 2 * t.var) = t.coef;
        tab.at(r, 2 * t.var + 1) = -t.coef;
      }
      if (a.rel == Rel::Lt) tab.at(r, t_col) = 1;
      tab.rhs(r) = a.rhs;
      if (a.rel != Rel::Eq) slack_col = slack++;
    } else {
      tab.at(r, t_col) = 1;
      tab.rhs(r) = 1;
      slack_col = slack++;
    }
    if (slack_col != cols) tab.at(r, slack_col) = 1;
    if (tab.rhs(r) < 0) {
      for (std::size_t c = 0; c < cols; ++c) tab.at(r, c) = -tab.at(r, c);
      tab.rhs(r) = -tab.rhs(r);
    }
    if (slack_col != cols && tab.at(r, slack_col) == 1) {
      tab.basic(r) = slack_col;
    } else {
      tab.at(r, art0 + r) = 1;
      tab.basic(r) = art0 + r;
    }
  }

  // Phase 1: maximise -sum(artificials).
  std::vector<bool> allowed(cols, true);
  std::vector<Rational> cost(cols);
  for (std::size_t c = art0; c < cols; ++c) cost[c] = -1;
  tab.set_objective(cost);
  tab.maximise(allowed);
  if (tab.objective_value() < 0) return std::nullopt;

  // Drive zero-level artificials out of the basis, dropping redundant rows.
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basic(r) < art0) {
      ++r;
      continue;
    }
    std::size_t c = 0;
    while (c < art0 && tab.at(r, c) == 0) ++c;
    if (c < art0) {
      tab.pivot(r, c);
      ++r;
    } else {
      tab.drop_row(r);
    }
  }
  for (std::size_t c = art0; c < cols; ++c) allowed[c] = false;

  if (strict) {
    std::vector<Rational> cost2(cols);
    cost2[t_col] = 1;
    tab.set_objective(cost2);
    tab.maximise(allowed);
    if (tab.objective_value() <= 0) return std::nullopt;
  }

  auto v = tab.values();
  Assignment x(var_count);
  for (std::size_t i = 0; i < var_count; ++i) x[i] = v[2 * i] - v[2 * i + 1];
  return x;
}

namespace {

// Depth-first expansion of `pending` formulas into conjunctions of atoms.
// `visit` returns false to stop the search.
void expand(std::vector<LinearAtom>& conj, std::vector<const Formula*>& pending, std::size_t var_count,
            const std::function<bool(std::vector<LinearAtom>&)>& visit, bool& stop) {
  if (stop) return;
  if (!satisfiable(conj, var_count)) return;
  if (pending.empty()) {
    if (!visit(conj)) stop = true;
    return;
  }
  const Formula* f = pending.back();
  pending.pop_back();
  switch (f->kind) {
    case Formula::Kind::True: expand(conj, pending, var_count, visit, stop); break;
    case Formula::Kind::False: break;
    case Formula::Kind::Atom:
      conj.push_back(f->atom);
      expand(conj, pending, var_count, visit, stop);
      conj.pop_back();
      break;
    case Formula::Kind::And: {
      auto size = pending.size();
      for (auto it = f->children.rbegin(); it != f->children.rend(); ++it) pending.push_back(&*it);
      // Atoms first so pruning happens before splitting.
      std::stable_partition(pending.begin() + static_cast<std::ptrdiff_t>(size), pending.end(),
                            [](const Formula* g) { return g->kind != Formula::Kind::Atom; });
      expand(conj, pending, var_count, visit, stop);
      pending.resize(size);
      break;
    }
    case Formula::Kind::Or:
      for (const auto& c : f->children) {
        pending.push_back(&c);
        expand(conj, pending, var_count, visit, stop);
        pending.pop_back();
        if (stop) break;
      }
      break;
  }
  pending.push_back(f);
}

}  // namespace

std::optional<Assignment> solve_formula(const Formula& f, std::size_t var_count) {
  std::optional<Assignment> found;
  std::vector<LinearAtom> conj;
  std::vector<const Formula*> pending{&f};
  bool stop = false;
  expand(conj, pending, var_count,
         [&](std::vector<LinearAtom>& atoms) {
           found = solve_conjunction(atoms, var_count);
           return false;
         },
         stop);
  return found;
}

std::vector<std::vector<LinearAtom>> satisfiable_branches(const Formula& f, std::size_t var_count,
                                                          std::size_t limit) {
  std::vector<std::vector<LinearAtom>> out;
  std::vector<LinearAtom> conj;
  std::vector<const Formula*> pending{&f};
  bool stop = false;
  expand(conj, pending, var_count,
         [&](std::vector<LinearAtom>& atoms) {
           out.push_back(atoms);
           return out.size() < limit;
         },
         stop);
  return out;
}

}  // namespace tarep
