#include "tarep/linear.hpp"

#include <algorithm>
#include <sstream>

namespace tarep {

namespace {

// Merge two sorted term lists as a + k*b, dropping zeros.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& k) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].var < b[j].var)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].var < a[i].var) {
      out.push_back({b[j].var, k * b[j].coef});
      ++j;
    } else {
      Rational c = a[i].coef + k * b[j].coef;
      if (c != 0) out.push_back({a[i].var, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Rational evaluate(const std::vector<Term>& terms, const Assignment& a) {
  Rational s = 0;
  for (const auto& t : terms) s += t.coef * a.at(t.var);
  return s;
}

}  // namespace

LinearExpr LinearExpr::variable(VarId v, Rational coef) {
  LinearExpr e;
  if (coef != 0) e.terms.push_back({v, std::move(coef)});
  return e;
}

LinearExpr LinearExpr::value(Rational c) {
  LinearExpr e;
  e.constant = std::move(c);
  return e;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& other) {
  terms = merge(terms, other.terms, 1);
  constant += other.constant;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& other) {
  terms = merge(terms, other.terms, -1);
  constant -= other.constant;
  return *this;
}

LinearExpr& LinearExpr::operator*=(const Rational& k) {
  if (k == 0) {
    terms.clear();
    constant = 0;
    return *this;
  }
  for (auto& t : terms) t.coef *= k;
  constant *= k;
  return *this;
}

Rational LinearExpr::coefficient(VarId v) const {
  for (const auto& t : terms)
    if (t.var == v) return t.coef;
  return 0;
}

// --- atoms -------------------------------------------------------------------

LinearAtom LinearAtom::make(LinearExpr lhs, Rel rel) {
  LinearAtom a;
  a.rel = rel;
  a.terms = std::move(lhs.terms);
  a.rhs = -lhs.constant;
  if (a.terms.empty()) return a.constant_truth() ? verum() : falsum();
  Rational lead = a.terms.front().coef;
  Rational scale = rel == Rel::Eq ? Rational(1 / lead) : Rational(1 / abs(lead));
  for (auto& t : a.terms) t.coef *= scale;
  a.rhs *= scale;
  return a;
}

LinearAtom LinearAtom::compare(const LinearExpr& lhs, CmpOp op, const LinearExpr& rhs) {
  switch (op) {
    case CmpOp::Lt: return make(lhs - rhs, Rel::Lt);
    case CmpOp::Le: return make(lhs - rhs, Rel::Le);
    case CmpOp::Eq: return make(lhs - rhs, Rel::Eq);
    case CmpOp::Ge: return make(rhs - lhs, Rel::Le);
    case CmpOp::Gt: return make(rhs - lhs, Rel::Lt);
  }
  return falsum();
}

LinearAtom LinearAtom::falsum() {
  LinearAtom a;
  a.rel = Rel::Lt;
  a.rhs = 0;
  return a;
}

LinearAtom LinearAtom::verum() {
  LinearAtom a;
  a.rel = Rel::Le;
  a.rhs = 0;
  return a;
}

bool LinearAtom::constant_truth() const {
  switch (rel) {
    case Rel::Lt: return 0 < rhs;
    case Rel::Le: return 0 <= rhs;
    case Rel::Eq: return rhs == 0;
  }
  return false;
}

bool LinearAtom::holds(const Assignment& a) const { return holds_value(evaluate(terms, a)); }

bool LinearAtom::holds_value(const Rational& lhs) const {
  switch (rel) {
    case Rel::Lt: return lhs < rhs;
    case Rel::Le: return lhs <= rhs;
    case Rel::Eq: return lhs == rhs;
  }
  return false;
}

Rational LinearAtom::coefficient(VarId v) const {
  for (const auto& t : terms)
    if (t.var == v) return t.coef;
  return 0;
}

std::vector<LinearAtom> LinearAtom::negation() const {
  LinearExpr e;
  e.terms = terms;
  e.constant = -rhs;
  LinearExpr neg = e;
  neg *= -1;
  switch (rel) {
    case Rel::Lt: return {make(neg, Rel::Le)};
    case Rel::Le: return {make(neg, Rel::Lt)};
    case Rel::Eq: return {make(e, Rel::Lt), make(neg, Rel::Lt)};
  }
  return {};
}

LinearAtom LinearAtom::substitute(VarId v, const LinearExpr& expr) const {
  Rational k = coefficient(v);
  if (k == 0) return *this;
  LinearExpr e;
  e.terms = terms;
  e.constant = -rhs;
  e -= LinearExpr::variable(v, k);
  LinearExpr scaled = expr;
  scaled *= k;
  e += scaled;
  return make(std::move(e), rel);
}

bool operator<(const LinearAtom& a, const LinearAtom& b) {
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].var != b.terms[i].var) return a.terms[i].var < b.terms[i].var;
    if (a.terms[i].coef != b.terms[i].coef) return a.terms[i].coef < b.terms[i].coef;
  }
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return a.rel < b.rel;
}

std::string to_string(Rel rel) {
  switch (rel) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
  }
  return "?";
}

// --- formulas ----------------------------------------------------------------

Formula Formula::verum() { return {}; }

Formula Formula::falsum() {
  Formula f;
  f.kind = Kind::False;
  return f;
}

Formula Formula::of(LinearAtom a) {
  if (a.is_constant()) return a.constant_truth() ? verum() : falsum();
  Formula f;
  f.kind = Kind::Atom;
  f.atom = std::move(a);
  return f;
}

Formula Formula::conj(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::And;
  for (auto& c : fs) {
    if (c.kind == Kind::False) return falsum();
    if (c.kind == Kind::True) continue;
    if (c.kind == Kind::And) {
      for (auto& g : c.children) f.children.push_back(std::move(g));
    } else {
      f.children.push_back(std::move(c));
    }
  }
  if (f.children.empty()) return verum();
  if (f.children.size() == 1) return std::move(f.children.front());
  return f;
}

Formula Formula::disj(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::Or;
  for (auto& c : fs) {
    if (c.kind == Kind::True) return verum();
    if (c.kind == Kind::False) continue;
    if (c.kind == Kind::Or) {
      for (auto& g : c.children) f.children.push_back(std::move(g));
    } else {
      f.children.push_back(std::move(c));
    }
  }
  if (f.children.empty()) return falsum();
  if (f.children.size() == 1) return std::move(f.children.front());
  return f;
}

Formula Formula::conj(const std::vector<LinearAtom>& atoms) {
  std::vector<Formula> fs;
  fs.reserve(atoms.size());
  for (const auto& a : atoms) fs.push_back(of(a));
  return conj(std::move(fs));
}

bool Formula::holds(const Assignment& a) const {
  switch (kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return atom.holds(a);
    case Kind::And:
      return std::all_of(children.begin(), children.end(), [&](const Formula& c) { return c.holds(a); });
    case Kind::Or:
      return std::any_of(children.begin(), children.end(), [&](const Formula& c) { return c.holds(a); });
  }
  return false;
}

Formula Formula::fix(const std::map<VarId, Rational>& values) const {
  switch (kind) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom: {
      LinearAtom a = atom;
      for (const auto& t : atom.terms) {
        auto it = values.find(t.var);
        if (it != values.end()) a = a.substitute(t.var, LinearExpr::value(it->second));
      }
      return of(std::move(a));
    }
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> fs;
      fs.reserve(children.size());
      for (const auto& c : children) fs.push_back(c.fix(values));
      return kind == Kind::And ? conj(std::move(fs)) : disj(std::move(fs));
    }
  }
  return *this;
}

Formula Formula::negate() const {
  switch (kind) {
    case Kind::True: return falsum();
    case Kind::False: return verum();
    case Kind::Atom: {
      std::vector<Formula> fs;
      for (auto& a : atom.negation()) fs.push_back(of(std::move(a)));
      return disj(std::move(fs));
    }
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> fs;
      for (const auto& c : children) fs.push_back(c.negate());
      return kind == Kind::And ? disj(std::move(fs)) : conj(std::move(fs));
    }
  }
  return *this;
}

std::size_t Formula::atom_count() const {
  if (kind == Kind::Atom) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.atom_count();
  return n;
}

VarId VarTable::add(std::string name) {
  names_.push_back(std::move(name));
  return static_cast<VarId>(names_.size() - 1);
}

// --- printing ----------------------------------------------------------------

std::string to_string(const LinearAtom& atom, const VarTable& vars) {
  std::ostringstream os;
  if (atom.terms.empty()) os << "0";
  for (std::size_t i = 0; i < atom.terms.size(); ++i) {
    const auto& t = atom.terms[i];
    bool neg = t.coef < 0;
    if (i) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    Rational mag = abs(t.coef);
    if (mag != 1) os << to_string(mag) << "*";
    os << vars.name(t.var);
  }
  os << " " << to_string(atom.rel) << " " << to_string(atom.rhs);
  return os.str();
}

std::string to_string(const Formula& f, const VarTable& vars) {
  switch (f.kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Atom: return to_string(f.atom, vars);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string sep = f.kind == Formula::Kind::And ? " & " : " | ";
      std::string s = "(";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += sep;
        s += to_string(f.children[i], vars);
      }
      return s + ")";
    }
  }
  return "";
}

namespace {

std::string smt_rational(const Rational& r) {
  Rational v = r;
  v.canonicalize();
  std::string mag;
  Rational a = abs(v);
  if (a.get_den() == 1) {
    mag = a.get_num().get_str() + ".0";
  } else {
    mag = "(/ " + a.get_num().get_str() + ".0 " + a.get_den().get_str() + ".0)";
  }
  return v < 0 ? "(- " + mag + ")" : mag;
}

std::string smt_atom(const LinearAtom& a, const VarTable& vars) {
  std::string lhs;
  if (a.terms.empty()) {
    lhs = "0.0";
  } else {
    std::vector<std::string> parts;
    for (const auto& t : a.terms)
      parts.push_back(t.coef == 1 ? vars.name(t.var) : "(* " + smt_rational(t.coef) + " " + vars.name(t.var) + ")");
    if (parts.size() == 1) {
      lhs = parts.front();
    } else {
      lhs = "(+";
      for (const auto& p : parts) lhs += " " + p;
      lhs += ")";
    }
  }
  return "(" + to_string(a.rel) + " " + lhs + " " + smt_rational(a.rhs) + ")";
}

std::string smt_formula(const Formula& f, const VarTable& vars) {
  switch (f.kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Atom: return smt_atom(f.atom, vars);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string s = f.kind == Formula::Kind::And ? "(and" : "(or";
      for (const auto& c : f.children) s += "\n  " + smt_formula(c, vars);
      return s + ")";
    }
  }
  return "";
}

}  // namespace

std::string to_smtlib(const Formula& f, const VarTable& vars) {
  std::string out = "(set-logic QF_LRA)\n";
  for (const auto& n : vars.names()) out += "(declare-fun " + n + " () Real)\n";
  out += "(assert " + smt_formula(f, vars) + ")\n(check-sat)\n";
  return out;
}

}  // namespace tarep
