#pragma once

#include "tarep/model.hpp"
#include "tarep/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tarep {

using VarId = std::uint32_t;

struct Term {
  VarId var = 0;
  Rational coef;

  bool operator==(const Term&) const = default;
};

/// Sum of terms plus a constant; terms kept sorted by variable, no zeros.
struct LinearExpr {
  std::vector<Term> terms;
  Rational constant;

  static LinearExpr variable(VarId v, Rational coef = 1);
  static LinearExpr value(Rational c);

  LinearExpr& operator+=(const LinearExpr& other);
  LinearExpr& operator-=(const LinearExpr& other);
  LinearExpr& operator*=(const Rational& k);
  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }

  Rational coefficient(VarId v) const;
  bool operator==(const LinearExpr&) const = default;
};

enum class Rel : std::uint8_t { Lt, Le, Eq };

using Assignment = std::vector<Rational>;

/// `terms rel rhs`, with >= and > folded by negation. The representation is
/// unique: the leading coefficient is scaled to +-1 (to +1 for equalities).
struct LinearAtom {
  std::vector<Term> terms;
  Rel rel = Rel::Le;
  Rational rhs;

  /// lhs op rhs; Eq yields an equality, Ge/Gt are negated into Le/Lt.
  static LinearAtom compare(const LinearExpr& lhs, CmpOp op, const LinearExpr& rhs);
  static LinearAtom make(LinearExpr lhs, Rel rel);  // lhs rel 0
  static LinearAtom falsum();
  static LinearAtom verum();

  bool is_constant() const { return terms.empty(); }
  /// Truth value of a variable-free atom.
  bool constant_truth() const;
  bool holds(const Assignment& a) const;
  /// Truth value when the left-hand side evaluates to `lhs`.
  bool holds_value(const Rational& lhs) const;
  Rational coefficient(VarId v) const;
  bool mentions(VarId v) const { return coefficient(v) != 0; }

  /// Disjunction of atoms equivalent to the negation.
  std::vector<LinearAtom> negation() const;
  /// Replace v by expr.
  LinearAtom substitute(VarId v, const LinearExpr& expr) const;

  friend bool operator<(const LinearAtom& a, const LinearAtom& b);
  bool operator==(const LinearAtom&) const = default;
};

std::string to_string(Rel rel);

/// Negation-free boolean structure over linear atoms.
struct Formula {
  enum class Kind : std::uint8_t { True, False, Atom, And, Or };

  Kind kind = Kind::True;
  LinearAtom atom;
  std::vector<Formula> children;

  static Formula verum();
  static Formula falsum();
  static Formula of(LinearAtom a);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula conj(const std::vector<LinearAtom>& atoms);

  bool holds(const Assignment& a) const;
  /// Substitute constants for variables and fold trivially decided nodes.
  Formula fix(const std::map<VarId, Rational>& values) const;
  Formula negate() const;
  std::size_t atom_count() const;
};

/// Variable names; ids are dense.
class VarTable {
 public:
  VarId add(std::string name);
  const std::string& name(VarId v) const { return names_.at(v); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

std::string to_string(const LinearAtom& atom, const VarTable& vars);
std::string to_string(const Formula& f, const VarTable& vars);

/// SMT-LIB2 text asserting `f`; variables declared as Real.
std::string to_smtlib(const Formula& f, const VarTable& vars);

}  // namespace tarep
