#include "oracles.hpp"

#include "tarep/fourier_motzkin.hpp"
#include "tarep/simplex.hpp"

#include <doctest.h>

using namespace tarep;

namespace {

LinearExpr var(VarId v, long c = 1) { return LinearExpr::variable(v, c); }
LinearExpr val(Rational c) { return LinearExpr::value(c); }

}  // namespace

TEST_CASE("atom normal form") {
  auto a = LinearAtom::compare(var(0, 2), CmpOp::Ge, val(4));  // 2x >= 4  ->  -x <= -2
  CHECK(a.rel == Rel::Le);
  CHECK(a.coefficient(0) == -1);
  CHECK(a.rhs == -2);
  CHECK(a == LinearAtom::compare(var(0, 3), CmpOp::Ge, val(6)));
  CHECK(LinearAtom::compare(val(1), CmpOp::Lt, val(1)).constant_truth() == false);
  CHECK(a.negation().size() == 1);
  CHECK(LinearAtom::compare(var(0), CmpOp::Eq, val(1)).negation().size() == 2);
}

TEST_CASE("simplex handles strict rows") {
  std::vector<LinearAtom> s{LinearAtom::compare(var(0), CmpOp::Gt, val(1)),
                            LinearAtom::compare(var(0), CmpOp::Lt, val(2))};
  auto x = solve_conjunction(s, 1);
  REQUIRE(x);
  CHECK((*x)[0] > 1);
  CHECK((*x)[0] < 2);
  s.push_back(LinearAtom::compare(var(0), CmpOp::Le, val(1)));
  CHECK_FALSE(satisfiable(s, 1));
}

TEST_CASE("simplex agrees with vertex enumeration") {
  std::mt19937 rng(7);
  int sat = 0;
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 3, m = 1 + rng() % 5;
    std::vector<LinearAtom> atoms;
    for (std::size_t j = 0; j < m; ++j) atoms.push_back(oracle::random_atom(rng, n, 2, 4));
    auto x = solve_conjunction(atoms, n);
    CHECK(x.has_value() == oracle::vertex_feasible(atoms, n));
    if (x) {
      ++sat;
      for (const auto& a : atoms) CHECK(a.holds(*x));
    }
  }
  CHECK(sat > 30);  // the generator covers both outcomes
  CHECK(sat < 270);
}

TEST_CASE("fourier-motzkin agrees with simplex") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 3, m = 1 + rng() % 6;
    std::vector<LinearAtom> atoms;
    for (std::size_t j = 0; j < m; ++j) atoms.push_back(oracle::random_atom(rng, n, 2, 4));
    CHECK(oracle::fm_satisfiable(atoms, n) == satisfiable(atoms, n));
  }
}

TEST_CASE("elimination budget") {
  std::vector<LinearAtom> atoms;
  for (long k = 1; k <= 6; ++k) {
    atoms.push_back(LinearAtom::compare(var(0) + var(1, k), CmpOp::Le, val(k)));
    atoms.push_back(LinearAtom::compare(var(0, -1) + var(2, k), CmpOp::Le, val(k)));
  }
  CHECK_THROWS_AS(eliminate(atoms, {0}, 3), QeTimeout);
  CHECK_NOTHROW(eliminate(atoms, {0}));
}

TEST_CASE("project interval") {
  std::vector<LinearAtom> s{LinearAtom::compare(var(0) + var(1), CmpOp::Le, val(3)),
                            LinearAtom::compare(var(1), CmpOp::Ge, val(1)),
                            LinearAtom::compare(var(0), CmpOp::Gt, val(-1))};
  auto iv = project_interval(s, 0);
  REQUIRE(iv.lower);
  REQUIRE(iv.upper);
  CHECK(*iv.lower == -1);
  CHECK(iv.lower_strict);
  CHECK(*iv.upper == 2);
  CHECK_FALSE(iv.upper_strict);
}

TEST_CASE("formula fix folds decided nodes") {
  auto f = Formula::disj({Formula::of(LinearAtom::compare(var(0), CmpOp::Eq, val(1))),
                          Formula::of(LinearAtom::compare(var(1), CmpOp::Le, val(0)))});
  CHECK(f.fix({{0, Rational(1)}}).kind == Formula::Kind::True);
  CHECK(f.fix({{0, Rational(2)}, {1, Rational(1)}}).kind == Formula::Kind::False);
  CHECK(solve_formula(f, 2).has_value());
}
