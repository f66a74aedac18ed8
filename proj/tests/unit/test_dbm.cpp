#include "tarep/dbm.hpp"

#include <doctest.h>

using namespace tarep;

TEST_CASE("raw bound encoding") {
  CHECK(raw_bound(3, true) < raw_bound(3, false));
  CHECK(raw_bound(3, false) < raw_bound(4, true));
  CHECK(raw_add(raw_bound(1, false), raw_bound(2, true)) == raw_bound(3, true));
  CHECK(raw_add(raw_bound(1, false), raw_bound(2, false)) == raw_bound(3, false));
  CHECK(raw_add(kInfinity, kLeZero) == kInfinity);
}

TEST_CASE("delay, constrain and reset") {
  auto z = Dbm::zero(2);
  z.up();
  z.constrain(1, 0, raw_bound(2, false));  // x <= 2
  CHECK(z.at(2, 0) == raw_bound(2, false));  // y follows x
  z.reset(1);
  CHECK(z.at(1, 0) == kLeZero);
  CHECK(z.at(2, 1) == raw_bound(2, false));
  z.constrain(0, 2, raw_bound(-3, false));  // y >= 3
  CHECK(z.is_empty());
}

TEST_CASE("extrapolation widens beyond k") {
  auto z = Dbm::zero(1);
  z.up();
  z.constrain(0, 1, raw_bound(-5, false));  // x >= 5
  auto before = z;
  z.extrapolate(3);
  CHECK(z.includes(before));
  CHECK(z.at(0, 1) == raw_bound(-3, true));  // x > 3
}
