#include <doctest.h>

#include "laytrop/linear_feasibility.hpp"
#include "support.hpp"

using namespace laytrop;

namespace {

StrictInequality ineq(std::vector<long> a, long b) {
  StrictInequality s;
  for (long x : a) s.coefficients.emplace_back(x);
  s.constant = b;
  return s;
}

}  // namespace

TEST_CASE("one variable") {
  CHECK(strictly_feasible({ineq({1}, 0)}, 1));                    // x > 0
  CHECK(strictly_feasible({ineq({1}, 0), ineq({-1}, 1)}, 1));     // 0 < x < 1
  CHECK_FALSE(strictly_feasible({ineq({1}, 0), ineq({-1}, 0)}, 1));  // x > 0, x < 0
  CHECK_FALSE(strictly_feasible({ineq({0}, 0)}, 1));              // 0 > 0
  CHECK(strictly_feasible({}, 2));
}

TEST_CASE("strictness matters at a single point") {
  // x >= 1 and x <= 1 would be feasible; strict versions are not.
  CHECK_FALSE(strictly_feasible({ineq({1}, -1), ineq({-1}, 1)}, 1));
  CHECK(strictly_feasible({ineq({2}, -1), ineq({-2}, 3)}, 1));
}

TEST_CASE("two and three variables") {
  // x + y > 0, x - y > 0, -x + 1 > 0
  CHECK(strictly_feasible({ineq({1, 1}, 0), ineq({1, -1}, 0), ineq({-1, 0}, 1)}, 2));
  // x > y, y > z, z > x
  CHECK_FALSE(strictly_feasible({ineq({1, -1, 0}, 0), ineq({0, 1, -1}, 0), ineq({-1, 0, 1}, 0)}, 3));
  // x + y + z > 3, x < 1, y < 1, z < 1
  CHECK_FALSE(strictly_feasible({ineq({1, 1, 1}, -3), ineq({-1, 0, 0}, 1), ineq({0, -1, 0}, 1), ineq({0, 0, -1}, 1)}, 3));
  CHECK(strictly_feasible({ineq({1, 1, 1}, -3), ineq({-1, 0, 0}, 2), ineq({0, -1, 0}, 1), ineq({0, 0, -1}, 1)}, 3));
}

TEST_CASE("never rejects a system with a grid witness on random 2-variable systems") {
  testing::Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    std::vector<StrictInequality> sys;
    auto m = testing::uniform_int(rng, 1, 4);
    for (int k = 0; k < m; ++k)
      sys.push_back(ineq({static_cast<long>(testing::uniform_int(rng, -2, 2)), static_cast<long>(testing::uniform_int(rng, -2, 2))},
                         static_cast<long>(testing::uniform_int(rng, -3, 3))));
    bool witness = false;
    for (int a = -40; a <= 40 && !witness; ++a)
      for (int b = -40; b <= 40 && !witness; ++b) {
        Rational x(a, 4), y(b, 4);
        bool ok = true;
        for (const auto& s : sys) ok = ok && s.coefficients[0] * x + s.coefficients[1] * y + s.constant > 0;
        witness = ok;
      }
    // A witness proves feasibility; a thin feasible region can still miss the sample.
    if (witness) CHECK(strictly_feasible(sys, 2));
  }
}
