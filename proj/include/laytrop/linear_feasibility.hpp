#pragma once

#include <vector>

#include "laytrop/rational.hpp"

namespace laytrop {

/// coefficients . x + constant > 0
struct StrictInequality {
  std::vector<Rational> coefficients;
  Rational constant;
};

/// Decides whether a system of strict rational linear inequalities in `nvars` unknowns has a
/// real solution, by Fourier-Motzkin elimination. Exact; exponential in the worst case, meant
/// for a handful of variables.
bool strictly_feasible(std::vector<StrictInequality> system, std::size_t nvars);

}  // namespace laytrop
