#pragma once

// Text formats.
//
// Scalars:      `v` is (1, v); `(l|v)` is (l, v); `(inf|v)` has the infinite layer;
//               values are integers or p/q, optionally signed.
// Polynomials:  terms joined by `+`; a term is a scalar, a monomial `x1^e1*...*xn^en`,
//               or `scalar*monomial`. A bare monomial has the unit coefficient 0.
// Puiseux:      sums/differences of products of rationals, `t^(e)` with rational e, and
//               powers of the polynomial variable; parentheses group. E.g.
//               `3*t^(-1/2) + 2*t^(0)` or `(L - t^(-1))*(L - 2)`.
//
// All parse failures raise ParseError with a 1-based line and column.

#include <optional>
#include <string>
#include <string_view>

#include "laytrop/layered.hpp"
#include "laytrop/polyfun.hpp"
#include "laytrop/puiseux.hpp"

namespace laytrop {

struct PolynomialSyntax {
  Flavors flavors;
  bool laurent = false;
  /// Number of variables; inferred from the highest index used (at least 1) when unset.
  std::optional<std::size_t> nvars;
};

LayeredScalar parse_scalar(std::string_view text, Flavors flavors = {});
LayeredPolynomial parse_polynomial(std::string_view text, const PolynomialSyntax& syntax = {});

PuiseuxSeries parse_puiseux(std::string_view text);
PuiseuxPolynomial parse_puiseux_polynomial(std::string_view text, std::string_view var = "L");

}  // namespace laytrop
