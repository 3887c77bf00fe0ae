#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "laytrop/layered.hpp"
#include "laytrop/polyfun.hpp"
#include "laytrop/puiseux.hpp"

namespace laytrop::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Small rationals with frequent collisions so that ties are exercised.
inline Rational small_rational(Rng& rng, std::int64_t span = 4, std::int64_t max_den = 2) {
  Rational q(uniform_int(rng, -span * max_den, span * max_den), uniform_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline SortingLayer random_layer(Rng& rng, LFlavor f) {
  switch (f) {
    case LFlavor::Trivial:
      return SortingLayer::one(f);
    case LFlavor::Supertropical:
      return uniform_int(rng, 0, 2) == 0 ? SortingLayer::infinity(f) : SortingLayer::one(f);
    case LFlavor::NaturalInf:
      if (uniform_int(rng, 0, 9) == 0) return SortingLayer::infinity(f);
      return SortingLayer::natural(static_cast<std::uint64_t>(uniform_int(rng, 1, 4)), f);
  }
  return SortingLayer::one(f);
}

inline LayeredScalar random_scalar(Rng& rng, Flavors f) {
  Rational v = f.values == GFlavor::RationalMax ? small_rational(rng) : Rational(uniform_int(rng, 0, 5));
  return LayeredScalar::of(random_layer(rng, f.layers), v, f.values);
}

inline LayeredScalar random_tangible(Rng& rng, Flavors f = {}) {
  return LayeredScalar::tangible(small_rational(rng), f);
}

inline Point random_point(Rng& rng, std::size_t n, Flavors f = {}, bool tangible = false) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(tangible ? random_tangible(rng, f) : random_scalar(rng, f));
  return p;
}

inline LayeredPolynomial random_polynomial(Rng& rng, std::size_t n, std::size_t terms, std::int64_t max_exp,
                                           Flavors f = {}, bool tangible = false) {
  // Exponents are drawn distinct so that coefficients are not merged.
  std::vector<Monomial> ms;
  for (std::size_t t = 0, attempts = 0; t < terms && attempts < 8 * terms; ++attempts) {
    Exponent e(n);
    for (auto& x : e) x = uniform_int(rng, 0, max_exp);
    if (std::any_of(ms.begin(), ms.end(), [&](const Monomial& m) { return m.exponent == e; })) continue;
    ms.push_back({e, tangible ? random_tangible(rng, f) : random_scalar(rng, f)});
    ++t;
  }
  return LayeredPolynomial(n, std::move(ms));
}

inline PuiseuxSeries random_series(Rng& rng, std::size_t max_terms = 4) {
  std::vector<PuiseuxSeries::Term> terms;
  auto count = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_terms)));
  for (std::size_t i = 0; i < count; ++i) {
    Rational c(uniform_int(rng, 1, 6) * (uniform_int(rng, 0, 1) ? 1 : -1), uniform_int(rng, 1, 3));
    c.canonicalize();
    terms.push_back({small_rational(rng, 3, 3), c});
  }
  PuiseuxSeries p(std::move(terms));
  return p.is_zero() ? PuiseuxSeries::constant(Rational(1)) : p;
}

}  // namespace laytrop::testing
