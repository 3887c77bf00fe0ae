#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include "laytrop/layered.hpp"
#include "laytrop/polyfun.hpp"
#include "laytrop/puiseux.hpp"

namespace laytrop {

/// Target of tropicalization: R(L, Q) for a chosen L. Values are always rational.
struct TropicalizationContext {
  LFlavor layers = LFlavor::NaturalInf;

  Flavors flavors() const noexcept { return {layers, GFlavor::RationalMax}; }
};

/// (1, val(p)). DomainError on the zero series.
LayeredScalar trop_scalar(const TropicalizationContext& ctx, const PuiseuxSeries& p);

/// Coefficient-wise trop_scalar; zero coefficients are absent. DomainError on the zero polynomial.
LayeredPolynomial trop_poly(const TropicalizationContext& ctx, const PuiseuxPolynomial& f);

/// (leading(p), val(p)).
ExplodedScalar explode_scalar(const PuiseuxSeries& p);

/// degree -> exploded coefficient.
using ExplodedPolynomial = std::map<std::size_t, ExplodedScalar>;

ExplodedPolynomial explode_poly(const PuiseuxPolynomial& f);

/// Sum over monomials of coefficient * x^degree in the exploded domain.
ExplodedScalar eval_exploded(const ExplodedPolynomial& f, const ExplodedScalar& x);

std::string to_string(const ExplodedPolynomial& f, const std::string& var = "L");

/// Action of an order-preserving map of value monoids on scalars and coefficients;
/// layers are untouched.
using ValueMap = std::function<Rational(const Rational&)>;
LayeredScalar map_values(const LayeredScalar& x, const ValueMap& phi);
LayeredPolynomial map_values(const LayeredPolynomial& f, const ValueMap& phi);

}  // namespace laytrop
