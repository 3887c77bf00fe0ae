#pragma once

// Newton polygons of univariate Puiseux polynomials and a checker for the univariate
// correspondence between valuations of roots and corner roots of the tropicalization.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "laytrop/polyfun.hpp"
#include "laytrop/puiseux.hpp"

namespace laytrop {

struct HullSegment {
  Rational slope;
  std::uint64_t length;
  bool operator==(const HullSegment&) const = default;
};

/// Lower convex hull of {(i, lowest exponent of a_i)}, segments ordered by increasing slope.
struct NewtonPolygon {
  std::vector<HullSegment> segments;
};

/// DomainError on the zero polynomial.
NewtonPolygon newton_polygon(const PuiseuxPolynomial& f);

/// Val of every nonzero root of f, with multiplicity, ascending. A segment of slope s and
/// length m contributes s, m times: with Val = -(lowest exponent), a root of order -s has Val s.
std::vector<Rational> root_valuations(const PuiseuxPolynomial& f);

/// The value x at which val(alpha) + i x = val(beta) + j x. DomainError when i == j.
Rational bourbaki_extension(const PuiseuxSeries& alpha, std::int64_t i, const PuiseuxSeries& beta, std::int64_t j);

/// Expands corner roots into a sorted multiset.
std::vector<Rational> expand_multiset(std::span<const CornerRoot> roots);

struct KapranovReport {
  bool forward = false;   // Val(r) is a corner root of trop(f) for every known nonzero root
  bool reverse = false;   // corner roots == Newton valuations (== Val of known roots when complete)
  bool exploded = false;  // the exploded sum vanishes in sort at every corner root
  std::vector<Rational> valuations;         // Val of the known nonzero roots
  std::vector<Rational> newton_valuations;  // from the Newton polygon
  std::vector<CornerRoot> corner_roots;     // of trop(f)
  std::vector<std::string> notes;

  bool pass() const { return forward && reverse && exploded; }
};

/// Checks the correspondence on f with exactly known roots. Zero roots carry no valuation
/// and are skipped. OracleViolation when some r is not a root of f or more roots are given
/// than the degree allows.
KapranovReport kapranov_verify(const PuiseuxPolynomial& f, std::span<const PuiseuxSeries> known_roots);

/// Random monomial roots c * t^e for split test polynomials. Repeated and equal-valuation
/// roots are deliberately common.
std::vector<PuiseuxSeries> random_monomial_roots(std::mt19937_64& rng, std::size_t degree);

struct KapranovFailure {
  std::string poly;
  std::vector<std::string> roots;
  std::vector<std::string> corner_roots;  // expanded multiset
  std::vector<std::string> valuations;
};

struct KapranovBatch {
  bool pass = true;
  std::size_t trials = 0;
  std::vector<KapranovFailure> failures;
};

/// `trials` random products of `degree` linear factors seeded with `seed`.
KapranovBatch kapranov_batch(std::size_t degree, std::size_t trials, std::uint64_t seed);

}  // namespace laytrop
