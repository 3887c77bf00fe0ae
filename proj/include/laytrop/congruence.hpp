#pragma once

// Congruences of polynomial functions on finite point sets, their varieties, and
// coordinate semirings realized as evaluation vectors.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "laytrop/polyfun.hpp"

namespace laytrop {

/// Deduplicated, order-preserving list of points of a common arity.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  explicit FinitePointSet(std::vector<Point> points);

  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const Point& p) const;
  bool is_subset_of(const FinitePointSet& other) const;

  friend FinitePointSet set_union(const FinitePointSet& a, const FinitePointSet& b);
  bool operator==(const FinitePointSet& o) const;  // as sets

 private:
  std::vector<Point> points_;
};

using GeneratorPair = std::pair<LayeredPolynomial, LayeredPolynomial>;
using CongruenceGenerators = std::vector<GeneratorPair>;

/// f(a) == g(a) (full layered equality) for every a in X. DomainError on empty X.
bool congruent_on(const LayeredPolynomial& f, const LayeredPolynomial& g, const FinitePointSet& X);

struct Variety {
  FinitePointSet points;
  /// Set when there were no generators: the diagonal congruence cuts out the whole domain.
  bool diagonal = false;
};

/// Points of `search` where every generator pair agrees.
Variety variety_of(const CongruenceGenerators& gens, const FinitePointSet& search);
Variety variety_of(const CongruenceGenerators& gens, const GridSpec& search);

/// A polynomial function on X, stored as its evaluation vector, with one polynomial
/// representing it.
struct CoordinateFunction {
  std::vector<LayeredScalar> values;
  LayeredPolynomial witness;

  bool operator==(const CoordinateFunction& o) const { return values == o.values; }
};

/// F[X]: polynomials modulo agreement on X.
class CoordinateSemiring {
 public:
  /// DomainError on empty X.
  explicit CoordinateSemiring(FinitePointSet X);

  const FinitePointSet& domain() const noexcept { return X_; }

  /// The quotient map.
  CoordinateFunction image(const LayeredPolynomial& f) const;
  std::vector<CoordinateFunction> images(std::span<const LayeredPolynomial> basis) const;

  CoordinateFunction add(const CoordinateFunction& a, const CoordinateFunction& b) const;
  CoordinateFunction mul(const CoordinateFunction& a, const CoordinateFunction& b) const;

  /// F[Y] -> F[X] for X contained in this domain Y: projection onto X's coordinates.
  CoordinateFunction restrict_to(const CoordinateFunction& a, const FinitePointSet& X) const;

 private:
  FinitePointSet X_;
};

CoordinateSemiring coordinate_semiring(FinitePointSet X);

struct ZariskiReport {
  Variety variety;                   // V = V(gens)
  FinitePointSet reconstructed;      // V(probe family of Omega_V)
  std::size_t probe_pairs = 0;
  std::size_t search_points = 0;
  bool roundtrip = false;            // reconstructed == V
  bool antitone_generators = false;  // dropping generators never shrinks the variety
  bool antitone_points = false;      // X in Y implies Omega_Y in Omega_X on the probe family
  bool union_law = false;            // Omega_{X u Y} == Omega_X n Omega_Y on the probe family

  bool pass() const { return roundtrip && antitone_generators && antitone_points && union_law; }
};

/// Computes V(gens), the congruence of V restricted to a finite probe family (the generators,
/// their translates and multiples by small polynomials, and candidate pairs that agree on V),
/// and checks V(that family) == V together with the antitone laws. `seed` drives the random
/// parts of the probe family and the point subsets.
ZariskiReport zariski_roundtrip(const CongruenceGenerators& gens, const FinitePointSet& search,
                                std::uint64_t seed = 0);
ZariskiReport zariski_roundtrip(const CongruenceGenerators& gens, const GridSpec& search, std::uint64_t seed = 0);

}  // namespace laytrop
