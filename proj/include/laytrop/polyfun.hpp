#pragma once

// Layered (Laurent) polynomials viewed as functions on points of R(L, G)^n.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laytrop/layered.hpp"

namespace laytrop {

using Exponent = std::vector<std::int64_t>;
using Point = std::vector<LayeredScalar>;

struct Monomial {
  Exponent exponent;
  LayeredScalar coefficient;
  bool operator==(const Monomial&) const = default;
};

/// Nonempty finite sum of monomials with distinct exponent vectors, stored in
/// exponent-lexicographic order. Monomial indices refer to that order.
class LayeredPolynomial {
 public:
  /// Merges duplicate exponents by layered addition. DomainError on an empty term list,
  /// arity mismatch, mixed flavors, or a negative exponent when !laurent.
  LayeredPolynomial(std::size_t nvars, std::vector<Monomial> terms, bool laurent = false);

  static LayeredPolynomial constant(std::size_t nvars, const LayeredScalar& c, bool laurent = false);
  /// The polynomial lambda_k (0-based k) with unit coefficient.
  static LayeredPolynomial variable(std::size_t nvars, std::size_t k, Flavors f = {});

  std::size_t nvars() const noexcept { return nvars_; }
  bool laurent() const noexcept { return laurent_; }
  Flavors flavors() const noexcept { return terms_.front().coefficient.flavors(); }
  std::span<const Monomial> monomials() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Monomial& monomial(std::size_t i) const;
  /// Coefficient of the given exponent, if present.
  std::optional<LayeredScalar> coefficient(const Exponent& e) const;

  bool operator==(const LayeredPolynomial&) const = default;

  /// Text in the polynomial grammar (variables x1..xn).
  std::string to_string() const;

 private:
  std::size_t nvars_;
  bool laurent_;
  std::vector<Monomial> terms_;
};

LayeredPolynomial poly_add(const LayeredPolynomial& f, const LayeredPolynomial& g);
LayeredPolynomial poly_mul(const LayeredPolynomial& f, const LayeredPolynomial& g);
LayeredPolynomial poly_pow(const LayeredPolynomial& f, std::uint64_t m);
inline LayeredPolynomial operator+(const LayeredPolynomial& f, const LayeredPolynomial& g) { return poly_add(f, g); }
inline LayeredPolynomial operator*(const LayeredPolynomial& f, const LayeredPolynomial& g) { return poly_mul(f, g); }

/// Value of a single monomial at a.
LayeredScalar eval_monomial(const Monomial& m, const Point& a);
LayeredScalar eval(const LayeredPolynomial& f, const Point& a);

/// Indices of the monomials nu-equivalent to f(a).
std::vector<std::size_t> dominant_part(const LayeredPolynomial& f, const Point& a);

/// f(a) is an s(f_i(a))-ghost for every monomial f_i. Over trivial L: at least two
/// monomials are dominant.
bool is_corner_root(const LayeredPolynomial& f, const Point& a);
/// A single dominant monomial whose value f(a) is already a 1-ghost.
bool is_cluster_root(const LayeredPolynomial& f, const Point& a);

/// s(f(a)).
SortingLayer layering_map(const LayeredPolynomial& f, const Point& a);
/// min over fs of s(f(a)). DomainError on an empty set.
SortingLayer layering_map_set(std::span<const LayeredPolynomial> fs, const Point& a);

/// Finite rectangular sample of R^n; every axis runs lower, lower+step, ... <= upper.
/// Each coordinate takes every layer listed in `layers` (tangible when empty).
struct GridSpec {
  struct Axis {
    Rational lower;
    Rational upper;
    Rational step;
  };
  std::vector<Axis> axes;
  std::vector<SortingLayer> layers;
  Flavors flavors;

  /// The same axis repeated n times.
  static GridSpec uniform(std::size_t n, const Rational& lower, const Rational& upper, const Rational& step,
                          Flavors f = {});

  std::size_t dimension() const noexcept { return axes.size(); }
  /// Enumerates all points in lexicographic order. DomainError on step <= 0 or lower > upper.
  std::vector<Point> points() const;
};

struct ScanOptions {
  /// Worker threads for grid scans; 0 means hardware concurrency.
  unsigned threads = 1;
};

/// Keeps the points satisfying pred, preserving order.
std::vector<Point> scan_points(std::span<const Point> points, const std::function<bool(const Point&)>& pred,
                               ScanOptions opts = {});

/// Grid points that are corner roots of every f. DomainError on an empty set.
std::vector<Point> corner_locus(std::span<const LayeredPolynomial> fs, const GridSpec& grid, ScanOptions opts = {});
/// Grid points that are a corner or cluster root of every f.
std::vector<Point> combined_locus(std::span<const LayeredPolynomial> fs, const GridSpec& grid,
                                  ScanOptions opts = {});

/// Grid points where monomial i alone equals f(a) as a layered scalar.
std::vector<Point> component(const LayeredPolynomial& f, std::size_t i, const GridSpec& grid, ScanOptions opts = {});
/// Grid minus the corner locus of f.
std::vector<Point> principal_open(const LayeredPolynomial& f, const GridSpec& grid, ScanOptions opts = {});

struct CornerRoot {
  Rational root;
  std::uint64_t multiplicity;
  bool operator==(const CornerRoot&) const = default;
};

/// Exact corner roots of a univariate polynomial (values only): the breakpoints of the
/// upper envelope of its monomials, ascending, with multiplicity = exponent gap.
std::vector<CornerRoot> univariate_corner_roots(const LayeredPolynomial& f);

struct EssentialMonomials {
  std::vector<std::size_t> indices;
  /// False when decided by sampling (more than three variables).
  bool exact = true;
};

/// Monomials that strictly dominate all others at some tangible point.
/// `sample` is used only for n > 3; defaults to the cube [-8, 8]^n with unit step.
EssentialMonomials essential_monomials(const LayeredPolynomial& f, const std::optional<GridSpec>& sample = {});

/// f restricted to its essential monomials (univariate or n <= 3).
LayeredPolynomial essential_part(const LayeredPolynomial& f);

struct Verdict {
  bool equal;
  bool exact;
};

/// Equality of f and g as functions on tangible points. Univariate: exact (all envelope
/// breakpoints plus two points in every open cell). Otherwise the grid plus every point
/// obtained from a grid point by moving one coordinate onto a tie hyperplane of two
/// monomials; flagged approximate.
Verdict functionally_equal(const LayeredPolynomial& f, const LayeredPolynomial& g, const GridSpec& grid);

}  // namespace laytrop
