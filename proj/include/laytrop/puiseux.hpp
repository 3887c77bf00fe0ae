#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "laytrop/rational.hpp"

namespace laytrop {

/// A finite-support Puiseux series sum c_e t^e with rational exponents and coefficients.
///
/// Terms are kept sorted by strictly increasing exponent with no zero coefficients;
/// the empty term list is the zero series. Val is the negated lowest exponent, so
/// t^{-1} has valuation 1.
class PuiseuxSeries {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
    bool operator==(const Term&) const = default;
  };

  PuiseuxSeries() = default;
  /// Canonicalizes: sorts, merges equal exponents, drops zero coefficients.
  explicit PuiseuxSeries(std::vector<Term> terms);

  static PuiseuxSeries monomial(const Rational& coefficient, const Rational& exponent);
  static PuiseuxSeries constant(const Rational& c) { return monomial(c, Rational(0)); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend PuiseuxSeries operator+(const PuiseuxSeries& p, const PuiseuxSeries& q);
  friend PuiseuxSeries operator-(const PuiseuxSeries& p, const PuiseuxSeries& q);
  friend PuiseuxSeries operator*(const PuiseuxSeries& p, const PuiseuxSeries& q);
  PuiseuxSeries operator-() const;
  PuiseuxSeries& operator+=(const PuiseuxSeries& q) { return *this = *this + q; }
  PuiseuxSeries& operator*=(const PuiseuxSeries& q) { return *this = *this * q; }

  bool operator==(const PuiseuxSeries&) const = default;

  /// "c*t^(e) + ..."; "0" for the zero series.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

inline PuiseuxSeries ps_add(const PuiseuxSeries& p, const PuiseuxSeries& q) { return p + q; }
inline PuiseuxSeries ps_mul(const PuiseuxSeries& p, const PuiseuxSeries& q) { return p * q; }
inline PuiseuxSeries ps_neg(const PuiseuxSeries& p) { return -p; }

/// -(lowest exponent). DomainError on the zero series.
Rational val(const PuiseuxSeries& p);
/// Coefficient of the lowest-exponent term (the residue map pi). DomainError on zero.
Rational leading(const PuiseuxSeries& p);
/// val(p) == 0. DomainError on zero.
bool is_unit(const PuiseuxSeries& p);

/// Element of the exploded domain R(residue field, G): a residue "sort" and a value.
/// Sort 0 marks a corner ghost.
struct ExplodedScalar {
  Rational sort;
  Rational value;

  bool operator==(const ExplodedScalar&) const = default;
  bool is_corner_ghost() const { return sort == 0; }
  std::string to_string() const;
};

ExplodedScalar exploded_add(const ExplodedScalar& x, const ExplodedScalar& y);
ExplodedScalar exploded_mul(const ExplodedScalar& x, const ExplodedScalar& y);
ExplodedScalar exploded_pow(const ExplodedScalar& x, std::size_t m);

/// Univariate polynomial over Puiseux series, coefficient i multiplying lambda^i.
/// The coefficient vector is trimmed so that the leading coefficient is nonzero.
class PuiseuxPolynomial {
 public:
  PuiseuxPolynomial() = default;
  explicit PuiseuxPolynomial(std::vector<PuiseuxSeries> coefficients);

  /// prod_k (lambda - r_k).
  static PuiseuxPolynomial from_roots(std::span<const PuiseuxSeries> roots);
  /// lambda^k times c.
  static PuiseuxPolynomial monomial(const PuiseuxSeries& c, std::size_t k);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Degree; DomainError on the zero polynomial.
  std::size_t degree() const;
  const std::vector<PuiseuxSeries>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of lambda^i (zero beyond the degree).
  PuiseuxSeries coefficient(std::size_t i) const;

  friend PuiseuxPolynomial operator+(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g);
  friend PuiseuxPolynomial operator-(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g);
  friend PuiseuxPolynomial operator*(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g);
  PuiseuxPolynomial operator-() const;

  bool operator==(const PuiseuxPolynomial&) const = default;

  PuiseuxSeries evaluate(const PuiseuxSeries& x) const;

  /// Text in the parser's grammar using `var` for lambda.
  std::string to_string(const std::string& var = "L") const;

 private:
  void trim();
  std::vector<PuiseuxSeries> coefficients_;
};

}  // namespace laytrop
