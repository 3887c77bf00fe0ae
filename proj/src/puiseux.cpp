#include "laytrop/puiseux.hpp"

#include <algorithm>

#include "laytrop/errors.hpp"

namespace laytrop {

namespace {

std::string coefficient_text(const Rational& c) {
  return c < 0 ? "(" + to_string(c) + ")" : to_string(c);
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient == 0) terms_.pop_back();
    } else if (t.coefficient != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coefficient, const Rational& exponent) {
  return PuiseuxSeries({{exponent, coefficient}});
}

PuiseuxSeries operator+(const PuiseuxSeries& p, const PuiseuxSeries& q) {
  std::vector<PuiseuxSeries::Term> out;
  out.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin(), b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->exponent < b->exponent)) {
      out.push_back(*a++);
    } else if (a == p.terms_.end() || b->exponent < a->exponent) {
      out.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) out.push_back({a->exponent, c});
      ++a;
      ++b;
    }
  }
  PuiseuxSeries r;
  r.terms_ = std::move(out);
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& p, const PuiseuxSeries& q) { return p + (-q); }

PuiseuxSeries operator*(const PuiseuxSeries& p, const PuiseuxSeries& q) {
  std::vector<PuiseuxSeries::Term> out;
  out.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) out.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
  return PuiseuxSeries(std::move(out));
}

std::string PuiseuxSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += coefficient_text(t.coefficient) + "*t^(" + laytrop::to_string(t.exponent) + ")";
  }
  return s;
}

Rational val(const PuiseuxSeries& p) {
  if (p.is_zero()) throw DomainError("valuation of the zero series is undefined");
  return -p.terms().front().exponent;
}

Rational leading(const PuiseuxSeries& p) {
  if (p.is_zero()) throw DomainError("the zero series has no leading coefficient");
  return p.terms().front().coefficient;
}

bool is_unit(const PuiseuxSeries& p) { return val(p) == 0; }

// --- exploded scalars -------------------------------------------------------

std::string ExplodedScalar::to_string() const {
  return "(" + laytrop::to_string(sort) + "|" + laytrop::to_string(value) + ")";
}

ExplodedScalar exploded_add(const ExplodedScalar& x, const ExplodedScalar& y) {
  if (x.value > y.value) return x;
  if (x.value < y.value) return y;
  return {x.sort + y.sort, x.value};
}

ExplodedScalar exploded_mul(const ExplodedScalar& x, const ExplodedScalar& y) {
  return {x.sort * y.sort, x.value + y.value};
}

ExplodedScalar exploded_pow(const ExplodedScalar& x, std::size_t m) {
  ExplodedScalar r{Rational(1), Rational(0)};
  for (std::size_t k = 0; k < m; ++k) r = exploded_mul(r, x);
  return r;
}

// --- polynomials ------------------------------------------------------------

PuiseuxPolynomial::PuiseuxPolynomial(std::vector<PuiseuxSeries> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void PuiseuxPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

PuiseuxPolynomial PuiseuxPolynomial::monomial(const PuiseuxSeries& c, std::size_t k) {
  std::vector<PuiseuxSeries> cs(k + 1);
  cs[k] = c;
  return PuiseuxPolynomial(std::move(cs));
}

PuiseuxPolynomial PuiseuxPolynomial::from_roots(std::span<const PuiseuxSeries> roots) {
  PuiseuxPolynomial f({PuiseuxSeries::constant(Rational(1))});
  for (const auto& r : roots) f = f * PuiseuxPolynomial({-r, PuiseuxSeries::constant(Rational(1))});
  return f;
}

std::size_t PuiseuxPolynomial::degree() const {
  if (coefficients_.empty()) throw DomainError("the zero polynomial has no degree");
  return coefficients_.size() - 1;
}

PuiseuxSeries PuiseuxPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : PuiseuxSeries();
}

PuiseuxPolynomial operator+(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) {
  std::vector<PuiseuxSeries> cs(std::max(f.coefficients_.size(), g.coefficients_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = f.coefficient(i) + g.coefficient(i);
  return PuiseuxPolynomial(std::move(cs));
}

PuiseuxPolynomial PuiseuxPolynomial::operator-() const {
  PuiseuxPolynomial r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

PuiseuxPolynomial operator-(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) { return f + (-g); }

PuiseuxPolynomial operator*(const PuiseuxPolynomial& f, const PuiseuxPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<PuiseuxSeries> cs(f.coefficients_.size() + g.coefficients_.size() - 1);
  for (std::size_t i = 0; i < f.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < g.coefficients_.size(); ++j)
      cs[i + j] += f.coefficients_[i] * g.coefficients_[j];
  return PuiseuxPolynomial(std::move(cs));
}

PuiseuxSeries PuiseuxPolynomial::evaluate(const PuiseuxSeries& x) const {
  PuiseuxSeries acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PuiseuxPolynomial::to_string(const std::string& var) const {
  if (coefficients_.empty()) return "0";
  std::string s;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const auto& c = coefficients_[i];
    for (const auto& t : c.terms()) {
      if (!s.empty()) s += " + ";
      s += coefficient_text(t.coefficient) + "*t^(" + laytrop::to_string(t.exponent) + ")";
      if (i == 1) s += "*" + var;
      else if (i > 1) s += "*" + var + "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace laytrop
