#include "laytrop/tropicalization.hpp"

#include "laytrop/errors.hpp"

namespace laytrop {

LayeredScalar trop_scalar(const TropicalizationContext& ctx, const PuiseuxSeries& p) {
  if (p.is_zero()) throw DomainError("cannot tropicalize the zero series");
  return LayeredScalar::tangible(val(p), ctx.flavors());
}

LayeredPolynomial trop_poly(const TropicalizationContext& ctx, const PuiseuxPolynomial& f) {
  if (f.is_zero()) throw DomainError("cannot tropicalize the zero polynomial");
  std::vector<Monomial> terms;
  const auto& cs = f.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) terms.push_back({Exponent{static_cast<std::int64_t>(i)}, trop_scalar(ctx, cs[i])});
  return LayeredPolynomial(1, std::move(terms));
}

ExplodedScalar explode_scalar(const PuiseuxSeries& p) {
  if (p.is_zero()) throw DomainError("cannot explode the zero series");
  return {leading(p), val(p)};
}

ExplodedPolynomial explode_poly(const PuiseuxPolynomial& f) {
  ExplodedPolynomial out;
  const auto& cs = f.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) out.emplace(i, explode_scalar(cs[i]));
  return out;
}

ExplodedScalar eval_exploded(const ExplodedPolynomial& f, const ExplodedScalar& x) {
  if (f.empty()) throw DomainError("cannot evaluate an empty exploded polynomial");
  auto it = f.begin();
  ExplodedScalar sum = exploded_mul(it->second, exploded_pow(x, it->first));
  for (++it; it != f.end(); ++it) sum = exploded_add(sum, exploded_mul(it->second, exploded_pow(x, it->first)));
  return sum;
}

std::string to_string(const ExplodedPolynomial& f, const std::string& var) {
  std::string s;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.to_string();
    if (it->first == 1) s += "*" + var;
    else if (it->first > 1) s += "*" + var + "^" + std::to_string(it->first);
  }
  return s;
}

LayeredScalar map_values(const LayeredScalar& x, const ValueMap& phi) {
  return {x.layer(), Value(phi(x.rational()), x.value().flavor())};
}

LayeredPolynomial map_values(const LayeredPolynomial& f, const ValueMap& phi) {
  std::vector<Monomial> terms;
  for (const auto& m : f.monomials()) terms.push_back({m.exponent, map_values(m.coefficient, phi)});
  return LayeredPolynomial(f.nvars(), std::move(terms), f.laurent());
}

}  // namespace laytrop
