#include "laytrop/kapranov.hpp"

#include <algorithm>

#include "laytrop/errors.hpp"
#include "laytrop/tropicalization.hpp"

namespace laytrop {

NewtonPolygon newton_polygon(const PuiseuxPolynomial& f) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial is undefined");
  struct Pt {
    Rational x, y;
  };
  std::vector<Pt> pts;
  const auto& cs = f.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) pts.push_back({Rational(static_cast<unsigned long>(i)), -val(cs[i])});

  std::vector<Pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      Rational cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }

  NewtonPolygon np;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    Rational dx = hull[k + 1].x - hull[k].x;
    np.segments.push_back({(hull[k + 1].y - hull[k].y) / dx, dx.get_num().get_ui()});
  }
  return np;
}

std::vector<Rational> root_valuations(const PuiseuxPolynomial& f) {
  std::vector<Rational> out;
  for (const auto& s : newton_polygon(f).segments)
    for (std::uint64_t k = 0; k < s.length; ++k) out.push_back(s.slope);
  return out;
}

Rational bourbaki_extension(const PuiseuxSeries& alpha, std::int64_t i, const PuiseuxSeries& beta, std::int64_t j) {
  if (i == j) throw DomainError("monomials of equal degree cannot be made to tie");
  return (val(beta) - val(alpha)) / Rational(static_cast<long>(i - j));
}

std::vector<Rational> expand_multiset(std::span<const CornerRoot> roots) {
  std::vector<Rational> out;
  for (const auto& r : roots)
    for (std::uint64_t k = 0; k < r.multiplicity; ++k) out.push_back(r.root);
  std::sort(out.begin(), out.end());
  return out;
}

KapranovReport kapranov_verify(const PuiseuxPolynomial& f, std::span<const PuiseuxSeries> known_roots) {
  if (f.is_zero()) throw DomainError("cannot verify the zero polynomial");
  if (known_roots.size() > f.degree())
    throw OracleViolation("more known roots than the degree " + std::to_string(f.degree()));
  for (const auto& r : known_roots)
    if (!f.evaluate(r).is_zero()) throw OracleViolation(r.to_string() + " is not a root of " + f.to_string());

  KapranovReport rep;
  std::vector<const PuiseuxSeries*> nonzero;
  for (const auto& r : known_roots) {
    if (r.is_zero()) continue;
    nonzero.push_back(&r);
    rep.valuations.push_back(val(r));
  }
  std::sort(rep.valuations.begin(), rep.valuations.end());

  const TropicalizationContext ctx{};
  const LayeredPolynomial trop = trop_poly(ctx, f);

  rep.forward = std::all_of(nonzero.begin(), nonzero.end(), [&](const PuiseuxSeries* r) {
    return is_corner_root(trop, Point{trop_scalar(ctx, *r)});
  });
  if (!rep.forward) rep.notes.push_back("some root valuation is not a corner root");

  rep.newton_valuations = root_valuations(f);
  rep.corner_roots = univariate_corner_roots(trop);
  const auto corner_multiset = expand_multiset(rep.corner_roots);
  rep.reverse = corner_multiset == rep.newton_valuations;
  if (!rep.reverse) rep.notes.push_back("corner roots differ from Newton polygon valuations");
  // Zero roots are exactly the missing low-degree support, so completeness counts them too.
  if (known_roots.size() == f.degree()) {
    if (rep.valuations != rep.newton_valuations) {
      rep.reverse = false;
      rep.notes.push_back("known root valuations differ from Newton polygon valuations");
    }
  } else if (!std::includes(rep.newton_valuations.begin(), rep.newton_valuations.end(), rep.valuations.begin(),
                            rep.valuations.end())) {
    rep.reverse = false;
    rep.notes.push_back("known root valuations are not a sub-multiset of the Newton valuations");
  }

  const ExplodedPolynomial exploded = explode_poly(f);
  rep.exploded = true;
  for (const auto& c : rep.corner_roots) {
    bool found = false;
    for (const auto* r : nonzero) {
      if (val(*r) != c.root) continue;
      if (eval_exploded(exploded, explode_scalar(*r)).is_corner_ghost()) {
        found = true;
        break;
      }
    }
    // Without a complete root list a corner root may have no witness among the known roots.
    if (!found && known_roots.size() == f.degree()) {
      rep.exploded = false;
      rep.notes.push_back("no corner ghost at corner root " + to_string(c.root));
    }
  }
  return rep;
}

std::vector<PuiseuxSeries> random_monomial_roots(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), enum_(-4, 4), eden(1, 3), pick(0, 5);
  std::vector<PuiseuxSeries> roots;
  while (roots.size() < degree) {
    int choice = roots.empty() ? 5 : pick(rng);
    if (choice == 0) {
      roots.push_back(roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)]);
      continue;
    }
    int p = 0;
    while (p == 0) p = num(rng);
    Rational c(p, den(rng));
    c.canonicalize();
    Rational e;
    if (choice == 1) {
      // same valuation as an existing root, fresh coefficient
      e = -val(roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)]);
    } else {
      e = Rational(enum_(rng), eden(rng));
      e.canonicalize();
    }
    roots.push_back(PuiseuxSeries::monomial(c, e));
  }
  return roots;
}

KapranovBatch kapranov_batch(std::size_t degree, std::size_t trials, std::uint64_t seed) {
  if (degree == 0) throw DomainError("degree must be positive");
  std::mt19937_64 rng(seed);
  KapranovBatch batch;
  batch.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    auto roots = random_monomial_roots(rng, degree);
    auto f = PuiseuxPolynomial::from_roots(roots);
    auto rep = kapranov_verify(f, roots);
    if (rep.pass()) continue;
    batch.pass = false;
    KapranovFailure fail;
    fail.poly = f.to_string();
    for (const auto& r : roots) fail.roots.push_back(r.to_string());
    for (const auto& c : expand_multiset(rep.corner_roots)) fail.corner_roots.push_back(to_string(c));
    for (const auto& v : rep.valuations) fail.valuations.push_back(to_string(v));
    batch.failures.push_back(std::move(fail));
  }
  return batch;
}

}  // namespace laytrop
