#include "laytrop/congruence.hpp"

#include <algorithm>
#include <random>

#include "laytrop/errors.hpp"

namespace laytrop {

// --- FinitePointSet ---------------------------------------------------------

FinitePointSet::FinitePointSet(std::vector<Point> points) {
  for (auto& p : points) {
    if (!points_.empty() && p.size() != points_.front().size()) throw DomainError("points of mixed arity");
    if (!contains(p)) points_.push_back(std::move(p));
  }
}

bool FinitePointSet::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

bool FinitePointSet::is_subset_of(const FinitePointSet& other) const {
  return std::all_of(points_.begin(), points_.end(), [&](const Point& p) { return other.contains(p); });
}

FinitePointSet set_union(const FinitePointSet& a, const FinitePointSet& b) {
  std::vector<Point> all = a.points_;
  all.insert(all.end(), b.points_.begin(), b.points_.end());
  return FinitePointSet(std::move(all));
}

bool FinitePointSet::operator==(const FinitePointSet& o) const {
  return size() == o.size() && is_subset_of(o);
}

// --- congruences and varieties ----------------------------------------------

bool congruent_on(const LayeredPolynomial& f, const LayeredPolynomial& g, const FinitePointSet& X) {
  if (X.empty()) throw DomainError("congruence on an empty point set");
  if (f.nvars() != g.nvars()) throw DomainError("polynomial arity mismatch");
  return std::all_of(X.points().begin(), X.points().end(), [&](const Point& a) { return eval(f, a) == eval(g, a); });
}

Variety variety_of(const CongruenceGenerators& gens, const FinitePointSet& search) {
  Variety v;
  v.diagonal = gens.empty();
  std::vector<Point> keep;
  for (const auto& a : search.points()) {
    bool ok = std::all_of(gens.begin(), gens.end(),
                          [&](const GeneratorPair& p) { return eval(p.first, a) == eval(p.second, a); });
    if (ok) keep.push_back(a);
  }
  v.points = FinitePointSet(std::move(keep));
  return v;
}

Variety variety_of(const CongruenceGenerators& gens, const GridSpec& search) {
  return variety_of(gens, FinitePointSet(search.points()));
}

// --- coordinate semiring ----------------------------------------------------

CoordinateSemiring::CoordinateSemiring(FinitePointSet X) : X_(std::move(X)) {
  if (X_.empty()) throw DomainError("coordinate semiring of an empty point set");
}

CoordinateFunction CoordinateSemiring::image(const LayeredPolynomial& f) const {
  std::vector<LayeredScalar> vals;
  vals.reserve(X_.size());
  for (const auto& a : X_.points()) vals.push_back(eval(f, a));
  return {std::move(vals), f};
}

std::vector<CoordinateFunction> CoordinateSemiring::images(std::span<const LayeredPolynomial> basis) const {
  std::vector<CoordinateFunction> out;
  for (const auto& f : basis) out.push_back(image(f));
  return out;
}

CoordinateFunction CoordinateSemiring::add(const CoordinateFunction& a, const CoordinateFunction& b) const {
  if (a.values.size() != X_.size() || b.values.size() != X_.size())
    throw DomainError("coordinate function from a different domain");
  std::vector<LayeredScalar> vals;
  for (std::size_t i = 0; i < X_.size(); ++i) vals.push_back(laytrop::add(a.values[i], b.values[i]));
  return {std::move(vals), poly_add(a.witness, b.witness)};
}

CoordinateFunction CoordinateSemiring::mul(const CoordinateFunction& a, const CoordinateFunction& b) const {
  if (a.values.size() != X_.size() || b.values.size() != X_.size())
    throw DomainError("coordinate function from a different domain");
  std::vector<LayeredScalar> vals;
  for (std::size_t i = 0; i < X_.size(); ++i) vals.push_back(laytrop::mul(a.values[i], b.values[i]));
  return {std::move(vals), poly_mul(a.witness, b.witness)};
}

CoordinateFunction CoordinateSemiring::restrict_to(const CoordinateFunction& a, const FinitePointSet& X) const {
  std::vector<LayeredScalar> vals;
  for (const auto& p : X.points()) {
    auto it = std::find(X_.points().begin(), X_.points().end(), p);
    if (it == X_.points().end()) throw DomainError("restriction target is not contained in the domain");
    vals.push_back(a.values[static_cast<std::size_t>(it - X_.points().begin())]);
  }
  return {std::move(vals), a.witness};
}

CoordinateSemiring coordinate_semiring(FinitePointSet X) { return CoordinateSemiring(std::move(X)); }

// --- Zariski roundtrip ------------------------------------------------------

namespace {

struct Shape {
  std::size_t nvars;
  bool laurent;
  Flavors flavors;
};

// Small polynomials used to translate and multiply generator pairs.
std::vector<LayeredPolynomial> helper_family(const Shape& s) {
  std::vector<LayeredPolynomial> h;
  auto konst = [&](long v) {
    return LayeredPolynomial::constant(s.nvars, LayeredScalar::tangible(Rational(v), s.flavors), s.laurent);
  };
  h.push_back(konst(0));
  h.push_back(konst(1));
  if (s.flavors.values != GFlavor::NaturalMax) h.push_back(konst(-1));
  for (std::size_t k = 0; k < s.nvars; ++k) {
    Exponent ex(s.nvars, 0);
    ex[k] = 1;
    LayeredPolynomial x(s.nvars, {{ex, e(SortingLayer::one(s.flavors.layers), s.flavors.values)}}, s.laurent);
    h.push_back(x);
    h.push_back(poly_add(x, konst(0)));
  }
  return h;
}

bool agrees(const GeneratorPair& p, const FinitePointSet& X) {
  return X.empty() || congruent_on(p.first, p.second, X);
}

FinitePointSet random_subset(const FinitePointSet& S, std::mt19937_64& rng) {
  std::vector<Point> pts;
  std::bernoulli_distribution coin(0.5);
  for (const auto& p : S.points())
    if (coin(rng)) pts.push_back(p);
  if (pts.empty()) pts.push_back(S.points()[std::uniform_int_distribution<std::size_t>(0, S.size() - 1)(rng)]);
  return FinitePointSet(std::move(pts));
}

}  // namespace

ZariskiReport zariski_roundtrip(const CongruenceGenerators& gens, const FinitePointSet& search, std::uint64_t seed) {
  if (search.empty()) throw DomainError("empty search domain");
  ZariskiReport rep;
  rep.search_points = search.size();
  rep.variety = variety_of(gens, search);
  const FinitePointSet& V = rep.variety.points;

  const Point& sample = search.points().front();
  Shape shape{sample.size(), false, sample.front().flavors()};
  if (!gens.empty()) shape = {gens.front().first.nvars(), gens.front().first.laurent(), gens.front().first.flavors()};

  std::mt19937_64 rng(seed);
  const auto helpers = helper_family(shape);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  // Every pair built here lies in the congruence of V: generators agree on V by
  // construction, congruences respect + and *, and candidates are filtered on V.
  CongruenceGenerators probe = gens;
  for (const auto& g : gens) {
    for (const auto& h : helpers) {
      probe.emplace_back(poly_add(g.first, h), poly_add(g.second, h));
      probe.emplace_back(poly_mul(g.first, h), poly_mul(g.second, h));
    }
  }
  for (int r = 0; r < 16 && !gens.empty(); ++r) {
    const auto& g = gens[pick(gens.size())];
    const auto& h1 = helpers[pick(helpers.size())];
    const auto& h2 = helpers[pick(helpers.size())];
    probe.emplace_back(poly_add(poly_mul(g.first, h1), h2), poly_add(poly_mul(g.second, h1), h2));
  }
  std::vector<LayeredPolynomial> candidates = helpers;
  for (const auto& g : gens) {
    candidates.push_back(g.first);
    candidates.push_back(g.second);
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      GeneratorPair p{candidates[i], candidates[j]};
      if (agrees(p, V)) probe.push_back(std::move(p));
    }
  rep.probe_pairs = probe.size();

  rep.reconstructed = variety_of(probe, search).points;
  rep.roundtrip = rep.reconstructed == V;

  rep.antitone_generators = V.is_subset_of(variety_of(CongruenceGenerators{}, search).points) &&
                            rep.reconstructed.is_subset_of(V);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    CongruenceGenerators fewer;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != k) fewer.push_back(gens[i]);
    if (!V.is_subset_of(variety_of(fewer, search).points)) rep.antitone_generators = false;
  }

  FinitePointSet X = V.empty() ? FinitePointSet({search.points().front()}) : V;
  FinitePointSet Y = set_union(X, random_subset(search, rng));
  rep.antitone_points = std::all_of(probe.begin(), probe.end(), [&](const GeneratorPair& p) {
    return !congruent_on(p.first, p.second, Y) || congruent_on(p.first, p.second, X);
  });

  FinitePointSet A = random_subset(search, rng);
  FinitePointSet B = random_subset(search, rng);
  FinitePointSet AB = set_union(A, B);
  rep.union_law = std::all_of(probe.begin(), probe.end(), [&](const GeneratorPair& p) {
    return congruent_on(p.first, p.second, AB) ==
           (congruent_on(p.first, p.second, A) && congruent_on(p.first, p.second, B));
  });
  return rep;
}

ZariskiReport zariski_roundtrip(const CongruenceGenerators& gens, const GridSpec& search, std::uint64_t seed) {
  return zariski_roundtrip(gens, FinitePointSet(search.points()), seed);
}

}  // namespace laytrop
