#include "laytrop/polyfun.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

#include "laytrop/errors.hpp"
#include "laytrop/linear_feasibility.hpp"

namespace laytrop {

namespace {

void require_arity(const LayeredPolynomial& f, const Point& a) {
  if (a.size() != f.nvars())
    throw DomainError("point has " + std::to_string(a.size()) + " coordinates, polynomial has " +
                      std::to_string(f.nvars()) + " variables");
}

void require_compatible(const LayeredPolynomial& f, const LayeredPolynomial& g) {
  if (f.nvars() != g.nvars()) throw DomainError("polynomial arity mismatch");
  if (f.laurent() != g.laurent()) throw DomainError("polynomial mode mismatch (Laurent vs ordinary)");
  if (f.flavors() != g.flavors()) throw DomainError("polynomial flavor mismatch");
}

// x^e for any integer e; negative powers negate the value and keep layer^|e|.
LayeredScalar power(const LayeredScalar& x, std::int64_t e) {
  if (e > 0) return pow(x, static_cast<std::uint64_t>(e));
  auto m = static_cast<std::uint64_t>(-e);
  LayeredScalar p = pow(x, m);
  return {p.layer(), Value(Rational(-p.rational()), p.value().flavor())};
}

std::string exponent_text(const Exponent& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k + 1);
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

Rational dot(const Exponent& e, const std::vector<Rational>& x) {
  Rational s(0);
  for (std::size_t k = 0; k < e.size(); ++k) s += Rational(static_cast<long>(e[k])) * x[k];
  return s;
}

}  // namespace

// --- LayeredPolynomial ------------------------------------------------------

LayeredPolynomial::LayeredPolynomial(std::size_t nvars, std::vector<Monomial> terms, bool laurent)
    : nvars_(nvars), laurent_(laurent) {
  if (terms.empty()) throw DomainError("a layered polynomial needs at least one monomial");
  const Flavors flavors = terms.front().coefficient.flavors();
  std::map<Exponent, LayeredScalar> merged;
  for (auto& t : terms) {
    if (t.exponent.size() != nvars) throw DomainError("monomial arity mismatch");
    if (t.coefficient.flavors() != flavors) throw DomainError("mixed coefficient flavors in one polynomial");
    if (!laurent && std::any_of(t.exponent.begin(), t.exponent.end(), [](std::int64_t e) { return e < 0; }))
      throw DomainError("negative exponent outside Laurent mode");
    auto [it, inserted] = merged.try_emplace(t.exponent, t.coefficient);
    if (!inserted) it->second = add(it->second, t.coefficient);
  }
  terms_.reserve(merged.size());
  for (auto& [e, c] : merged) terms_.push_back({e, c});
}

LayeredPolynomial LayeredPolynomial::constant(std::size_t nvars, const LayeredScalar& c, bool laurent) {
  return LayeredPolynomial(nvars, {{Exponent(nvars, 0), c}}, laurent);
}

LayeredPolynomial LayeredPolynomial::variable(std::size_t nvars, std::size_t k, Flavors f) {
  Exponent e(nvars, 0);
  e.at(k) = 1;
  return LayeredPolynomial(nvars, {{e, laytrop::e(SortingLayer::one(f.layers), f.values)}});
}

const Monomial& LayeredPolynomial::monomial(std::size_t i) const {
  if (i >= terms_.size()) throw DomainError("monomial index " + std::to_string(i) + " out of range");
  return terms_[i];
}

std::optional<LayeredScalar> LayeredPolynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Monomial& m, const Exponent& x) { return m.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return std::nullopt;
}

std::string LayeredPolynomial::to_string() const {
  std::string s;
  // Highest exponents first reads naturally; parsing does not depend on order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string mono = exponent_text(it->exponent);
    const auto& c = it->coefficient;
    bool unit = c.is_tangible() && c.rational() == 0;
    if (mono.empty()) s += c.to_string();
    else if (unit) s += mono;
    else s += c.to_string() + "*" + mono;
  }
  return s;
}

// --- arithmetic -------------------------------------------------------------

LayeredPolynomial poly_add(const LayeredPolynomial& f, const LayeredPolynomial& g) {
  require_compatible(f, g);
  std::vector<Monomial> terms(f.monomials().begin(), f.monomials().end());
  terms.insert(terms.end(), g.monomials().begin(), g.monomials().end());
  return LayeredPolynomial(f.nvars(), std::move(terms), f.laurent());
}

LayeredPolynomial poly_mul(const LayeredPolynomial& f, const LayeredPolynomial& g) {
  require_compatible(f, g);
  std::vector<Monomial> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.monomials()) {
    for (const auto& b : g.monomials()) {
      Exponent e(f.nvars());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exponent[k] + b.exponent[k];
      terms.push_back({std::move(e), mul(a.coefficient, b.coefficient)});
    }
  }
  return LayeredPolynomial(f.nvars(), std::move(terms), f.laurent());
}

LayeredPolynomial poly_pow(const LayeredPolynomial& f, std::uint64_t m) {
  if (m == 0) throw DomainError("poly_pow requires a positive exponent");
  LayeredPolynomial r = f;
  for (std::uint64_t k = 1; k < m; ++k) r = poly_mul(r, f);
  return r;
}

// --- evaluation -------------------------------------------------------------

LayeredScalar eval_monomial(const Monomial& m, const Point& a) {
  LayeredScalar v = m.coefficient;
  for (std::size_t k = 0; k < m.exponent.size(); ++k)
    if (m.exponent[k] != 0) v = mul(v, power(a[k], m.exponent[k]));
  return v;
}

LayeredScalar eval(const LayeredPolynomial& f, const Point& a) {
  require_arity(f, a);
  auto mons = f.monomials();
  LayeredScalar sum = eval_monomial(mons.front(), a);
  for (std::size_t i = 1; i < mons.size(); ++i) sum = add(sum, eval_monomial(mons[i], a));
  return sum;
}

std::vector<std::size_t> dominant_part(const LayeredPolynomial& f, const Point& a) {
  require_arity(f, a);
  std::vector<LayeredScalar> vals;
  vals.reserve(f.size());
  for (const auto& m : f.monomials()) vals.push_back(eval_monomial(m, a));
  const Rational* best = &vals.front().rational();
  for (const auto& v : vals)
    if (v.rational() > *best) best = &v.rational();
  std::vector<std::size_t> dom;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i].rational() == *best) dom.push_back(i);
  return dom;
}

bool is_corner_root(const LayeredPolynomial& f, const Point& a) {
  require_arity(f, a);
  if (f.flavors().layers == LFlavor::Trivial) return dominant_part(f, a).size() >= 2;
  const LayeredScalar total = eval(f, a);
  return std::all_of(f.monomials().begin(), f.monomials().end(), [&](const Monomial& m) {
    return is_ghost_over(total, eval_monomial(m, a).layer());
  });
}

bool is_cluster_root(const LayeredPolynomial& f, const Point& a) {
  auto dom = dominant_part(f, a);
  if (dom.size() != 1) return false;
  const LayeredScalar total = eval(f, a);
  return is_ghost_over(total, SortingLayer::one(total.layer().flavor()));
}

SortingLayer layering_map(const LayeredPolynomial& f, const Point& a) { return eval(f, a).layer(); }

SortingLayer layering_map_set(std::span<const LayeredPolynomial> fs, const Point& a) {
  if (fs.empty()) throw DomainError("layering map of an empty set is undefined");
  SortingLayer best = layering_map(fs.front(), a);
  for (std::size_t i = 1; i < fs.size(); ++i) best = std::min(best, layering_map(fs[i], a));
  return best;
}

// --- grids and scans --------------------------------------------------------

GridSpec GridSpec::uniform(std::size_t n, const Rational& lower, const Rational& upper, const Rational& step,
                           Flavors f) {
  GridSpec g;
  g.axes.assign(n, Axis{lower, upper, step});
  g.flavors = f;
  return g;
}

std::vector<Point> GridSpec::points() const {
  std::vector<SortingLayer> ls = layers;
  if (ls.empty()) ls.push_back(SortingLayer::one(flavors.layers));
  std::vector<std::vector<LayeredScalar>> per_axis;
  for (const auto& ax : axes) {
    if (ax.step <= 0) throw DomainError("grid step must be positive");
    if (ax.lower > ax.upper) throw DomainError("grid lower bound exceeds upper bound");
    std::vector<LayeredScalar> coords;
    for (Rational v = ax.lower; v <= ax.upper; v += ax.step)
      for (const auto& l : ls) coords.push_back(LayeredScalar::of(l, v, flavors.values));
    per_axis.push_back(std::move(coords));
  }
  std::vector<Point> out{Point{}};
  for (const auto& coords : per_axis) {
    std::vector<Point> next;
    next.reserve(out.size() * coords.size());
    for (const auto& p : out) {
      for (const auto& c : coords) {
        Point q = p;
        q.push_back(c);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Point> scan_points(std::span<const Point> points, const std::function<bool(const Point&)>& pred,
                               ScanOptions opts) {
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, points.size() / 64)));
  std::vector<char> keep(points.size(), 0);
  if (threads <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) keep[i] = pred(points[i]);
  } else {
    std::vector<std::jthread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < points.size(); i += threads) keep[i] = pred(points[i]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    workers.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (keep[i]) out.push_back(points[i]);
  return out;
}

std::vector<Point> corner_locus(std::span<const LayeredPolynomial> fs, const GridSpec& grid, ScanOptions opts) {
  if (fs.empty()) throw DomainError("corner locus of an empty set is ambiguous");
  auto pts = grid.points();
  return scan_points(pts, [&](const Point& a) {
    return std::all_of(fs.begin(), fs.end(), [&](const LayeredPolynomial& f) { return is_corner_root(f, a); });
  }, opts);
}

std::vector<Point> combined_locus(std::span<const LayeredPolynomial> fs, const GridSpec& grid, ScanOptions opts) {
  if (fs.empty()) throw DomainError("combined locus of an empty set is ambiguous");
  auto pts = grid.points();
  return scan_points(pts, [&](const Point& a) {
    return std::all_of(fs.begin(), fs.end(), [&](const LayeredPolynomial& f) {
      return is_corner_root(f, a) || is_cluster_root(f, a);
    });
  }, opts);
}

std::vector<Point> component(const LayeredPolynomial& f, std::size_t i, const GridSpec& grid, ScanOptions opts) {
  const Monomial& m = f.monomial(i);
  auto pts = grid.points();
  return scan_points(pts, [&](const Point& a) { return eval_monomial(m, a) == eval(f, a); }, opts);
}

std::vector<Point> principal_open(const LayeredPolynomial& f, const GridSpec& grid, ScanOptions opts) {
  auto pts = grid.points();
  return scan_points(pts, [&](const Point& a) { return !is_corner_root(f, a); }, opts);
}

// --- univariate envelope ----------------------------------------------------

namespace {

// Indices (into f's monomials) of the strict vertices of the upper hull of
// {(exponent, coefficient value)}, left to right.
std::vector<std::size_t> upper_hull(const LayeredPolynomial& f) {
  auto mons = f.monomials();
  std::vector<std::size_t> hull;
  auto x = [&](std::size_t i) { return Rational(static_cast<long>(mons[i].exponent[0])); };
  auto y = [&](std::size_t i) -> const Rational& { return mons[i].coefficient.rational(); };
  for (std::size_t p = 0; p < mons.size(); ++p) {
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2], b = hull.back();
      Rational cross = (x(b) - x(a)) * (y(p) - y(a)) - (y(b) - y(a)) * (x(p) - x(a));
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  return hull;
}

void require_univariate(const LayeredPolynomial& f) {
  if (f.nvars() != 1) throw DomainError("expected a univariate polynomial");
}

}  // namespace

std::vector<CornerRoot> univariate_corner_roots(const LayeredPolynomial& f) {
  require_univariate(f);
  auto mons = f.monomials();
  auto hull = upper_hull(f);
  std::vector<CornerRoot> roots;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Monomial& lo = mons[hull[k]];
    const Monomial& hi = mons[hull[k + 1]];
    std::int64_t gap = hi.exponent[0] - lo.exponent[0];
    Rational r = (lo.coefficient.rational() - hi.coefficient.rational()) / Rational(static_cast<long>(gap));
    roots.push_back({r, static_cast<std::uint64_t>(gap)});
  }
  return roots;
}

EssentialMonomials essential_monomials(const LayeredPolynomial& f, const std::optional<GridSpec>& sample) {
  EssentialMonomials out;
  auto mons = f.monomials();
  if (mons.size() == 1) {
    out.indices = {0};
    return out;
  }
  if (f.nvars() == 1) {
    out.indices = upper_hull(f);
    return out;
  }
  if (f.nvars() <= 3) {
    for (std::size_t i = 0; i < mons.size(); ++i) {
      std::vector<StrictInequality> sys;
      for (std::size_t j = 0; j < mons.size(); ++j) {
        if (j == i) continue;
        StrictInequality q;
        for (std::size_t k = 0; k < f.nvars(); ++k)
          q.coefficients.emplace_back(static_cast<long>(mons[i].exponent[k] - mons[j].exponent[k]));
        q.constant = mons[i].coefficient.rational() - mons[j].coefficient.rational();
        sys.push_back(std::move(q));
      }
      if (strictly_feasible(std::move(sys), f.nvars())) out.indices.push_back(i);
    }
    return out;
  }
  out.exact = false;
  GridSpec grid = sample ? *sample : GridSpec::uniform(f.nvars(), Rational(-8), Rational(8), Rational(1));
  std::vector<char> seen(mons.size(), 0);
  for (const auto& p : grid.points()) {
    std::vector<Rational> x;
    for (const auto& c : p) x.push_back(c.rational());
    std::size_t best = 0;
    bool unique = true;
    Rational best_val = mons[0].coefficient.rational() + dot(mons[0].exponent, x);
    for (std::size_t j = 1; j < mons.size(); ++j) {
      Rational v = mons[j].coefficient.rational() + dot(mons[j].exponent, x);
      if (v > best_val) {
        best_val = v;
        best = j;
        unique = true;
      } else if (v == best_val) {
        unique = false;
      }
    }
    if (unique) seen[best] = 1;
  }
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (seen[i]) out.indices.push_back(i);
  return out;
}

LayeredPolynomial essential_part(const LayeredPolynomial& f) {
  auto ess = essential_monomials(f);
  std::vector<Monomial> terms;
  for (auto i : ess.indices) terms.push_back(f.monomial(i));
  return LayeredPolynomial(f.nvars(), std::move(terms), f.laurent());
}

// --- functional equality ----------------------------------------------------

namespace {

bool agree_on(const LayeredPolynomial& f, const LayeredPolynomial& g, const std::vector<Point>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const Point& a) { return eval(f, a) == eval(g, a); });
}

std::vector<Point> univariate_probe_points(const LayeredPolynomial& f, const LayeredPolynomial& g) {
  std::vector<Rational> breaks;
  for (const auto& r : univariate_corner_roots(f)) breaks.push_back(r.root);
  for (const auto& r : univariate_corner_roots(g)) breaks.push_back(r.root);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<Rational> xs;
  if (breaks.empty()) {
    xs = {Rational(0), Rational(1)};
  } else {
    xs.push_back(breaks.front() - 2);
    xs.push_back(breaks.front() - 1);
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      xs.push_back(breaks[k]);
      if (k + 1 < breaks.size()) {
        xs.push_back((2 * breaks[k] + breaks[k + 1]) / 3);
        xs.push_back((breaks[k] + 2 * breaks[k + 1]) / 3);
      }
    }
    xs.push_back(breaks.back() + 1);
    xs.push_back(breaks.back() + 2);
  }
  std::vector<Point> pts;
  for (auto& x : xs) pts.push_back({LayeredScalar::tangible(x, f.flavors())});
  return pts;
}

// Grid points with one coordinate moved so that two monomials tie in value.
std::vector<Point> tie_points(const std::vector<Monomial>& mons, const std::vector<Point>& grid) {
  std::vector<Point> out;
  for (const auto& p : grid) {
    for (std::size_t i = 0; i < mons.size(); ++i) {
      for (std::size_t j = i + 1; j < mons.size(); ++j) {
        const auto& ei = mons[i].exponent;
        const auto& ej = mons[j].exponent;
        for (std::size_t k = 0; k < p.size(); ++k) {
          if (ei[k] == ej[k]) continue;
          Rational rhs = mons[j].coefficient.rational() - mons[i].coefficient.rational();
          for (std::size_t l = 0; l < p.size(); ++l)
            if (l != k) rhs += Rational(static_cast<long>(ej[l] - ei[l])) * p[l].rational();
          Rational xk = rhs / Rational(static_cast<long>(ei[k] - ej[k]));
          Point q = p;
          try {
            q[k] = LayeredScalar(p[k].layer(), Value(xk, p[k].value().flavor()));
          } catch (const DomainError&) {
            continue;  // tie lies outside the value monoid
          }
          out.push_back(std::move(q));
        }
      }
    }
  }
  return out;
}

}  // namespace

Verdict functionally_equal(const LayeredPolynomial& f, const LayeredPolynomial& g, const GridSpec& grid) {
  require_compatible(f, g);
  if (f.nvars() == 1 && f.flavors().values == GFlavor::RationalMax)
    return {agree_on(f, g, univariate_probe_points(f, g)), true};

  if (grid.dimension() != f.nvars()) throw DomainError("grid dimension does not match polynomial arity");
  auto pts = grid.points();
  if (!agree_on(f, g, pts)) return {false, false};
  std::vector<Monomial> mons(f.monomials().begin(), f.monomials().end());
  mons.insert(mons.end(), g.monomials().begin(), g.monomials().end());
  return {agree_on(f, g, tie_points(mons, pts)), false};
}

}  // namespace laytrop
