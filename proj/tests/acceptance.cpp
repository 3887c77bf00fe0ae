// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "laytrop/congruence.hpp"
#include "laytrop/kapranov.hpp"
#include "laytrop/layered.hpp"
#include "laytrop/parse.hpp"
#include "laytrop/polyfun.hpp"
#include "laytrop/puiseux.hpp"
#include "laytrop/tropicalization.hpp"
#include "support.hpp"

using namespace laytrop;
using laytrop::testing::Rng;
using laytrop::testing::uniform_int;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

const Flavors kNat{};
const Flavors kSuper{LFlavor::Supertropical, GFlavor::RationalMax};
const Flavors kTrivial{LFlavor::Trivial, GFlavor::RationalMax};
const Flavors kNatN{LFlavor::NaturalInf, GFlavor::NaturalMax};

LayeredPolynomial P(const std::string& text, Flavors f = kNat, std::optional<std::size_t> n = std::nullopt) {
  return parse_polynomial(text, {f, false, n});
}

// --- 1 ------------------------------------------------------------------------

Outcome layering_example() {
  Outcome out;
  auto grid = GridSpec::uniform(2, -5, 5, Rational(1, 2));
  auto points = grid.points();
  if (points.size() != 21 * 21) out.fail("grid is not 21x21");
  auto nat = [](std::uint64_t n) { return SortingLayer::natural(n); };

  std::vector<LayeredPolynomial> family;
  for (int k = 1; k <= 5; ++k) family.push_back(P("x1^" + std::to_string(k) + " + x2 + 0"));

  for (int k = 1; k <= 3; ++k) {
    const auto& f = family[static_cast<std::size_t>(k - 1)];
    for (const auto& p : points) {
      const Rational &a1 = p[0].rational(), &a2 = p[1].rational();
      std::uint64_t want = 1;
      if (a1 == 0 && a2 == 0) want = 3;
      else if ((a1 == 0 && a2 < 0) || (a2 == 0 && a1 < 0) || (k * a1 == a2 && a2 > 0)) want = 2;
      if (layering_map(f, p) != nat(want))
        out.fail("k=" + std::to_string(k) + " at (" + to_string(a1) + "," + to_string(a2) + ")");
    }
  }
  for (const auto& p : points) {
    const Rational &a1 = p[0].rational(), &a2 = p[1].rational();
    std::uint64_t want = 1;
    if (a1 == 0 && a2 == 0) want = 3;
    else if ((a1 == 0 && a2 < 0) || (a2 == 0 && a1 < 0)) want = 2;
    if (layering_map_set(family, p) != nat(want))
      out.fail("family at (" + to_string(a1) + "," + to_string(a2) + ")");
  }
  std::vector<LayeredPolynomial> pair{P("x1 + 2"), P("x1 + 3")};
  if (layering_map_set(pair, {LayeredScalar::of(nat(2), 4)}) != nat(2)) out.fail("{x1+2, x1+3} at (2|4)");
  return out;
}

// --- 2 ------------------------------------------------------------------------

Outcome product_example() {
  Outcome out;
  auto expand = [](Flavors f) {
    auto lhs = P("x1 + x2 + x3", f) * P("x1*x2 + x1*x3 + x2*x3", f);
    auto rhs = P("x1 + x2", f, 3) * P("x1 + x3", f) * P("x2 + x3", f, 3);
    return std::pair{lhs, rhs};
  };
  auto [ln, rn] = expand(kNat);
  auto cl = ln.coefficient({1, 1, 1}), cr = rn.coefficient({1, 1, 1});
  if (!cl || cl->layer() != SortingLayer::natural(3)) out.fail("xyz layer on the left is not 3");
  if (!cr || cr->layer() != SortingLayer::natural(2)) out.fail("xyz layer on the right is not 2");
  if (functionally_equal(ln, rn, GridSpec::uniform(3, -2, 2, 1, kNat)).equal)
    out.fail("equal as functions over natural layers");
  auto [lt, rt] = expand(kTrivial);
  if (!functionally_equal(lt, rt, GridSpec::uniform(3, -2, 2, 1, kTrivial)).equal)
    out.fail("different as functions over trivial layers");
  return out;
}

// --- 3 ------------------------------------------------------------------------

using Law = std::function<bool(const LayeredScalar&, const LayeredScalar&, const LayeredScalar&)>;

Outcome law_suite() {
  Outcome out;
  const Flavors flavors[] = {kNat, kSuper, kTrivial, kNatN};
  std::vector<std::pair<std::string, Law>> laws{
      {"add associative", [](auto& x, auto& y, auto& z) { return add(add(x, y), z) == add(x, add(y, z)); }},
      {"mul associative", [](auto& x, auto& y, auto& z) { return mul(mul(x, y), z) == mul(x, mul(y, z)); }},
      {"add commutative", [](auto& x, auto& y, auto&) { return add(x, y) == add(y, x); }},
      {"mul commutative", [](auto& x, auto& y, auto&) { return mul(x, y) == mul(y, x); }},
      {"distributive", [](auto& x, auto& y, auto& z) { return mul(x, add(y, z)) == add(mul(x, y), mul(x, z)); }},
      {"nu-bipotent",
       [](auto& x, auto& y, auto&) {
         auto s = add(x, y);
         return s.value() == x.value() || s.value() == y.value();
       }},
      {"sort multiplicative", [](auto& x, auto& y, auto&) { return sort(mul(x, y)) == sort(x) * sort(y); }},
      {"sort of sums",
       [](auto& x, auto& y, auto&) {
         auto s = sort(add(x, y));
         return s == sort(x) || s == sort(y) || s == sort(x) + sort(y);
       }},
      {"axiom B",
       [](auto& x, auto& y, auto&) {
         if (!nu_equivalent(x, y)) return true;
         auto s = add(x, y);
         return sort(s) == sort(x) + sort(y) && nu_equivalent(s, x);
       }},
      {"infinity absorbing",
       [](auto& x, auto& y, auto&) {
         if (!sort(x).is_infinite() || y.value() > x.value()) return true;
         return add(x, y) == x && sort(mul(x, y)).is_infinite();
       }},
      {"e identities",
       [](auto& x, auto& y, auto&) {
         auto g = x.value().flavor();
         auto ek = e(sort(x), g), el = e(sort(y), g);
         return mul(ek, el) == e(sort(x) * sort(y), g) && add(ek, el) == e(sort(x) + sort(y), g);
       }},
      {"Frobenius",
       [](auto& x, auto& y, auto&) {
         for (std::uint64_t m = 1; m <= 6; ++m) {
           auto lhs = pow(add(x, y), m), rhs = add(pow(x, m), pow(y, m));
           if (!nu_equivalent(x, y) && lhs != rhs) return false;
           if (!surpasses(lhs, rhs)) return false;
         }
         return true;
       }},
      {"surpassing respects mul",
       [](auto& x, auto& y, auto& c) { return !surpasses(x, y) || surpasses(mul(x, c), mul(y, c)); }},
      {"surpassing respects add",
       [](auto& x, auto& y, auto& c) { return !surpasses(x, y) || surpasses(add(x, c), add(y, c)); }},
  };

  Rng rng(2024);
  const int per_flavor = 10000;
  std::ostringstream failures;
  for (const auto& [name, law] : laws) {
    std::size_t bad = 0;
    std::string example;
    for (const auto& f : flavors) {
      for (int i = 0; i < per_flavor; ++i) {
        auto x = testing::random_scalar(rng, f), y = testing::random_scalar(rng, f), z = testing::random_scalar(rng, f);
        // Half the triples are forced into surpassing position so the implication is exercised.
        if (i % 2 == 0 && name.rfind("surpassing", 0) == 0) {
          x = add(y, testing::random_scalar(rng, f));
          if (!surpasses(x, y)) x = y;
        }
        if (!law(x, y, z)) {
          if (bad++ == 0)
            example = to_string(f.layers) + ": x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
        }
      }
    }
    if (bad) {
      if (!failures.str().empty()) failures << "; ";
      failures << name << " (" << bad << " of " << 4 * per_flavor << ", e.g. " << example << ")";
    }
  }
  if (!failures.str().empty()) out.fail(failures.str());
  return out;
}

// --- 4 ------------------------------------------------------------------------

// Brute force in scaled integers: a grid point x = k / scale evaluates monomial i to
// scale * c_i + i * k. Corners are points where at least two monomials reach the maximum;
// the tie multiplicity is the spread of the tied exponents.
std::vector<CornerRoot> brute_force_roots(const LayeredPolynomial& f, std::int64_t scale, std::int64_t range) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ms;  // (exponent, scaled coefficient)
  for (const auto& m : f.monomials()) {
    Rational c = m.coefficient.rational() * scale;
    ms.emplace_back(m.exponent[0], c.get_num().get_si());
  }
  std::vector<CornerRoot> out;
  for (std::int64_t k = -range * scale; k <= range * scale; ++k) {
    std::int64_t best = INT64_MIN, lo = 0, hi = 0, count = 0;
    for (auto [i, c] : ms) {
      std::int64_t v = c + i * k;
      if (v > best) {
        best = v;
        lo = hi = i;
        count = 1;
      } else if (v == best) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
        ++count;
      }
    }
    if (count >= 2) out.push_back({Rational(k, scale), static_cast<std::uint64_t>(hi - lo)});
  }
  for (auto& r : out) r.root.canonicalize();
  return out;
}

Outcome univariate_oracle() {
  Outcome out;
  Rng rng(4);
  const std::int64_t scale = 2 * 840;  // coefficient denominators divide 2, exponent gaps divide lcm(1..8)
  const std::int64_t range = 13;       // |breakpoint| <= max |c_i - c_j| = 12
  for (int trial = 0; trial < 500; ++trial) {
    auto degree = uniform_int(rng, 1, 8);
    std::vector<Monomial> ms;
    for (std::int64_t i = 0; i <= degree; ++i) {
      if (i != degree && uniform_int(rng, 0, 2) == 0) continue;
      Rational c(uniform_int(rng, -12, 12), 2);
      c.canonicalize();
      ms.push_back({{i}, LayeredScalar::tangible(c)});
    }
    LayeredPolynomial f(1, ms);
    auto fast = univariate_corner_roots(f);
    auto slow = brute_force_roots(f, scale, range);
    if (fast != slow) {
      out.fail("mismatch on " + f.to_string());
      break;
    }
    for (const auto& r : fast)
      if (!is_corner_root(f, {LayeredScalar::tangible(r.root)})) out.fail("is_corner_root disagrees on " + f.to_string());
  }
  return out;
}

// --- 5 ------------------------------------------------------------------------

Outcome kapranov_suite() {
  Outcome out;
  Rng rng(5);
  TropicalizationContext ctx;
  for (int trial = 0; trial < 200; ++trial) {
    auto d = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    auto roots = random_monomial_roots(rng, d);
    auto f = PuiseuxPolynomial::from_roots(roots);
    std::vector<Rational> vals;
    for (const auto& r : roots) vals.push_back(val(r));
    std::sort(vals.begin(), vals.end());
    auto tf = trop_poly(ctx, f);
    auto corners = expand_multiset(univariate_corner_roots(tf));
    if (root_valuations(f) != vals || corners != vals) out.fail("multisets differ on " + f.to_string());
    for (const auto& v : vals)
      if (!is_corner_root(tf, {LayeredScalar::tangible(v)})) out.fail("forward direction fails on " + f.to_string());
    auto rep = kapranov_verify(f, roots);
    if (!rep.pass()) out.fail("report fails on " + f.to_string());

    // Sort-0 residual: at each corner root some root with that valuation zeroes the exploded sum.
    auto xf = explode_poly(f);
    for (const auto& v : std::set<Rational>(vals.begin(), vals.end())) {
      bool ghost = false;
      for (const auto& r : roots)
        if (val(r) == v && eval_exploded(xf, explode_scalar(r)).is_corner_ghost()) ghost = true;
      if (!ghost) out.fail("no corner ghost at " + to_string(v) + " for " + f.to_string());
    }
  }
  return out;
}

// --- 6 ------------------------------------------------------------------------

Outcome valuation_laws() {
  Outcome out;
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    auto p = testing::random_series(rng), q = testing::random_series(rng);
    if (val(p * q) != val(p) + val(q)) out.fail("val(pq) on " + p.to_string() + " ; " + q.to_string());
    if (explode_scalar(p * q) != exploded_mul(explode_scalar(p), explode_scalar(q))) out.fail("explode(pq)");
    auto s = p + q;
    if (s.is_zero()) continue;
    Rational top = std::max(val(p), val(q));
    if (val(s) > top) out.fail("val(p+q) > max");
    bool drop = val(s) < top;
    if (drop != (val(p) == val(q) && leading(p) + leading(q) == 0))
      out.fail("strict drop criterion on " + p.to_string() + " ; " + q.to_string());
  }
  return out;
}

// --- 7 ------------------------------------------------------------------------

Outcome zariski_suite() {
  Outcome out;
  Rng rng(7);
  auto grid = GridSpec::uniform(2, -5, 5, 1);
  FinitePointSet search(grid.points());
  for (int trial = 0; trial < 50; ++trial) {
    CongruenceGenerators gens;
    auto count = uniform_int(rng, 1, 3);
    for (int g = 0; g < count; ++g) {
      switch (uniform_int(rng, 0, 2)) {
        case 0: {  // a coordinate pinned to a constant
          auto k = uniform_int(rng, 1, 2);
          gens.emplace_back(P("x" + std::to_string(k), kNat, 2), P(std::to_string(uniform_int(rng, -4, 4)), kNat, 2));
          break;
        }
        case 1: {  // a polynomial against itself without one monomial
          auto f = testing::random_polynomial(rng, 2, 3, 2, kNat, true);
          if (f.size() < 2) {
            gens.emplace_back(f, f);
            break;
          }
          auto ms = std::vector<Monomial>(f.monomials().begin(), f.monomials().end());
          ms.erase(ms.begin() + uniform_int(rng, 0, static_cast<std::int64_t>(ms.size()) - 1));
          gens.emplace_back(f, LayeredPolynomial(2, ms));
          break;
        }
        default:  // two random polynomials
          gens.emplace_back(testing::random_polynomial(rng, 2, 2, 2, kNat, true),
                            testing::random_polynomial(rng, 2, 2, 2, kNat, true));
      }
    }
    auto rep = zariski_roundtrip(gens, search, static_cast<std::uint64_t>(trial));
    if (!rep.roundtrip) out.fail("V(Omega_V) != V in trial " + std::to_string(trial));
    if (!rep.antitone_generators) out.fail("generator antitonicity in trial " + std::to_string(trial));
    if (!rep.antitone_points) out.fail("point antitonicity in trial " + std::to_string(trial));
    if (!rep.union_law) out.fail("union law in trial " + std::to_string(trial));
  }
  return out;
}

// --- 8 ------------------------------------------------------------------------

Outcome duality_suite() {
  Outcome out;
  Rng rng(8);
  SemiringView v;
  auto vv = dualize(dualize(v));
  auto d = dualize(v);
  const Flavors flavors[] = {kNat, kSuper, kTrivial, kNatN};
  for (int i = 0; i < 10000; ++i) {
    const auto& f = flavors[i % 4];
    auto x = testing::random_scalar(rng, f), y = testing::random_scalar(rng, f);
    if (vv.add(x, y) != v.add(x, y) || vv.mul(x, y) != v.mul(x, y)) out.fail("dual of dual differs");
    auto m = d.add(x, y);
    bool min_ok = x.value() < y.value()   ? m == x
                  : y.value() < x.value() ? m == y
                                          : m == LayeredScalar(sort(x) + sort(y), x.value());
    if (!min_ok) out.fail("dual addition is not min selection");
  }
  for (int i = 0; i < 10000; ++i) {
    auto a = testing::random_scalar(rng, kTrivial), b = testing::random_scalar(rng, kTrivial);
    auto s = add(a, b);
    if ((a.value() <= b.value()) != (s == b)) out.fail("a <= b iff a + b = b");
    if (s != a && s != b) out.fail("bipotence");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "layering maps of x1^k + x2 + 0 on a 21x21 grid", 1.0, layering_example},
      {2, "layered products (x+y+z)(xy+xz+yz) vs (x+y)(x+z)(y+z)", 1.0, product_example},
      {3, "semiring and layer laws, 10^4 triples per law and flavor", 10.0, law_suite},
      {4, "univariate corner roots vs brute force, 500 polynomials", 30.0, univariate_oracle},
      {5, "root valuations vs tropical corner roots, 200 products", 30.0, kapranov_suite},
      {6, "valuation laws, 10^4 series pairs", 5.0, valuation_laws},
      {7, "Zariski roundtrip, 50 generator sets on 11x11 grids", 20.0, zariski_suite},
      {8, "duality involution and bipotence bridge", 5.0, duality_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("took longer than the limit");
    std::printf("%s criterion %d: %s [%.3f s / %.0f s]%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, o.pass ? "" : " -- ", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
