#include <doctest.h>

#include <algorithm>

#include "laytrop/errors.hpp"
#include "laytrop/kapranov.hpp"
#include "laytrop/parse.hpp"
#include "laytrop/tropicalization.hpp"
#include "support.hpp"

using namespace laytrop;
using laytrop::testing::Rng;

namespace {

PuiseuxSeries mono(long c, Rational e) { return PuiseuxSeries::monomial(Rational(c), e); }
std::vector<Rational> qs(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("Newton polygon") {
  auto f = parse_puiseux_polynomial("L^2 - (t^(-1) + 2)*L + 2*t^(-1)");
  auto np = newton_polygon(f);
  CHECK(np.segments == std::vector<HullSegment>{{0, 1}, {1, 1}});
  CHECK(newton_polygon(parse_puiseux_polynomial("3*t^(2)*L^4")).segments.empty());
  // L^m - t^(-m): points (0, -m), (m, 0), slope 1.
  auto g = parse_puiseux_polynomial("L^3 - t^(-3)");
  CHECK(newton_polygon(g).segments == std::vector<HullSegment>{{1, 3}});
  CHECK_THROWS_AS(newton_polygon(PuiseuxPolynomial()), DomainError);
}

TEST_CASE("root valuations carry the sign of Val") {
  std::vector<PuiseuxSeries> r1{mono(1, -1), mono(2, 0)};
  CHECK(root_valuations(PuiseuxPolynomial::from_roots(r1)) == qs({0, 1}));
  for (Rational a : {Rational(2), Rational(-1, 3)}) {
    std::vector<PuiseuxSeries> r2{mono(1, a), mono(1, a)};
    Rational neg = -a;
    CHECK(root_valuations(PuiseuxPolynomial::from_roots(r2)) == std::vector<Rational>{neg, neg});
  }
  // A zero root contributes nothing.
  std::vector<PuiseuxSeries> r3{mono(5, 1), PuiseuxSeries()};
  CHECK(root_valuations(PuiseuxPolynomial::from_roots(r3)) == qs({-1}));
}

TEST_CASE("Bourbaki extension") {
  CHECK(bourbaki_extension(mono(1, 0), 2, mono(3, -1), 1) == 1);
  CHECK(bourbaki_extension(mono(3, -1), 1, mono(1, 0), 2) == 1);
  CHECK_THROWS_AS(bourbaki_extension(mono(1, 0), 2, mono(1, 0), 2), DomainError);

  // The extension makes the two tropical monomials tie.
  auto alpha = mono(2, Rational(1, 2)), beta = mono(-1, -3);
  auto x = bourbaki_extension(alpha, 3, beta, 1);
  CHECK(val(alpha) + 3 * x == val(beta) + 1 * x);
}

TEST_CASE("verification on worked products") {
  std::vector<PuiseuxSeries> r1{mono(1, -1), mono(2, 0)};
  auto rep = kapranov_verify(PuiseuxPolynomial::from_roots(r1), r1);
  CHECK(rep.pass());
  CHECK(rep.corner_roots == std::vector<CornerRoot>{{0, 1}, {1, 1}});

  std::vector<PuiseuxSeries> r2{mono(1, 1), mono(2, 1)};
  auto rep2 = kapranov_verify(PuiseuxPolynomial::from_roots(r2), r2);
  CHECK(rep2.pass());
  CHECK(rep2.corner_roots == std::vector<CornerRoot>{{-1, 2}});

  std::vector<PuiseuxSeries> r3{mono(7, Rational(2, 3))};
  auto rep3 = kapranov_verify(PuiseuxPolynomial::from_roots(r3), r3);
  CHECK(rep3.pass());
  CHECK(rep3.corner_roots == std::vector<CornerRoot>{{Rational(-2, 3), 1}});

  // Roots that cancel at leading order: (L - t)(L + t) = L^2 - t^2.
  std::vector<PuiseuxSeries> r4{mono(1, 1), mono(-1, 1)};
  CHECK(kapranov_verify(PuiseuxPolynomial::from_roots(r4), r4).pass());

  // A partial root list still checks the forward direction.
  std::vector<PuiseuxSeries> part{mono(2, 0)};
  CHECK(kapranov_verify(PuiseuxPolynomial::from_roots(r1), part).pass());
}

TEST_CASE("oracle violations") {
  std::vector<PuiseuxSeries> r{mono(1, -1), mono(2, 0)};
  auto f = PuiseuxPolynomial::from_roots(r);
  std::vector<PuiseuxSeries> wrong{mono(3, 0)};
  CHECK_THROWS_AS(kapranov_verify(f, wrong), OracleViolation);
  std::vector<PuiseuxSeries> too_many{mono(1, -1), mono(2, 0), mono(2, 0)};
  CHECK_THROWS_AS(kapranov_verify(f, too_many), OracleViolation);
}

TEST_CASE("random products satisfy the correspondence") {
  Rng rng(61);
  TropicalizationContext ctx;
  for (int i = 0; i < 300; ++i) {
    auto d = static_cast<std::size_t>(testing::uniform_int(rng, 1, 6));
    auto roots = random_monomial_roots(rng, d);
    auto f = PuiseuxPolynomial::from_roots(roots);
    std::vector<Rational> vals;
    for (const auto& r : roots) vals.push_back(val(r));
    std::sort(vals.begin(), vals.end());
    REQUIRE(root_valuations(f) == vals);
    auto cr = univariate_corner_roots(trop_poly(ctx, f));
    REQUIRE(expand_multiset(cr) == vals);
    for (const auto& v : vals)
      REQUIRE(is_corner_root(trop_poly(ctx, f), Point{LayeredScalar::tangible(v)}));
    auto rep = kapranov_verify(f, roots);
    REQUIRE(rep.pass());

    // Each hull segment's endpoints reproduce its corner root.
    auto np = newton_polygon(f);
    std::size_t i0 = 0;
    while (f.coefficient(i0).is_zero()) ++i0;
    for (const auto& seg : np.segments) {
      std::size_t i1 = i0 + seg.length;
      REQUIRE(bourbaki_extension(f.coefficient(i0), static_cast<std::int64_t>(i0), f.coefficient(i1),
                                 static_cast<std::int64_t>(i1)) == seg.slope);
      i0 = i1;
    }
  }
}

TEST_CASE("batch runner is deterministic") {
  auto a = kapranov_batch(4, 50, 7), b = kapranov_batch(4, 50, 7);
  CHECK(a.pass);
  CHECK(a.trials == 50);
  CHECK(b.pass);
  CHECK(a.failures.empty());
}
