#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fatpoints/catalog.hpp"
#include "fatpoints/geometry.hpp"
#include "oracles.hpp"

using namespace fatpoints;

namespace {

ProjCoord pc(long u, long v) { return ProjCoord(Rational(u), Rational(v)); }

Rational det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

TEST_CASE("projective coordinates are canonical", "[geometry]") {
  CHECK(pc(2, 6) == ProjCoord::affine(3));
  CHECK(pc(0, -5) == ProjCoord::infinity());
  CHECK(ProjCoord(Rational(-3), Rational(1, 2)) == ProjCoord::affine(Rational(-1, 6)));
  CHECK(pc(1, 0).u() == 1);
  CHECK(ProjCoord::infinity().is_infinity());
  CHECK_FALSE(ProjCoord::affine(0).is_infinity());
  CHECK_THROWS_AS(pc(0, 0), std::invalid_argument);
  CHECK(ProjCoord::infinity() < ProjCoord::affine(-5));
  CHECK(ProjCoord::affine(-5) < ProjCoord::affine(2));
}

TEST_CASE("normalize_point is idempotent", "[geometry]") {
  const auto p = normalize_point({Rational(4), Rational(2)}, {Rational(0), Rational(7)});
  CHECK(p.x == ProjCoord::affine(Rational(1, 2)));
  CHECK(p.y == ProjCoord::infinity());
  CHECK(normalize_point({p.x.u(), p.x.v()}, {p.y.u(), p.y.v()}) == p);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Rational a = oracle::random_rational(rng, 5, 3), b = oracle::random_rational(rng, 5, 3);
    if (a == 0 && b == 0) b = 1;
    const Rational c = oracle::random_rational(rng, 4, 2);
    const Rational lambda = c == 0 ? Rational(7) : c;
    const auto q = normalize_point({a, b}, {Rational(1), a});
    const auto r = normalize_point({lambda * a, lambda * b}, {lambda, lambda * a});
    CHECK(q == r);
    CHECK(normalize_point({q.x.u(), q.x.v()}, {q.y.u(), q.y.v()}) == q);
  }
}

TEST_CASE("make_config sorts, drops zeros and rejects bad input", "[geometry]") {
  const auto z = make_config({ProductPoint::affine(2, 0), ProductPoint::affine(0, 1),
                              ProductPoint::affine(1, 1)},
                             {3, 0, 1});
  REQUIRE(z.size() == 2);
  CHECK(z.points()[0] == ProductPoint::affine(1, 1));
  CHECK(z.mults() == std::vector<int>{1, 3});
  CHECK(z.max_mult() == 3);
  CHECK(z.scaled(2).mults() == std::vector<int>{2, 6});
  CHECK(z.with_uniform(4).mults() == std::vector<int>{4, 4});
  CHECK(z.support().mults() == std::vector<int>{1, 1});

  CHECK_THROWS_AS(make_config({ProductPoint::affine(0, 0)}, {-1}), std::invalid_argument);
  CHECK_THROWS_WITH(
      make_config({ProductPoint::affine(0, 0), ProductPoint::affine(1, 0),
                   ProductPoint::affine(0, 0)}),
      Catch::Matchers::ContainsSubstring("duplicate point at indices 0"));
  CHECK_THROWS_AS(make_config({ProductPoint::affine(0, 0)}, {1, 2}), std::invalid_argument);
  CHECK(make_config({}).empty());
  CHECK(make_config({ProductPoint::affine(0, 0)}, {0}).empty());
}

TEST_CASE("grid recognition", "[geometry]") {
  const auto g = is_grid(catalog::grid(2, 3));
  CHECK(g.is_grid);
  CHECK(g.vertical.size() == 2);
  CHECK(g.horizontal.size() == 3);
  CHECK_FALSE(g.missing);

  const auto sharp = is_grid(catalog::five_jumps_sharp());
  CHECK_FALSE(sharp.is_grid);
  CHECK(sharp.vertical.size() == 3);
  CHECK(sharp.horizontal.size() == 2);
  REQUIRE(sharp.missing);

  const auto minus = is_grid(catalog::grid_minus_point(3));
  CHECK_FALSE(minus.is_grid);
  REQUIRE(minus.missing);
  CHECK(*minus.missing == ProductPoint::affine(0, 0));

  CHECK(is_grid(catalog::single_point()).is_grid);
  CHECK(is_grid(make_config({ProductPoint::affine(0, 0), ProductPoint::affine(0, 5)})).is_grid);
  CHECK_FALSE(
      is_grid(make_config({ProductPoint::affine(0, 0), ProductPoint::affine(1, 1)})).is_grid);
}

TEST_CASE("single fiber detection", "[geometry]") {
  const auto col = make_config({ProductPoint::affine(2, 0), ProductPoint::affine(2, 9)});
  const auto f = on_single_fiber(col);
  REQUIRE(f);
  CHECK(f->direction == FiberDirection::vertical);
  CHECK(f->base == ProjCoord::affine(2));

  const auto row = make_config({ProductPoint::affine(0, 4), ProductPoint::affine(3, 4)});
  REQUIRE(on_single_fiber(row));
  CHECK(on_single_fiber(row)->direction == FiberDirection::horizontal);
  CHECK(on_single_fiber(row)->contains(ProductPoint::affine(-8, 4)));

  const auto one = on_single_fiber(catalog::single_point());
  REQUIRE(one);
  CHECK(one->direction == FiberDirection::vertical);

  CHECK_FALSE(on_single_fiber(catalog::grid(2, 2)));
  CHECK_THROWS_AS(on_single_fiber(FatPointConfig{}), std::invalid_argument);
}

TEST_CASE("chart transforms move a point to the origin", "[geometry]") {
  const ProjCoord origin = pc(1, 0);
  for (const auto& c : {ProjCoord::affine(0), ProjCoord::affine(Rational(-2, 3)),
                        ProjCoord::infinity()}) {
    const Mat2 a = chart_matrix(c);
    CHECK(apply(a, c) == origin);
    CHECK(det(a) != 0);
  }

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto z = oracle::random_config(rng, 1, 6, 1);
    const auto& p = z.points().front();
    const auto [a, b] = chart_transform(p);
    CHECK(apply(a, p.x) == origin);
    CHECK(apply(b, p.y) == origin);
    CHECK(det(a) != 0);
    CHECK(det(b) != 0);
  }
}
