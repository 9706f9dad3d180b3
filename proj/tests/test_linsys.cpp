#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fatpoints/catalog.hpp"
#include "fatpoints/exactmath.hpp"
#include "fatpoints/linsys.hpp"
#include "oracles.hpp"

using namespace fatpoints;

namespace {

BiForm form(Index rows, Index cols, std::initializer_list<Rational> values) {
  RationalMatrix m(rows, cols);
  auto it = values.begin();
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
  }
  return BiForm(m);
}

Fiber vertical(long x) { return {FiberDirection::vertical, ProjCoord::affine(x)}; }
Fiber horizontal(long y) { return {FiberDirection::horizontal, ProjCoord::affine(y)}; }

BiForm random_form(std::mt19937_64& rng, int max_degree) {
  const Index r = 1 + static_cast<Index>(rng() % (max_degree + 1));
  const Index c = 1 + static_cast<Index>(rng() % (max_degree + 1));
  RationalMatrix m(r, c);
  for (Index i = 0; i < m.size(); ++i) m(i) = oracle::random_rational(rng, 4, 2);
  m(rng() % m.size()) = 1;
  return BiForm(m);
}

BiDegree random_degree(std::mt19937_64& rng, int max_degree) {
  return {static_cast<int>(rng() % (max_degree + 1)), static_cast<int>(rng() % (max_degree + 1))};
}

}  // namespace

TEST_CASE("bi-degree and form basics", "[linsys]") {
  CHECK(BiDegree::make(2, 3).dimension() == 12);
  CHECK_THROWS_AS(BiDegree::make(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(BiForm(RationalMatrix(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(BiForm(RationalMatrix::Zero(2, 2)), std::invalid_argument);

  const auto f = form(2, 1, {Rational(0), Rational(-3)});
  CHECK(f.normalized() == form(2, 1, {Rational(0), Rational(1)}));
  const auto g = form(1, 2, {Rational(1), Rational(2)});
  const auto fg = f * g;
  CHECK(fg.degree() == BiDegree{1, 1});
  CHECK(fg == form(2, 2, {Rational(0), Rational(0), Rational(-3), Rational(-6)}));
}

TEST_CASE("binary substitution", "[linsys]") {
  Mat2 swap;
  swap << 0, 1, 1, 0;
  const RationalMatrix t = binary_substitution(swap, 2);
  // x0^2 -> x1^2, x0 x1 -> x0 x1, x1^2 -> x0^2
  CHECK(t == (RationalMatrix(3, 3) << 0, 0, 1, 0, 1, 0, 1, 0, 0).finished());
  const RationalMatrix id = binary_substitution(Mat2::Identity(), 3);
  CHECK(id == RationalMatrix::Identity(4, 4));
}

TEST_CASE("conditions matrix shape and simple counts", "[linsys]") {
  const auto z = make_config({ProductPoint::affine(0, 0), ProductPoint::affine(1, 2)}, {2, 3});
  const auto c = conditions_matrix(z, {1, 1});
  CHECK(condition_count(z) == 9);
  CHECK(c.matrix.rows() == 9);
  CHECK(c.matrix.cols() == 4);
  CHECK(c.row_labels.size() == 9);
  CHECK(c.col_labels.size() == 4);

  CHECK(h0(FatPointConfig{}, {1, 1}) == 4);
  CHECK(h0(catalog::single_point(), {1, 1}) == 3);
  CHECK(h0(catalog::single_point().scaled(2), {1, 1}) == 1);
  CHECK(rank(conditions_matrix(catalog::single_point().scaled(2), {1, 1}).matrix) == 3);
  CHECK(h0(catalog::single_point().scaled(3), {1, 1}) == 0);
  CHECK(h0(catalog::grid(2, 2), {1, 1}) == 0);
  CHECK(h0(catalog::grid(2, 2), {2, 0}) == 1);
  CHECK(h0(catalog::grid(2, 2), {0, 2}) == 1);
  CHECK(h0_modp(catalog::grid(2, 2), {2, 2}, 7) == 5);
}

TEST_CASE("h0 agrees with the derivative oracle", "[linsys][oracle]") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    const auto z = oracle::random_config(rng, 4, 3, 3);
    const auto d = random_degree(rng, 4);
    CHECK(h0(z, d) == oracle::h0(z, d));
  }
}

TEST_CASE("witness forms", "[linsys]") {
  const auto two = make_config({ProductPoint::affine(0, 0), ProductPoint::affine(1, 0)});
  const auto w = witness_form(two, {2, 0});
  REQUIRE(w);
  CHECK(w->normalized() == (fiber_form(vertical(0)) * fiber_form(vertical(1))).normalized());
  CHECK_FALSE(witness_form(two, {1, 0}));

  const auto p = catalog::single_point().scaled(2);
  const auto wp = witness_form(p, {1, 1});
  REQUIRE(wp);
  CHECK(mult_at(*wp, ProductPoint::affine(0, 0)) >= 2);
}

TEST_CASE("multiplicity of a form at a point", "[linsys]") {
  const auto f = fiber_form(vertical(0)) * fiber_form(horizontal(0));
  CHECK(mult_at(f, ProductPoint::affine(0, 0)) == 2);
  CHECK(mult_at(f, ProductPoint::affine(0, 1)) == 1);
  CHECK(mult_at(f, ProductPoint::affine(1, 1)) == 0);

  const auto at_infinity = fiber_form({FiberDirection::vertical, ProjCoord::infinity()});
  CHECK(mult_at(at_infinity, {ProjCoord::infinity(), ProjCoord::affine(3)}) == 1);
  CHECK(mult_at(at_infinity, ProductPoint::affine(3, 3)) == 0);

  const auto cube = fiber_form(horizontal(2)) * fiber_form(horizontal(2)) * fiber_form(horizontal(2));
  CHECK(mult_at(cube, ProductPoint::affine(-7, 2)) == 3);
}

TEST_CASE("division by fibers", "[linsys]") {
  const auto g = form(2, 2, {Rational(1), Rational(2), Rational(3), Rational(4)});
  const auto x1g = fiber_form(vertical(0)) * g;
  const auto q = divide_by_fiber(x1g, vertical(0));
  REQUIRE(q);
  CHECK(*q == g);

  const auto diagonal = form(2, 2, {Rational(0), Rational(-1), Rational(1), Rational(0)});
  CHECK_FALSE(divide_by_fiber(diagonal, vertical(0)));
  CHECK_FALSE(divide_by_fiber(diagonal, horizontal(0)));

  auto w = witness_form(catalog::grid(2, 2), {2, 0});
  REQUIRE(w);
  w = divide_by_fiber(*w, vertical(0));
  REQUIRE(w);
  w = divide_by_fiber(*w, vertical(1));
  REQUIRE(w);
  CHECK(w->degree() == BiDegree{0, 0});
}

TEST_CASE("randomized linear system invariants", "[linsys][property]") {
  std::mt19937_64 rng(77);
  int violations = 0;
  for (int t = 0; t < 500; ++t) {
    const auto z = oracle::random_config(rng, 4, 3, 3);
    const auto d = random_degree(rng, 4);
    const Index h = h0(z, d);

    if (h < d.dimension() - condition_count(z)) ++violations;
    if (h0(z, {d.d1 + 1, d.d2}) < h || h0(z, {d.d1, d.d2 + 1}) < h) ++violations;
    if (h0_modp(z, d, 101) < h) ++violations;

    const auto c = conditions_matrix(z, d);
    const auto basis = kernel_basis(c.matrix);
    if (static_cast<Index>(basis.size()) != h) ++violations;
    for (const auto& v : basis) {
      if (!oracle::all_zero(c.matrix * v)) ++violations;
    }

    if (const auto w = witness_form(z, d)) {
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (mult_at(*w, z.points()[k]) < z.mults()[k]) ++violations;
      }
    } else if (h != 0) {
      ++violations;
    }

    const auto f = random_form(rng, 3);
    const Fiber fib{rng() % 2 ? FiberDirection::vertical : FiberDirection::horizontal,
                    rng() % 6 ? ProjCoord::affine(oracle::random_rational(rng, 3, 2))
                              : ProjCoord::infinity()};
    const auto q = divide_by_fiber(f * fiber_form(fib), fib);
    if (!q || !(*q == f)) ++violations;
  }
  CHECK(violations == 0);
}
