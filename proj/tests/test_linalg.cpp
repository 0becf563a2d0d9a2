#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "homly/error.hpp"
#include "homly/linalg.hpp"

using namespace homly;
using homly::test::cyclic3;
using homly::test::vec;

namespace {

LinearMap random_map(std::size_t n, std::mt19937_64& rng) {
  LinearMap m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rational::from_fraction(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2) + 1);
  return m;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational::from_fraction(static_cast<long>(rng() % 11) - 5, 3);
  return v;
}

}  // namespace

TEST_CASE("map_apply") {
  const Vector x = vec({4, -1, 7});
  CHECK(map_apply(LinearMap::identity(3), x) == x);
  CHECK(map_apply(LinearMap::zero(3), x).is_zero());
  CHECK(map_apply(cyclic3(), Vector::basis(3, 0)) == Vector::basis(3, 1));
  CHECK(map_apply(cyclic3(), Vector::basis(3, 2)) == Vector::basis(3, 0));
  CHECK_THROWS_AS(map_apply(LinearMap::identity(2), x), DimensionMismatch);
}

TEST_CASE("map_compose and map_power") {
  std::mt19937_64 rng(7);
  const LinearMap m = random_map(3, rng);
  CHECK(map_compose(m, LinearMap::identity(3)) == m);
  CHECK(map_compose(m, LinearMap::zero(3)) == LinearMap::zero(3));
  const LinearMap p = cyclic3();
  CHECK(map_compose(p, p) != LinearMap::identity(3));
  CHECK(map_compose(p, map_compose(p, p)) == LinearMap::identity(3));
  CHECK(map_power(m, 0) == LinearMap::identity(3));
  CHECK(map_power(LinearMap::identity(3), 5) == LinearMap::identity(3));
  CHECK(map_power(p, 3) == LinearMap::identity(3));
  CHECK_THROWS_AS(map_compose(m, LinearMap::identity(2)), DimensionMismatch);
}

TEST_CASE("maps_commute") {
  std::mt19937_64 rng(8);
  const LinearMap m = random_map(3, rng);
  CHECK(maps_commute(m, m));
  CHECK(maps_commute(m, LinearMap::identity(3)));
  // diag(1,2) * swap = [[0,1],[2,0]] but swap * diag(1,2) = [[0,2],[1,0]]
  const LinearMap diag = LinearMap::from_rows({{1, 0}, {0, 2}});
  const LinearMap swap = LinearMap::from_rows({{0, 1}, {1, 0}});
  CHECK(map_compose(diag, swap) == LinearMap::from_rows({{0, 1}, {2, 0}}));
  CHECK_FALSE(maps_commute(diag, swap));
  CHECK_THROWS_AS(maps_commute(diag, m), DimensionMismatch);
}

TEST_CASE("from_rows rejects ragged input") {
  CHECK_THROWS_AS(LinearMap::from_rows({{1, 0}, {0}}), DimensionMismatch);
}

TEST_CASE("power law and linearity on random maps") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const LinearMap m = random_map(3, rng);
    const unsigned a = rng() % 5, b = rng() % 5;
    CHECK(map_power(m, a + b) == map_compose(map_power(m, a), map_power(m, b)));

    const Vector x = random_vector(3, rng), y = random_vector(3, rng);
    const Rational s = Rational::from_fraction(static_cast<long>(rng() % 9) - 4, 5);
    const Rational t = Rational::from_fraction(static_cast<long>(rng() % 9) - 4, 7);
    CHECK(map_apply(m, s * x + t * y) == s * map_apply(m, x) + t * map_apply(m, y));
    CHECK(map_apply(map_compose(m, m), x) == map_apply(m, map_apply(m, x)));
  }
}
