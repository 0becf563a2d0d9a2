#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "homly/algebra.hpp"
#include "homly/error.hpp"
#include "homly/suites.hpp"

using namespace homly;
using homly::test::so3;
using homly::test::vec;

namespace {

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = Rational::from_fraction(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
  return v;
}

Algebra single_entry_ternary() {
  Algebra a = Algebra::empty("single", 3);
  TernaryTable d(3);
  d(0, 1, 2, 0) = 1;
  a.ternary = d;
  return a;
}

}  // namespace

TEST_CASE("eval_binary") {
  Algebra zero = Algebra::empty("zero", 3);
  zero.binary = BinaryTable(3);
  CHECK(eval_binary(zero, vec({1, 2, 3}), vec({3, 2, 1})).is_zero());
  CHECK(eval_binary(Algebra::empty("absent", 3), vec({1, 0, 0}), vec({0, 1, 0})).is_zero());

  const Algebra s = so3();
  CHECK(eval_binary(s, vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
  CHECK(eval_binary(s, vec({2, 1, 0}), vec({0, 1, 0})) == vec({0, 0, 2}));
  CHECK_THROWS_AS(eval_binary(s, vec({1, 0}), vec({0, 1, 0})), DimensionMismatch);
}

TEST_CASE("eval_ternary") {
  Algebra zero = Algebra::empty("zero", 3);
  zero.ternary = TernaryTable(3);
  CHECK(eval_ternary(zero, vec({1, 1, 1}), vec({1, 1, 1}), vec({1, 1, 1})).is_zero());

  const Algebra a = single_entry_ternary();
  CHECK(eval_ternary(a, vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})) == vec({1, 0, 0}));
  CHECK(eval_ternary(a, vec({1, 0, 0}), vec({0, 3, 0}), vec({0, 0, 1})) == vec({3, 0, 0}));
  CHECK(eval_ternary(a, vec({0, 1, 0}), vec({1, 0, 0}), vec({0, 0, 1})).is_zero());
  CHECK_THROWS_AS(eval_ternary(a, vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 1})), DimensionMismatch);
}

TEST_CASE("is_multiplicative") {
  CHECK(is_multiplicative(so3()).passed);

  Algebra rotated = so3();
  rotated.alpha = test::cyclic3();
  CHECK(is_multiplicative(rotated).passed);

  Algebra scaled = so3();
  scaled.alpha = LinearMap::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const CheckReport r = is_multiplicative(scaled);
  CHECK_FALSE(r.passed);
  const auto* v = r.find("mult-binary");
  REQUIRE(v != nullptr);
  REQUIRE_FALSE(v->counterexamples.empty());
  // alpha(e1*e2) = e3, alpha(e1)*alpha(e2) = 2 e3
  CHECK(v->counterexamples.front().tuple == std::vector<std::size_t>{0, 1});
  CHECK(v->counterexamples.front().residual == vec({0, 0, -1}));
  CHECK(r.find("mult-ternary") == nullptr);
}

TEST_CASE("random_algebra") {
  const Algebra empty = random_algebra(0, 1, {});
  CHECK(empty.dim == 0);
  for (const auto& id : suite_ids()) {
    if (id == "ly" || id == "hom-ly" || id == "hom-ly-printed-b6" || id == "hom-nambu" || id == "hom-triple" ||
        id == "hom-lts")
      continue;  // need a ternary table
    CHECK(run_suite(empty, id).passed);
  }
  RandomAlgebraOptions full{true, true, AlphaKind::random};
  CHECK(run_suite(random_algebra(0, 1, full), "all").passed);

  CHECK(algebras_equal(random_algebra(3, 17, full), random_algebra(3, 17, full)));
  CHECK(emit_algebra(random_algebra(3, 17, full)) == emit_algebra(random_algebra(3, 17, full)));
  CHECK_FALSE(algebras_equal(random_algebra(3, 17, full), random_algebra(3, 18, full)));

  const Algebra plain = random_algebra(3, 5, {});
  CHECK(plain.binary.has_value());
  CHECK_FALSE(plain.ternary.has_value());
  CHECK(plain.alpha.is_identity());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Algebra a = random_algebra(4, seed, {true, false, AlphaKind::identity});
    bool skew = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          skew = skew && (*a.binary)(i, j, k) == -(*a.binary)(j, i, k);
          const auto& c = (*a.binary)(i, j, k);
          skew = skew && c >= Rational(-3) && c <= Rational(3);
        }
    CHECK(skew);
    CHECK(check_hom_jacobi(a).find("skew")->passed);
    Algebra with_t = random_algebra(3, seed, {true, true, AlphaKind::identity});
    CHECK(check_hom_ly(with_t).find("B3")->passed);
  }
}

TEST_CASE("algebras_equal") {
  const Algebra s = so3();
  CHECK(algebras_equal(s, s));

  Algebra absent = Algebra::empty("a", 2);
  Algebra zero = Algebra::empty("b", 2);
  zero.binary = BinaryTable(2);
  CHECK(algebras_equal(absent, zero));

  Algebra flipped = s;
  (*flipped.binary)(0, 1, 2) = -1;
  CHECK_FALSE(algebras_equal(s, flipped));

  Algebra twisted = s;
  twisted.alpha = test::cyclic3();
  CHECK_FALSE(algebras_equal(s, twisted));
  CHECK_FALSE(algebras_equal(s, Algebra::empty("x", 2)));
}

TEST_CASE("multilinearity of evaluation") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Algebra a = random_algebra(3, seed, {false, true, AlphaKind::random});
    const Vector x = random_vector(3, rng), xp = random_vector(3, rng);
    const Vector y = random_vector(3, rng), z = random_vector(3, rng);
    const Rational s = Rational::from_fraction(static_cast<long>(rng() % 9) - 4, 3);
    const Vector mix = s * x + xp;

    CHECK(eval_binary(a, mix, y) == s * eval_binary(a, x, y) + eval_binary(a, xp, y));
    CHECK(eval_binary(a, y, mix) == s * eval_binary(a, y, x) + eval_binary(a, y, xp));
    CHECK(eval_ternary(a, mix, y, z) == s * eval_ternary(a, x, y, z) + eval_ternary(a, xp, y, z));
    CHECK(eval_ternary(a, y, mix, z) == s * eval_ternary(a, y, x, z) + eval_ternary(a, y, xp, z));
    CHECK(eval_ternary(a, y, z, mix) == s * eval_ternary(a, y, z, x) + eval_ternary(a, y, z, xp));

    Algebra untwisted = a;
    untwisted.alpha = LinearMap::identity(3);
    CHECK(is_multiplicative(untwisted).passed);
  }
}
