#include <random>

#include "doctest.h"
#include "postlie/matrix.hpp"

using namespace postlie;

namespace {

Matrix ints(Field f, std::size_t r, std::size_t c, std::initializer_list<long> values) {
  std::vector<Scalar> e;
  for (long v : values)
    e.emplace_back(f, v);
  return Matrix(f, r, c, std::move(e));
}

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::vector<Scalar> e;
  for (std::size_t k = 0; k < r * c; ++k)
    e.emplace_back(f, coeff(rng));
  return Matrix(f, r, c, std::move(e));
}

} // namespace

TEST_CASE("rref normalizes pivots") {
  auto q = Field::rationals();
  auto r = rref(ints(q, 2, 3, {2, 4, 6, 1, 3, 5}));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == ints(q, 2, 3, {1, 0, -1, 0, 1, 2}));
}

TEST_CASE("nullspace has one vector per free column") {
  auto q = Field::rationals();
  auto a = ints(q, 1, 3, {1, 2, 3});
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == Vector{Scalar(q, -2), Scalar(q, 1), Scalar(q, 0)});
  CHECK(ns[1] == Vector{Scalar(q, -3), Scalar(q, 0), Scalar(q, 1)});
}

TEST_CASE("nullspace over F3 agrees with a brute-force sweep") {
  auto f = Field::prime(3);
  auto a = ints(f, 1, 3, {1, 1, 0});
  auto ns = nullspace(a);
  CHECK(ns.size() == 2);
  std::size_t kernel = 0;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y)
      for (long z = 0; z < 3; ++z) {
        Vector v{Scalar(f, x), Scalar(f, y), Scalar(f, z)};
        if (is_zero(a.apply(v))) {
          ++kernel;
          CHECK(coordinates(ns, v, f, 3).has_value());
        }
      }
  CHECK(kernel == 9);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(0);
  for (auto f : {Field::rationals(), Field::prime(5), Field::prime(2)})
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      auto a = random_matrix(f, r, c, rng);
      auto ns = nullspace(a);
      CHECK(rank(a) + ns.size() == c);
      for (const auto& v : ns)
        CHECK(is_zero(a.apply(v)));
      CHECK(rank(a) == rank(a.transpose()));
    }
}

TEST_CASE("solving linear systems") {
  auto q = Field::rationals();
  auto a = ints(q, 2, 3, {1, 1, 0, 0, 1, 1});
  Vector b{Scalar(q, 2), Scalar(q, 3)};
  auto s = rref_solve(a, b);
  REQUIRE(s.solvable());
  CHECK(a.apply(*s.particular) == b);
  CHECK(s.nullspace.size() == 1);

  auto bad = rref_solve(ints(q, 2, 1, {1, 1}), Vector{Scalar(q, 1), Scalar(q, 2)});
  CHECK_FALSE(bad.solvable());
}

TEST_CASE("determinant and inverse") {
  auto q = Field::rationals();
  auto a = ints(q, 3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1});
  CHECK(determinant(a) == Scalar(q, 5));
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(q, 3));
  CHECK_FALSE(inverse(ints(q, 2, 2, {1, 2, 2, 4})).has_value());

  std::mt19937_64 rng(1);
  auto f = Field::prime(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(f, 3, 3, rng);
    auto mi = inverse(m);
    CHECK(mi.has_value() == !determinant(m).is_zero());
    if (mi)
      CHECK(*mi * m == Matrix::identity(f, 3));
  }
}

TEST_CASE("nilpotent matrices") {
  auto q = Field::rationals();
  CHECK(is_nilpotent_matrix(ints(q, 3, 3, {0, 1, 5, 0, 0, 2, 0, 0, 0})));
  CHECK(is_nilpotent_matrix(ints(q, 2, 2, {1, 1, -1, -1})));
  CHECK_FALSE(is_nilpotent_matrix(Matrix::identity(q, 2)));
  CHECK_FALSE(is_nilpotent_matrix(ints(q, 2, 2, {0, 1, 1, 0})));
}

TEST_CASE("flatten round trip and commutator") {
  auto q = Field::rationals();
  auto a = ints(q, 2, 2, {1, 2, 3, 4});
  auto b = ints(q, 2, 2, {0, 1, 0, 0});
  CHECK(unflatten(q, 2, 2, flatten(a)) == a);
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(commutator(a, a).is_zero());
}
