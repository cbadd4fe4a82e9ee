#include <doctest.h>

#include "modlie/linalg.hpp"

using namespace modlie;
using ff::Field;
using la::Matrix;
using la::Vec;

namespace {

Vec vec(const Field& f, std::initializer_list<std::int64_t> xs) {
  Vec v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST_CASE("rank, membership and kernel") {
  const Field& f3 = Field::prime(3);
  CHECK(la::rank(Matrix::identity(f3, 2)) == 2);
  const Field& f5 = Field::prime(5);
  const std::vector<Vec> span{vec(f5, {1, 2})};
  CHECK(la::in_span(f5, span, vec(f5, {2, 4})));
  CHECK_FALSE(la::in_span(f5, span, vec(f5, {2, 3})));
  CHECK(la::kernel(Matrix(f3, 2, 2)).size() == 2);
}

TEST_CASE("dimension mismatches are errors") {
  const Field& f5 = Field::prime(5);
  const std::vector<Vec> span{vec(f5, {1, 2})};
  CHECK_THROWS_AS(la::in_span(f5, span, vec(f5, {1, 2, 3})), Error);
  CHECK_THROWS_AS(Matrix(f5, 2, 3) * Matrix(f5, 2, 3), Error);
  CHECK_THROWS_AS(Matrix(f5, 2, 3).apply(vec(f5, {1, 2})), Error);
  CHECK_THROWS_AS(la::eigenspace(Matrix(f5, 2, 3), f5.one()), Error);
}

TEST_CASE("solve and inverse") {
  const Field& f7 = Field::prime(7);
  Matrix m(f7, 3, 3);
  const int entries[3][3] = {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = f7.from_int(entries[r][c]);
  auto inv = la::inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix::identity(f7, 3));
  const Vec b = vec(f7, {1, 2, 3});
  auto x = la::solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  Matrix singular(f7, 2, 2);
  singular(0, 0) = f7.one();
  singular(0, 1) = f7.from_int(2);
  singular(1, 0) = f7.from_int(3);
  singular(1, 1) = f7.from_int(6);
  CHECK_FALSE(la::inverse(singular).has_value());
  CHECK_FALSE(la::solve(singular, vec(f7, {1, 0})).has_value());
  CHECK(la::kernel(singular).size() == 1);
}

TEST_CASE("eigenspaces of a diagonal matrix") {
  const Field& f5 = Field::prime(5);
  Matrix d(f5, 4, 4);
  const int diag[4] = {1, 2, 2, 0};
  for (int i = 0; i < 4; ++i) d(i, i) = f5.from_int(diag[i]);
  CHECK(la::eigenspace(d, f5.from_int(2)).size() == 2);
  CHECK(la::eigenspace(d, f5.from_int(1)).size() == 1);
  CHECK(la::eigenspace(d, f5.from_int(3)).empty());
  for (const auto& v : la::eigenspace(d, f5.from_int(2))) {
    auto dv = d.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(dv[i] == f5.from_int(2) * v[i]);
  }
}

TEST_CASE("matrix powers and independent subsets") {
  const Field& f3 = Field::prime(3);
  Matrix n(f3, 3, 3);
  n(0, 1) = f3.one();
  n(1, 2) = f3.one();
  CHECK_FALSE(n.pow(2).is_zero());
  CHECK(n.pow(3).is_zero());
  CHECK(n.pow(0) == Matrix::identity(f3, 3));
  const std::vector<Vec> vs{vec(f3, {1, 0, 0}), vec(f3, {2, 0, 0}), vec(f3, {0, 1, 0}), vec(f3, {1, 1, 0})};
  const auto sub = la::independent_subset(f3, vs);
  REQUIRE(sub.size() == 2);
  CHECK(sub[0] == vs[0]);
  CHECK(sub[1] == vs[2]);
}
