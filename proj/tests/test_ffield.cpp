#include <doctest.h>

#include <algorithm>
#include <random>

#include "modlie/ffield.hpp"
#include "modlie/oracle.hpp"

using namespace modlie;
using ff::Field;
using ff::FieldElement;

namespace {

FieldElement brute_inverse(const FieldElement& a) {
  const Field& f = a.field();
  for (std::uint32_t c = 1; c < f.order(); ++c)
    if ((a * f.from_code(c)).is_one()) return f.from_code(c);
  return f.zero();
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field& f3 = Field::prime(3);
  CHECK(f3.from_int(2) + f3.from_int(2) == f3.from_int(1));
  const Field& f5 = Field::prime(5);
  CHECK(f5.from_int(2).inv() == f5.from_int(3));
  for (std::uint32_t c = 1; c < 5; ++c) CHECK(f5.from_int(c).inv() == brute_inverse(f5.from_int(c)));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK(f5.from_int(3).pow(4).is_one());
}

TEST_CASE("extension field arithmetic") {
  const Field& f27 = Field::parse("3^3:2,2,0,1");
  const FieldElement t = f27.generator();
  CHECK(t * t.pow(2) == t + f27.one());
  CHECK(f27.order() == 27);
  CHECK(f27.spec() == "3^3:2,2,0,1");
  for (std::uint32_t c = 1; c < 27; ++c) CHECK(f27.from_code(c).inv() == brute_inverse(f27.from_code(c)));
}

TEST_CASE("field errors") {
  const Field& f5 = Field::prime(5);
  const Field& f7 = Field::prime(7);
  CHECK_THROWS_AS(f5.zero().inv(), Error);
  CHECK_THROWS_AS(f5.one() + f7.one(), Error);
  CHECK_THROWS_AS(f5.one() * f7.one(), Error);
  CHECK_THROWS_AS(Field::prime(2), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::parse("3^2:2,0,1"), Error);
  CHECK_THROWS_AS(Field::parse("garbage"), Error);
}

TEST_CASE("fields are interned") {
  CHECK(&Field::prime(3) == &Field::parse("3^1:0,1"));
  CHECK(&Field::parse("3^3:2,2,0,1") == &Field::get(3, {2, 2, 0, 1}));
}

TEST_CASE("element text round trip") {
  for (const char* spec : {"3^3:2,2,0,1", "5^2:2,0,1", "7^1:0,1"}) {
    const Field& f = Field::parse(spec);
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      const FieldElement e = f.from_code(c);
      CHECK(f.parse_element(e.to_string()) == e);
    }
  }
  const Field& f27 = Field::parse("3^3:2,2,0,1");
  CHECK(f27.zero().to_string() == "0");
  CHECK(f27.parse_element("2t^2+t+1").coeffs() == std::vector<std::uint32_t>{1, 1, 2});
  CHECK(f27.parse_element("t^3") == f27.parse_element("t+1"));
  CHECK(f27.parse_element("3").is_zero());
  CHECK(f27.parse_element("-1") == f27.from_int(2));
  for (const char* bad : {"", "x", "2t+", "t^", "1 + t", "++1"}) CHECK_THROWS_AS(f27.parse_element(bad), Error);
}

TEST_CASE("lucas binomial examples") {
  CHECK(ff::lucas_binomial(4, 2, 3) == 0);
  CHECK(ff::lucas_binomial(8, 3, 3) == 2);
  CHECK(ff::lucas_binomial(5, -1, 3) == 0);
  CHECK(ff::lucas_binomial(3, 5, 3) == 0);
  for (int n = 0; n < 40; ++n) CHECK(ff::lucas_binomial(n, 0, 5) == 1);
}

TEST_CASE("lucas binomial agrees with the factorial oracle") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const std::int64_t top = 2 * std::int64_t{p} * p;
    for (std::int64_t n = 0; n <= top; ++n)
      for (std::int64_t k = 0; k <= n; ++k) REQUIRE(ff::lucas_binomial(n, k, p) == oracle::factorial_binomial(n, k, p));
  }
}

TEST_CASE("C(p^n - 1, m) = (-1)^m") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned n = 1; n <= 2; ++n) {
      const std::int64_t top = (n == 1 ? p : p * p) - 1;
      for (std::int64_t m = 0; m <= top; ++m) CHECK(ff::lucas_binomial(top, m, p) == ff::residue(m % 2 ? -1 : 1, p));
    }
}

TEST_CASE("negative upper index") {
  for (std::uint32_t p : {3u, 5u})
    for (std::int64_t k = 0; k < 12; ++k) {
      CHECK(ff::lucas_binomial(-1, k, p) == ff::residue(k % 2 ? -1 : 1, p));
      // Pascal's rule continues to hold below zero.
      for (std::int64_t n = -6; n < 0; ++n)
        CHECK(ff::lucas_binomial(n + 1, k + 1, p) == (ff::lucas_binomial(n, k, p) + ff::lucas_binomial(n, k + 1, p)) % p);
    }
}

TEST_CASE("falling binomial") {
  const Field& f5 = Field::prime(5);
  CHECK(ff::falling_binomial(f5.from_int(3), 0).is_one());
  CHECK(ff::falling_binomial(f5.from_int(2), 2) == f5.one());
  const Field& f27 = Field::parse("3^3:2,2,0,1");
  CHECK(ff::falling_binomial(f27.generator(), 1) == f27.generator());
  CHECK_THROWS_AS(ff::falling_binomial(f5.one(), 5), Error);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field& f = Field::prime(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (unsigned i = 0; i < p; ++i) CHECK(ff::falling_binomial(f.from_int(a), i) == f.from_int(ff::lucas_binomial(a, i, p)));
  }
}

TEST_CASE("find_irreducible") {
  CHECK(ff::find_irreducible(3, 1) == ff::Poly{0, 1});
  CHECK(ff::is_irreducible(3, {2, 2, 0, 1}));
  CHECK_FALSE(ff::is_irreducible(3, {0, 2, 0, 1}));
  const auto q = ff::find_irreducible(5, 2);
  REQUIRE(q.size() == 3);
  for (std::uint32_t x = 0; x < 5; ++x) CHECK((q[0] + q[1] * x + q[2] * x * x) % 5 != 0);
  for (auto [p, m] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 3u}, {7u, 2u}}) {
    const auto poly = ff::find_irreducible(p, m);
    CHECK(poly.size() == m + 1);
    CHECK(poly.back() == 1);
    CHECK_NOTHROW(Field::get(p, poly));
  }
}

TEST_CASE("Artin-Schreier solutions") {
  const Field& f27 = Field::parse("3^3:2,2,0,1");
  CHECK(ff::solve_artin_schreier(f27.zero()) == f27.zero());
  CHECK(ff::solve_artin_schreier(f27.one()) == f27.generator());
  CHECK_FALSE(ff::solve_artin_schreier(Field::prime(3).one()).has_value());

  for (const char* spec : {"3^3:2,2,0,1", "5^2:2,0,1", "3^2:1,0,1"}) {
    const Field& f = Field::parse(spec);
    const std::uint32_t p = f.characteristic();
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      const FieldElement target = f.from_code(c);
      std::vector<FieldElement> all;
      for (std::uint32_t x = 0; x < f.order(); ++x)
        if (f.from_code(x).pow(p) - f.from_code(x) == target) all.push_back(f.from_code(x));
      const auto pi = ff::solve_artin_schreier(target);
      if (all.empty()) {
        CHECK_FALSE(pi.has_value());
        continue;
      }
      REQUIRE(pi.has_value());
      CHECK(pi->pow(p) - *pi == target);
      CHECK(*pi == all.front());
      REQUIRE(all.size() == p);
      for (std::uint32_t a = 0; a < p; ++a)
        CHECK(std::find(all.begin(), all.end(), *pi + f.from_int(a)) != all.end());
    }
  }
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937_64 rng(12345);
  for (const char* spec : {"3^3:2,2,0,1", "5^2:2,0,1", "5^3:3,3,0,1", "7^1:0,1"}) {
    const Field& f = Field::parse(spec);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int t = 0; t < 400; ++t) {
      const auto a = f.from_code(pick(rng)), b = f.from_code(pick(rng)), c = f.from_code(pick(rng));
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}
