#include <doctest.h>

#include <random>

#include "modlie/dpalgebra.hpp"
#include "modlie/oracle.hpp"

using namespace modlie;
using dp::AlgebraElement;
using dp::Heights;
using dp::Monomial;
using ff::Field;

namespace {

AlgebraElement mono(const Field& f, const Heights& h, std::uint32_t i, std::uint32_t j, std::int64_t c = 1) {
  return AlgebraElement::monomial(h, {i, j}, f.from_int(c));
}

std::vector<Monomial> all_monomials(const Heights& h) {
  std::vector<Monomial> out;
  for (std::uint32_t i = 0; i < h.x_bound(); ++i)
    for (std::uint32_t j = 0; j < h.y_bound(); ++j) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("heights") {
  const Heights h(3, 2, 1);
  CHECK(h.q() == 3);
  CHECK(h.x_top() == 8);
  CHECK(h.y_top() == 2);
  CHECK_THROWS_AS(Heights(3, 0, 1), Error);
  CHECK_THROWS_AS(Heights(4, 1, 1), Error);
}

TEST_CASE("monomial products") {
  const Field& f = Field::prime(3);
  const Heights h(3, 1, 1);
  CHECK(dp::mono_mul(f, h, {1, 0}, {2, 0}).is_zero());
  CHECK(dp::mono_mul(f, h, {2, 1}, {0, 0}) == mono(f, h, 2, 1));
  CHECK(dp::mono_mul(f, h, {1, 1}, {1, 1}) == mono(f, h, 2, 2, 1));
  // The factorial oracle gives C(i+k, i) C(j+l, j) for every in-range pair.
  const Heights h2(5, 1, 1);
  const Field& f5 = Field::prime(5);
  for (auto a : all_monomials(h2))
    for (auto b : all_monomials(h2)) {
      const auto prod = dp::mono_mul(f5, h2, a, b);
      if (a.i + b.i >= 5 || a.j + b.j >= 5) continue;
      const auto c = oracle::factorial_binomial(a.i + b.i, a.i, 5) * oracle::factorial_binomial(a.j + b.j, a.j, 5) % 5;
      CHECK(prod.coefficient({a.i + b.i, a.j + b.j}) == f5.from_int(c));
    }
}

TEST_CASE("element arithmetic") {
  const Field& f = Field::prime(3);
  const Heights h(3, 1, 1);
  const auto one = mono(f, h, 0, 0);
  const auto x = mono(f, h, 1, 0);
  const auto u = one + x;
  CHECK(u + AlgebraElement(f, h) == u);
  CHECK(u.scaled(f.zero()).is_zero());
  const auto sq = u * u;
  CHECK(sq == one + x.scaled(f.from_int(2)) + mono(f, h, 2, 0, 2));
  CHECK_THROWS_AS(u + mono(f, Heights(3, 2, 1), 1, 0), Error);
  CHECK_THROWS_AS(u * mono(f, Heights(3, 2, 1), 1, 0), Error);
  CHECK_THROWS_AS(mono(f, h, 3, 0), Error);
}

TEST_CASE("text round trip") {
  const Field& f27 = Field::parse("3^3:2,2,0,1");
  const Heights h(3, 2, 1);
  AlgebraElement e(f27, h);
  e.add_term({1, 0}, f27.generator());
  e.add_term({4, 2}, f27.from_int(2));
  e.add_term({0, 0}, f27.generator().pow(5));
  CHECK(AlgebraElement::parse(f27, h, e.to_string()) == e);
  CHECK(AlgebraElement::parse(f27, h, "0").is_zero());
  CHECK(mono(Field::prime(3), h, 1, 2, 2).to_string() == "2*x^(1)y^(2)");
  CHECK_THROWS_AS(AlgebraElement::parse(f27, h, "t*x^(9)y^(0)"), Error);
  CHECK_THROWS_AS(AlgebraElement::parse(f27, h, "x"), Error);
}

TEST_CASE("associativity and commutativity") {
  const Field& f = Field::prime(3);
  for (const Heights h : {Heights(3, 1, 1), Heights(3, 2, 1)}) {
    const auto ms = all_monomials(h);
    for (auto a : ms)
      for (auto b : ms) {
        const auto ea = mono(f, h, a.i, a.j), eb = mono(f, h, b.i, b.j);
        REQUIRE(ea * eb == eb * ea);
        for (auto c : ms) {
          const auto ec = mono(f, h, c.i, c.j);
          REQUIRE((ea * eb) * ec == ea * (eb * ec));
        }
      }
  }
}

TEST_CASE("overflow coefficients vanish") {
  const Heights h(3, 2, 2);
  for (auto a : all_monomials(h))
    for (auto b : all_monomials(h)) {
      const bool overflow = a.i + b.i >= h.x_bound() || a.j + b.j >= h.y_bound();
      if (!overflow) continue;
      const auto c = ff::lucas_binomial(a.i + b.i, a.i, 3) * ff::lucas_binomial(a.j + b.j, a.j, 3) % 3;
      REQUIRE(c == 0);
    }
}

TEST_CASE("generalized powers") {
  const Field& f3 = Field::prime(3);
  const Heights h(3, 2, 1);
  const auto one = mono(f3, h, 0, 0);
  CHECK(dp::generalized_power(h, f3.one(), f3.zero(), 1) == one);
  const Field& f27 = Field::parse("3^3:2,2,0,1");
  const auto sigma = f27.generator().pow(4);
  CHECK(dp::generalized_power(h, sigma, f27.one(), 1) ==
        AlgebraElement::monomial(h, {0, 0}, f27.one()) + AlgebraElement::monomial(h, {3, 0}, sigma));
  CHECK(dp::generalized_power(h, f3.one(), f3.from_int(2), 0) == one + mono(f3, h, 1, 0, 2) + mono(f3, h, 2, 0, 2));
  CHECK_THROWS_AS(dp::generalized_power(h, f3.one(), f3.one(), 2), Error);
}

TEST_CASE("generalized power agrees with repeated products") {
  for (std::uint32_t p : {3u, 5u}) {
    const Field& f = Field::prime(p);
    const Heights h(p, 2, 1);
    const auto sigma = f.from_int(2);
    const auto base = AlgebraElement::monomial(h, {0, 0}, f.one()) + AlgebraElement::monomial(h, {p, 0}, sigma);
    auto acc = AlgebraElement::monomial(h, {0, 0}, f.one());
    for (std::uint32_t a = 0; a < p; ++a) {
      CHECK(dp::generalized_power(h, sigma, f.from_int(a), 1) == acc);
      acc = acc * base;
    }
  }
}

TEST_CASE("one-parameter group law") {
  const Field& f = Field::parse("3^3:2,2,0,1");
  const Heights h(3, 2, 1);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto sigma = f.from_code(pick(rng)), a = f.from_code(pick(rng)), b = f.from_code(pick(rng));
    for (unsigned s : {0u, 1u})
      CHECK(dp::generalized_power(h, sigma, a + b, s) == dp::generalized_power(h, sigma, a, s) * dp::generalized_power(h, sigma, b, s));
  }
}
