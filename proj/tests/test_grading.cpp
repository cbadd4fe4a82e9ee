#include <doctest.h>

#include "modlie/grading.hpp"

using namespace modlie;
using namespace modlie::grading;
using dp::AlgebraElement;
using dp::Heights;
using lie::Family;

namespace {

const ff::Field& f27() { return ff::Field::parse("3^3:2,2,0,1"); }

struct Setup {
  lie::AlgebraPtr alg;
  SwitchConfig cfg;
  GradingCase kind;
};

Setup big_field(unsigned n, unsigned s) {
  const auto& f = f27();
  return {lie::make_algebra(Family::AlbertZassenhaus, f, Heights(3, s + 1, n)), {f.one(), f.generator(), s},
          GradingCase::BigField};
}

Setup prime_field(std::uint32_t p, unsigned n, unsigned s, std::int64_t pi) {
  const auto& f = ff::Field::prime(p);
  return {lie::make_algebra(Family::GradedHamiltonian, f, Heights(p, s + 1, n)), {f.one(), f.from_int(pi), s},
          GradingCase::PrimeField};
}

GradedBasis preswitch(const Setup& st) {
  const auto& h = st.alg->heights();
  const auto spec = st.kind == GradingCase::BigField ? GradingSpec::preswitch_az(h)
                                                     : GradingSpec::preswitch_gh(h, st.cfg.s, *st.cfg.pi.prime_value());
  return preswitch_basis(*st.alg, spec);
}

AlgebraElement mono(const Setup& st, std::uint32_t i, std::uint32_t j) { return st.alg->element({i, j}); }

}  // namespace

TEST_CASE("labels and monomials") {
  for (std::uint32_t i = 0; i < 27; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) CHECK(monomial_of(label_of({i, j}, 3, 1), 3, 1) == dp::Monomial{i, j});
  CHECK(label_of({1, 0}, 3, 1) == Label{-1, 0, 0});
  CHECK(Label{-1, 0, 2}.to_string() == "(-1,0,2)");
}

TEST_CASE("pre-switch degrees") {
  const Heights h(3, 2, 1);
  const auto az = GradingSpec::preswitch_az(h);
  CHECK(az.modulus == 18);
  CHECK(preswitch_degree({1, 0}, az) == 1);
  CHECK(preswitch_degree({0, h.y_top()}, az) == 1);
  const auto gh = GradingSpec::preswitch_gh(Heights(5, 2, 1), 1, 2);
  CHECK(preswitch_degree({0, 1}, gh) == 5 - 1);
  CHECK(GradingSpec::big_field(Heights(3, 2, 2), 1).modulus == 72);
  CHECK(GradingSpec::prime_field(Heights(5, 2, 1), 1, 2).modulus == 100);
  CHECK_THROWS_AS(GradingSpec::big_field(Heights(3, 1, 2), 1), Error);
}

TEST_CASE("check_graded") {
  const auto& f = ff::Field::prime(3);
  GradedBasis one;
  one.modulus = 4;
  one.labels = {{0, 0, 0}};
  one.vectors = {AlgebraElement::monomial(f, Heights(3, 1, 1), {1, 0})};
  one.degrees = {3};
  one.scalars = {f.one()};
  const auto abelian = [](const AlgebraElement& u, const AlgebraElement&) { return AlgebraElement(u.field(), u.heights()); };
  CHECK(check_graded(abelian, one).empty());

  const auto alg = lie::make_algebra(Family::AlbertZassenhaus, f, Heights(3, 2, 1));
  auto basis = preswitch_basis(*alg, GradingSpec::preswitch_az(alg->heights()));
  CHECK(check_graded(*alg, basis).empty());
  basis.degrees[7] = (basis.degrees[7] + 1) % basis.modulus;
  CHECK_FALSE(check_graded(*alg, basis).empty());

  basis.vectors[1] = basis.vectors[0];
  CHECK_THROWS_AS(check_graded(*alg, basis), Error);
}

TEST_CASE("eigen decomposition") {
  const auto& f3 = ff::Field::prime(3);
  const auto gh = lie::make_algebra(Family::GradedHamiltonian, f3, Heights(3, 2, 1));
  const auto nil = eigen_decompose(lie::build_derivation(gh, 1), f3.one());
  REQUIRE(nil.labels.size() == 1);
  CHECK(nil.labels[0] == 0);
  CHECK(nil.total_dim() == gh->dim());
  const auto az = lie::make_algebra(Family::AlbertZassenhaus, f3, Heights(3, 2, 1));
  const auto d = lie::build_derivation(az, 1);
  const auto eig = eigen_decompose(d, f3.one());
  REQUIRE(eig.labels.size() == 3);
  for (const auto& sp : eig.spaces) CHECK(sp.size() == 9);
  CHECK(eig.total_dim() == 27);
  for (std::size_t b = 0; b < eig.labels.size(); ++b)
    for (const auto& v : eig.spaces[b])
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) {
          const int j = static_cast<int>(az->basis()[c].j) - 1;
          CHECK(eig.labels[b] == ff::residue(-j, 3));
        }
  CHECK_THROWS_AS(eigen_decompose(d, f3.zero()), Error);
}

TEST_CASE("eigen decomposition hypothesis") {
  const auto& f3 = ff::Field::prime(3);
  la::Matrix m(f3, 4, 4);
  for (int i = 0; i < 3; ++i) m(i, i + 1) = f3.one();
  CHECK_THROWS_WITH_AS(eigen_decompose(m, f3.one()), doctest::Contains("D^{p^2}"), Error);
}

TEST_CASE("Laguerre operators") {
  const auto st = prime_field(3, 1, 1, 1);
  const auto& f = st.alg->field();
  const auto d = lie::build_derivation(st.alg, 1);
  for (std::size_t i = 0; i < st.alg->dim(); ++i) {
    const auto v = st.alg->basis_element(i);
    CHECK(laguerre_apply(f.zero(), d, v) ==
          st.alg->from_coords(truncated_exp_apply(d.matrix(), st.alg->to_coords(v))));
  }
  const auto killed = mono(st, 0, 1);  // y^(1) lies in the kernel of D here
  REQUIRE(d.apply(killed).is_zero());
  CHECK(laguerre_apply(f.zero(), d, killed) == killed);

  const la::Matrix zero(f27(), 2, 2);
  const la::Vec v{f27().one(), f27().generator()};
  for (std::uint32_t c = 0; c < 27; ++c) {
    const auto alpha = f27().from_code(c);
    const auto out = laguerre_apply(alpha, zero, v);
    const auto k0 = ff::falling_binomial(alpha + f27().from_int(2), 2);
    CHECK(out[0] == k0 * v[0]);
    CHECK(out[1] == k0 * v[1]);
  }
}

TEST_CASE("switching along the zero derivation is the identity") {
  const auto st = big_field(1, 1);
  const auto pre = preswitch(st);
  const lie::DerivationOperator zero(st.alg, 1, lie::Realization::ClosedForm,
                                     la::Matrix(st.alg->field(), st.alg->dim(), st.alg->dim()));
  const auto out = switch_grading(*st.alg, pre, zero, st.cfg);
  CHECK(out.vectors == pre.vectors);
  CHECK(out.degrees == pre.degrees);
}

TEST_CASE("switching hypotheses are checked") {
  const auto st = big_field(1, 1);
  auto pre = preswitch(st);
  const auto d = lie::build_derivation(st.alg, 1);
  auto bad_mod = pre;
  bad_mod.modulus = 19;
  CHECK_THROWS_WITH_AS(switch_grading(*st.alg, bad_mod, d, st.cfg), doctest::Contains("m | pd"), Error);
  SwitchConfig wrong = st.cfg;
  wrong.pi = f27().one();
  CHECK_THROWS_WITH_AS(switch_grading(*st.alg, pre, d, wrong), doctest::Contains("pi^p - pi"), Error);
  auto shifted = pre;
  shifted.degrees[0] = (shifted.degrees[0] + 2) % shifted.modulus;
  CHECK_THROWS_AS(switch_grading(*st.alg, shifted, d, st.cfg), Error);
}

TEST_CASE("switched bases are graded and match the closed forms") {
  std::vector<Setup> setups{big_field(1, 1), big_field(2, 1), prime_field(3, 2, 1, 1), prime_field(3, 2, 1, 2),
                            prime_field(5, 1, 1, 2)};
  for (const auto& st : setups) {
    const auto d = lie::build_derivation(st.alg, st.cfg.s);
    const auto switched = switch_grading(*st.alg, preswitch(st), d, st.cfg);
    CHECK(check_graded(*st.alg, switched).empty());
    const auto closed = build_closed_basis(st.kind, *st.alg, st.cfg);
    CHECK(check_graded(*st.alg, closed).empty());
    CHECK(closed.size() == st.alg->dim());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      const auto idx = switched.find(closed.labels[i]);
      REQUIRE(idx.has_value());
      CHECK(switched.vectors[*idx].scaled(closed.scalars[i]) == closed.vectors[i]);
      CHECK(switched.degrees[*idx] == closed.degrees[i]);
    }
  }
}

TEST_CASE("E route and single-label Laguerre route agree on nilpotent D") {
  const auto st = prime_field(3, 2, 1, 1);
  const auto d = lie::build_derivation(st.alg, 1);
  for (std::size_t i = 0; i < st.alg->dim(); ++i) {
    const auto v = st.alg->to_coords(st.alg->basis_element(i));
    CHECK(truncated_exp_apply(d.matrix(), v) == laguerre_apply(st.alg->field().zero(), d.matrix(), v));
  }
}

TEST_CASE("closed basis examples") {
  const auto st = big_field(2, 1);
  const auto& f = f27();
  const auto basis = build_closed_basis(st.kind, *st.alg, st.cfg);
  const auto x = basis.find({-1, 0, 0});
  REQUIRE(x.has_value());
  CHECK(basis.vectors[*x] == dp::generalized_power(st.alg->heights(), st.cfg.sigma, st.cfg.pi, 1) * mono(st, 1, 0));
  for (int a = 0; a < 3; ++a) {
    const auto idx = basis.find({0, 0, a});
    REQUIRE(idx.has_value());
    ff::FieldElement fact = f.one();
    for (int i = 2; i <= a; ++i) fact *= f.from_int(i);
    CHECK(basis.scalars[*idx] == fact * st.cfg.sigma.pow(a));
  }

  const auto pf = prime_field(5, 1, 1, 2);
  const auto pb = build_closed_basis(pf.kind, *pf.alg, pf.cfg);
  const auto px = pb.find({-1, 0, 2});
  REQUIRE(px.has_value());
  CHECK(pb.degrees[*px] == 1);
  CHECK(pb.vectors[*px] == dp::generalized_power(pf.alg->heights(), pf.alg->field().one(), pf.cfg.pi, 1) * mono(pf, 1, 0));
  CHECK_FALSE(pb.find({-1, -1, 0}).has_value());
  CHECK_FALSE(pb.find({4, 3, 4}).has_value());

  const auto zero_pi = prime_field(5, 1, 1, 0);
  CHECK_THROWS_AS(build_closed_basis(zero_pi.kind, *zero_pi.alg, zero_pi.cfg), Error);
  CHECK_NOTHROW(build_closed_basis(zero_pi.kind, *zero_pi.alg, zero_pi.cfg, true));
  SwitchConfig bad = st.cfg;
  bad.pi = f.one();
  CHECK_THROWS_AS(build_closed_basis(st.kind, *st.alg, bad), Error);
}

TEST_CASE("c_{j,a} denominators never vanish for pi outside F_p") {
  const auto& f = f27();
  for (std::uint32_t c = 0; c < 27; ++c) {
    const auto pi = f.from_code(c);
    if (pi.prime_value()) continue;
    for (int j = -1; j <= 7; ++j) CHECK_FALSE(ff::falling_binomial(-f.from_int(j) * pi + f.from_int(2), 2).is_zero());
  }
}

TEST_CASE("product tables") {
  std::vector<Setup> setups{big_field(1, 1), big_field(2, 1), prime_field(5, 1, 1, 1), prime_field(3, 2, 1, 2)};
  for (const auto& st : setups) {
    const auto basis = build_closed_basis(st.kind, *st.alg, st.cfg);
    CHECK(verify_product_tables(st.kind, *st.alg, st.cfg, basis).empty());
    for (const auto& l : basis.labels) CHECK(predicted_product(st.kind, *st.alg, st.cfg, basis, l, l).is_zero());
  }

  const auto st = big_field(2, 1);
  const auto& f = f27();
  const auto basis = build_closed_basis(st.kind, *st.alg, st.cfg);
  const auto& Y = basis.vectors[*basis.find({7, -1, 0})];
  for (int a = 0; a < 3; ++a) {
    const auto v = basis.vectors[*basis.find({0, -1, a})];
    const auto target = basis.find({7, 1, (a + 2) % 3});
    const auto coeff = st.cfg.sigma * (f.from_int(2) * st.cfg.pi + f.from_int(a));
    const auto want = target ? basis.vectors[*target].scaled(coeff) : st.alg->zero();
    CHECK(st.alg->bracket(v, Y) == want);
  }

  const auto pf = prime_field(5, 1, 1, 3);
  const auto pb = build_closed_basis(pf.kind, *pf.alg, pf.cfg);
  const auto& g = pf.alg->field();
  for (int j = -1; j <= 3; ++j)
    for (int l = -1; l <= 3; ++l)
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          const auto u = pb.find({j, -1, a}), v = pb.find({l, -1, b});
          if (!u || !v) continue;
          const auto coeff = g.from_int(b * ff::lucas_binomial(j + l + 1, j, 5)) - g.from_int(a * ff::lucas_binomial(j + l + 1, l, 5));
          const auto target = pb.find({j + l, 3, (a + b + 4) % 5});
          const auto want = target ? pb.vectors[*target].scaled(coeff) : pf.alg->zero();
          CHECK(pf.alg->bracket(pb.vectors[*u], pb.vectors[*v]) == want);
        }
}

TEST_CASE("degree multiset") {
  for (const auto& st : {big_field(2, 1), prime_field(5, 1, 1, 2)}) {
    const auto basis = build_closed_basis(st.kind, *st.alg, st.cfg);
    const auto hist = degree_histogram(basis);
    const std::int64_t q = st.alg->heights().q();
    std::size_t total = 0, ones_at_slots = 0;
    for (std::int64_t r = 0; r < basis.modulus; ++r) {
      const auto it = hist.find(r);
      const std::size_t dim = it == hist.end() ? 0 : it->second;
      total += dim;
      if (r % (q - 1) == 1 % (q - 1)) {
        if (st.kind == GradingCase::BigField) CHECK(dim == 2);
        else if (dim == 1) ++ones_at_slots;
        else CHECK(dim == 2);
      } else {
        CHECK(dim == 1);
      }
    }
    CHECK(total == st.alg->dim());
    if (st.kind == GradingCase::PrimeField) CHECK(ones_at_slots == 2);
  }
}

TEST_CASE("graded basis serialization round trip") {
  const auto st = big_field(2, 1);
  const auto basis = build_closed_basis(st.kind, *st.alg, st.cfg);
  const auto text = basis.serialize();
  const auto back = GradedBasis::parse(text, st.alg->field(), st.alg->heights(), basis.modulus);
  CHECK(back.labels == basis.labels);
  CHECK(back.vectors == basis.vectors);
  CHECK(back.degrees == basis.degrees);
  CHECK(back.scalars == basis.scalars);
  CHECK(back.serialize() == text);
  CHECK(std::is_sorted(basis.labels.begin(), basis.labels.end()));
  CHECK_THROWS_AS(GradedBasis::parse("(1,2) | 3 | 0 | 1\n", st.alg->field(), st.alg->heights(), 72), Error);
}
