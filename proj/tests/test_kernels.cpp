#include <doctest.h>

#include "modlie/grading.hpp"
#include "modlie/kernels.hpp"

using namespace modlie;
using dp::Heights;
using lie::Family;
using par::Exec;

TEST_CASE("anticommutativity and Jacobi hold exhaustively") {
  for (auto [p, n1, n2] : {std::tuple{3u, 1u, 1u}, {3u, 2u, 1u}, {3u, 2u, 2u}, {5u, 2u, 1u}})
    for (Family fam : {Family::GradedHamiltonian, Family::AlbertZassenhaus}) {
      const lie::AlgebraDescriptor alg(fam, ff::Field::prime(p), Heights(p, n1, n2));
      const auto report = kernels::check_axioms(alg);
      CHECK(report.ok());
      CHECK(report.triples == alg.dim() * alg.dim() * alg.dim());
    }
}

TEST_CASE("D is a derivation") {
  for (auto [p, s, n2] : {std::tuple{3u, 1u, 1u}, {3u, 1u, 2u}, {5u, 1u, 1u}, {3u, 0u, 1u}})
    for (Family fam : {Family::GradedHamiltonian, Family::AlbertZassenhaus}) {
      const auto alg = lie::make_algebra(fam, ff::Field::prime(p), Heights(p, s + 1, n2));
      CHECK(kernels::check_leibniz(lie::build_derivation(alg, s)).empty());
    }
  // Iterated realization where the closed form does not apply.
  const auto alg = lie::make_algebra(Family::AlbertZassenhaus, ff::Field::prime(3), Heights(3, 2, 1));
  CHECK(kernels::check_leibniz(lie::build_derivation(alg, 0, lie::Realization::IteratedAd)).empty());
}

TEST_CASE("a non-derivation is caught") {
  const auto alg = lie::make_algebra(Family::AlbertZassenhaus, ff::Field::prime(3), Heights(3, 1, 1));
  const lie::DerivationOperator identity(alg, 0, lie::Realization::ClosedForm, la::Matrix::identity(alg->field(), alg->dim()));
  CHECK_FALSE(kernels::check_leibniz(identity).empty());
}

TEST_CASE("serial and parallel kernels agree") {
  const auto& f = ff::Field::prime(3);
  const auto alg = lie::make_algebra(Family::AlbertZassenhaus, f, Heights(3, 2, 1));
  const lie::DerivationOperator identity(alg, 0, lie::Realization::ClosedForm, la::Matrix::identity(f, alg->dim()));
  const auto serial = kernels::check_leibniz(identity, Exec::Serial);
  const auto parallel = kernels::check_leibniz(identity, Exec::Parallel);
  CHECK(serial.size() > 10);
  CHECK(serial == parallel);

  auto basis = grading::preswitch_basis(*alg, grading::GradingSpec::preswitch_az(alg->heights()));
  basis.degrees[5] = (basis.degrees[5] + 1) % basis.modulus;
  const auto gs = grading::check_graded(*alg, basis, Exec::Serial);
  const auto gp = grading::check_graded(*alg, basis, Exec::Parallel);
  CHECK_FALSE(gs.empty());
  CHECK(gs == gp);

  const auto as = kernels::check_axioms(*alg, Exec::Serial);
  const auto ap = kernels::check_axioms(*alg, Exec::Parallel);
  CHECK(as.violations == ap.violations);
}
