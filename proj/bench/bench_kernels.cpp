// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "modlie/grading.hpp"
#include "modlie/kernels.hpp"

using namespace modlie;

namespace {

par::Exec exec_of(const benchmark::State& state) { return state.range(0) ? par::Exec::Parallel : par::Exec::Serial; }

lie::AlgebraPtr az_algebra() {
  static const auto alg = lie::make_algebra(lie::Family::AlbertZassenhaus, ff::Field::prime(3), dp::Heights(3, 2, 2));
  return alg;
}

struct BigField {
  lie::AlgebraPtr alg;
  grading::SwitchConfig cfg;
  grading::GradedBasis basis;
};

const BigField& big_field() {
  static const BigField b = [] {
    const auto& f = ff::Field::parse("3^3:2,2,0,1");
    auto alg = lie::make_algebra(lie::Family::AlbertZassenhaus, f, dp::Heights(3, 2, 2));
    grading::SwitchConfig cfg{f.one(), f.generator(), 1};
    auto basis = grading::build_closed_basis(grading::GradingCase::BigField, *alg, cfg);
    return BigField{alg, cfg, std::move(basis)};
  }();
  return b;
}

void BM_CheckAxioms(benchmark::State& state) {
  const auto alg = az_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::check_axioms(*alg, exec_of(state)));
}

void BM_CheckLeibniz(benchmark::State& state) {
  const auto d = lie::build_derivation(az_algebra(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::check_leibniz(d, exec_of(state)));
}

void BM_CheckGraded(benchmark::State& state) {
  const auto& b = big_field();
  for (auto _ : state) benchmark::DoNotOptimize(grading::check_graded(*b.alg, b.basis, exec_of(state)));
}

void BM_ProductTables(benchmark::State& state) {
  const auto& b = big_field();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        grading::verify_product_tables(grading::GradingCase::BigField, *b.alg, b.cfg, b.basis, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_CheckAxioms)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckLeibniz)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckGraded)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductTables)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
