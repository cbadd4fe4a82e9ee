#include "modlie/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modlie {

int par::max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {

// Adds coeff * target to a tiny accumulator of at most three terms.
struct Accumulator {
  std::int32_t target[3];
  std::uint32_t coeff[3];
  int used = 0;

  void add(std::int32_t t, std::uint32_t c, std::uint32_t p) {
    for (int i = 0; i < used; ++i)
      if (target[i] == t) {
        coeff[i] = (coeff[i] + c) % p;
        return;
      }
    target[used] = t;
    coeff[used] = c;
    ++used;
  }

  bool zero() const {
    for (int i = 0; i < used; ++i)
      if (coeff[i] != 0) return false;
    return true;
  }
};

}  // namespace

AxiomReport check_axioms(const lie::AlgebraDescriptor& alg, Exec exec) {
  const std::size_t n = alg.dim();
  const std::uint32_t p = alg.heights().p;
  AxiomReport report;
  report.pairs = n * n;
  report.triples = n * n * n;

  report.violations = par::collect_rows<AxiomViolation>(n, exec, [&](std::size_t a, std::vector<AxiomViolation>& out) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ab = alg.structure(a, b);
      const auto& ba = alg.structure(b, a);
      const bool ok = ab.target == ba.target && (ab.target < 0 || (ab.coeff + ba.coeff) % p == 0);
      if (!ok) out.push_back({AxiomViolation::Kind::Anticommutativity, a, b, 0});
    }
    auto nested = [&](std::size_t u, std::size_t v, std::size_t w, Accumulator& acc) {
      const auto& uv = alg.structure(u, v);
      if (uv.target < 0) return;
      const auto& uvw = alg.structure(static_cast<std::size_t>(uv.target), w);
      if (uvw.target < 0) return;
      acc.add(uvw.target, static_cast<std::uint32_t>(std::uint64_t{uv.coeff} * uvw.coeff % p), p);
    };
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Accumulator acc;
        nested(a, b, c, acc);
        nested(b, c, a, acc);
        nested(c, a, b, acc);
        if (!acc.zero()) out.push_back({AxiomViolation::Kind::Jacobi, a, b, c});
      }
  });
  return report;
}

std::vector<LeibnizViolation> check_leibniz(const lie::DerivationOperator& d, Exec exec) {
  const auto& alg = d.algebra();
  const std::size_t n = alg.dim();
  std::vector<dp::AlgebraElement> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(alg.from_coords(d.matrix().column(i)));

  auto apply = [&](const dp::AlgebraElement& w) {
    auto out = alg.zero();
    for (const auto& [m, c] : w.terms()) out += images[*alg.index_of(m)].scaled(c);
    return out;
  };

  return par::collect_rows<LeibnizViolation>(n, exec, [&](std::size_t a, std::vector<LeibnizViolation>& out) {
    const auto u = alg.basis_element(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = alg.basis_element(b);
      const auto lhs = apply(alg.bracket(u, v));
      const auto rhs = alg.bracket(images[a], v) + alg.bracket(u, images[b]);
      if (!(lhs == rhs)) out.push_back({a, b});
    }
  });
}

}  // namespace kernels
}  // namespace modlie
