#pragma once

// Exhaustive verification kernels over basis pairs and triples.

#include <cstddef>
#include <vector>

#include "modlie/liealg.hpp"
#include "modlie/parallel.hpp"

namespace modlie::kernels {

using par::Exec;

struct AxiomViolation {
  enum class Kind { Anticommutativity, Jacobi };
  Kind kind;
  std::size_t a, b, c;  // basis indices; c unused for anticommutativity

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Anticommutativity on all basis pairs and Jacobi on all basis triples,
/// evaluated on the memoized structure table.
AxiomReport check_axioms(const lie::AlgebraDescriptor& alg, Exec exec = Exec::Parallel);

struct LeibnizViolation {
  std::size_t a, b;
  friend bool operator==(const LeibnizViolation&, const LeibnizViolation&) = default;
};

/// D{u, v} = {Du, v} + {u, Dv} on all basis pairs.
std::vector<LeibnizViolation> check_leibniz(const lie::DerivationOperator& d, Exec exec = Exec::Parallel);

}  // namespace modlie::kernels
