#pragma once

// The graded Hamiltonian algebra H(2;(n1,n2))^(2) and the Albert-Zassenhaus
// algebra H(2;(n1,n2);Phi(1)), both realized on monomials of O(2;(n1,n2)),
// together with the derivation D = (ad y)^{p^s}.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "modlie/dpalgebra.hpp"
#include "modlie/linalg.hpp"

namespace modlie::lie {

using dp::AlgebraElement;
using dp::Heights;
using dp::Monomial;
using ff::Field;
using ff::FieldElement;

enum class Family { GradedHamiltonian, AlbertZassenhaus };

std::string_view family_name(Family f);
/// Accepts "gh", "graded-hamiltonian", "az", "albert-zassenhaus".
Family parse_family(std::string_view text);

/// C(i+k-1, i) C(j+l-1, j-1) - C(i+k-1, i-1) C(j+l-1, j) mod p.
std::uint32_t n_coeff(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l, std::uint32_t p);

/// Structure constant of a monomial pair: coeff (in F_p) times target.
struct MonomialBracket {
  std::uint32_t coeff;
  Monomial target;
};

/// Bracket of two monomials by the family's rule, before restricting to a
/// basis. nullopt means the bracket vanishes. For GradedHamiltonian the
/// constant term is discarded.
std::optional<MonomialBracket> monomial_bracket(Family family, const Heights& h, Monomial a, Monomial b);

class AlgebraDescriptor {
 public:
  /// Entry of the memoized structure table; target < 0 encodes zero.
  struct Entry {
    std::uint32_t coeff = 0;
    std::int32_t target = -1;
  };

  AlgebraDescriptor(Family family, const Field& field, Heights heights);

  Family family() const { return family_; }
  const Field& field() const { return *field_; }
  const Heights& heights() const { return heights_; }
  std::size_t dim() const { return basis_.size(); }
  std::span<const Monomial> basis() const { return basis_; }

  std::optional<std::size_t> index_of(Monomial m) const;
  bool in_basis(Monomial m) const { return index_of(m).has_value(); }
  AlgebraElement basis_element(std::size_t idx) const;
  AlgebraElement zero() const { return AlgebraElement(*field_, heights_); }
  AlgebraElement element(Monomial m) const;

  const Entry& structure(std::size_t a, std::size_t b) const { return table_[a * basis_.size() + b]; }

  /// Bilinear bracket. Throws Error when u or v has support outside the basis.
  AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) const;

  la::Vec to_coords(const AlgebraElement& u) const;
  AlgebraElement from_coords(std::span<const FieldElement> coords) const;

 private:
  std::size_t require_index(Monomial m) const;

  Family family_;
  const Field* field_;
  Heights heights_;
  std::vector<Monomial> basis_;
  std::vector<std::int32_t> index_;  // i * y_bound + j -> basis index or -1
  std::vector<Entry> table_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

AlgebraPtr make_algebra(Family family, const Field& field, Heights heights);

inline AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v, const AlgebraDescriptor& alg) {
  return alg.bracket(u, v);
}

enum class Realization { IteratedAd, ClosedForm };

/// The linear map (ad y)^{p^s}, stored as a matrix on basis coordinates.
class DerivationOperator {
 public:
  DerivationOperator(AlgebraPtr alg, unsigned s, Realization realization, la::Matrix matrix);

  const AlgebraDescriptor& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  unsigned s() const { return s_; }
  Realization realization() const { return realization_; }
  const la::Matrix& matrix() const { return matrix_; }

  AlgebraElement apply(const AlgebraElement& v) const;
  la::Matrix power(std::uint64_t e) const { return matrix_.pow(e); }

 private:
  AlgebraPtr alg_;
  unsigned s_;
  Realization realization_;
  la::Matrix matrix_;
};

/// ClosedForm needs n1 = s + 1; IteratedAd works for any s with p^s below
/// the monomial count.
DerivationOperator build_derivation(AlgebraPtr alg, unsigned s, Realization realization = Realization::ClosedForm);

}  // namespace modlie::lie
