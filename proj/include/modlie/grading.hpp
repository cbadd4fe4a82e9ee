#pragma once

// Cyclic gradings of the Hamiltonian algebras and grading switching through
// truncated exponentials and Laguerre polynomials of D = (ad y)^{p^s}.
//
// Basis vectors are labelled by triples (j, k, a) standing for the monomial
//   x^{(a p^s)} x^{(k+1)} y^{(j+1)},  -1 <= j < q-1,  -1 <= k < p^s - 1,  0 <= a < p.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modlie/liealg.hpp"
#include "modlie/parallel.hpp"

namespace modlie::grading {

using dp::AlgebraElement;
using dp::Heights;
using dp::Monomial;
using ff::Field;
using ff::FieldElement;
using lie::AlgebraDescriptor;
using lie::DerivationOperator;
using par::Exec;

enum class GradingCase { PreSwitchAZ, PreSwitchGH, BigField, PrimeField };

std::string_view case_name(GradingCase c);

struct Label {
  int j = 0;
  int k = 0;
  int a = 0;

  friend auto operator<=>(const Label&, const Label&) = default;
  std::string to_string() const;
};

Label label_of(Monomial m, std::uint32_t p, unsigned s);
Monomial monomial_of(Label l, std::uint32_t p, unsigned s);

/// Residue-valued degree map on labels (equivalently on monomials).
struct GradingSpec {
  GradingCase kind = GradingCase::PreSwitchAZ;
  std::uint32_t p = 3;
  unsigned s = 0;
  std::int64_t q = 3;
  std::int64_t modulus = 0;  // N
  std::int64_t pi_hat = 0;   // integer representative of pi in F_p (GH cases)

  /// N = p^{n1}(q-1); x^{(i+1)} y^{(j+1)} has degree (1-q)i - j.
  static GradingSpec preswitch_az(const Heights& h);
  /// N = p^{s+1}(q-1); (j,k,a) has degree (1-q)((a + j pi)p^s + k) - j.
  static GradingSpec preswitch_gh(const Heights& h, unsigned s, std::int64_t pi_hat);
  /// N = p^{s+1}(q-1); (j,k,a) has degree (1-q)(a p^s + k) - j.
  static GradingSpec big_field(const Heights& h, unsigned s);
  static GradingSpec prime_field(const Heights& h, unsigned s, std::int64_t pi_hat);

  std::int64_t degree(Label l) const;
  std::int64_t degree(Monomial m) const { return degree(label_of(m, p, s)); }
};

/// Degree of a monomial under a pre-switch grading.
std::int64_t preswitch_degree(Monomial m, const GradingSpec& spec);

/// Parameters of a switch: sigma != 0, pi, and s. lambda = 1/sigma.
struct SwitchConfig {
  FieldElement sigma;
  FieldElement pi;
  unsigned s = 1;

  FieldElement lambda() const { return sigma.inv(); }
};

struct GradedBasis {
  std::int64_t modulus = 0;
  std::vector<Label> labels;
  std::vector<AlgebraElement> vectors;
  std::vector<std::int64_t> degrees;
  std::vector<FieldElement> scalars;

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> find(Label l) const;
  /// One `(j,k,a) | degree | element-text | c-text` record per line, labels ascending.
  std::string serialize() const;
  static GradedBasis parse(std::string_view text, const Field& field, const Heights& h, std::int64_t modulus);
};

/// Monomial basis of `alg` labelled and graded by `spec`.
GradedBasis preswitch_basis(const AlgebraDescriptor& alg, const GradingSpec& spec);

/// Histogram degree -> number of basis vectors.
std::map<std::int64_t, std::size_t> degree_histogram(const GradedBasis& basis);

struct GradingViolation {
  Label u, v;
  Label stray;
  std::int64_t expected_degree = 0;
  std::int64_t stray_degree = 0;
  std::string coefficient;

  friend bool operator==(const GradingViolation&, const GradingViolation&) = default;
};

using BracketFn = std::function<AlgebraElement(const AlgebraElement&, const AlgebraElement&)>;

/// Empty iff every bracket of basis vectors lies in the span of the basis
/// vectors of the summed degree. Throws Error if the vectors are dependent.
std::vector<GradingViolation> check_graded(const BracketFn& bracket, const GradedBasis& basis, Exec exec = Exec::Parallel);
std::vector<GradingViolation> check_graded(const AlgebraDescriptor& alg, const GradedBasis& basis, Exec exec = Exec::Parallel);

/// Eigenspaces of the semisimple operator d^p: label a carries eigenvalue a lambda^p.
struct EigenDecomposition {
  FieldElement lambda;
  std::vector<std::uint32_t> labels;
  std::vector<std::vector<la::Vec>> spaces;  // parallel to labels, coordinates on alg basis

  std::size_t total_dim() const;
};

/// Requires d^{p^2} = lambda^{(p-1)p} d^p; throws Error when the hypothesis
/// fails or the eigenspaces do not fill the space.
EigenDecomposition eigen_decompose(const la::Matrix& d, const FieldElement& lambda);
EigenDecomposition eigen_decompose(const DerivationOperator& d, const FieldElement& lambda);

/// L_{p-1}^{(alpha)}(d) v = sum_k C(alpha+p-1, p-1-k) (-1)^k / k! d^k v.
la::Vec laguerre_apply(const FieldElement& alpha, const la::Matrix& d, la::Vec v);
AlgebraElement laguerre_apply(const FieldElement& alpha, const DerivationOperator& d, const AlgebraElement& v);

/// E(d) v = sum_{k<p} d^k v / k!.
la::Vec truncated_exp_apply(const la::Matrix& d, la::Vec v);

/// Switches a graded basis along d. When d^p = 0 every vector is mapped by
/// E(d); otherwise the eigen-label-a component of each vector is mapped by
/// L_{p-1}^{(a pi)}(d / sigma). Throws Error naming a failed hypothesis.
GradedBasis switch_grading(const AlgebraDescriptor& alg, const GradedBasis& graded, const DerivationOperator& d,
                           const SwitchConfig& cfg);

/// e_{j,k,a} of the big-field (Albert-Zassenhaus) or prime-field (graded
/// Hamiltonian) construction, with scalars c_{j,a}. For the prime-field case
/// pi must lie in F_p and be nonzero unless `allow_zero_pi`.
GradedBasis build_closed_basis(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg,
                               bool allow_zero_pi = false);

/// The grading matching build_closed_basis for the given configuration.
GradingSpec closed_basis_grading(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg);

struct TableViolation {
  Label u, v;
  std::string expected;
  std::string actual;

  friend bool operator==(const TableViolation&, const TableViolation&) = default;
};

/// Closed-form right side of the product table for {e_u, e_v}.
AlgebraElement predicted_product(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg,
                                 const GradedBasis& basis, Label u, Label v);

/// Compares every bracket {e_u, e_v} with the product table.
std::vector<TableViolation> verify_product_tables(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg,
                                                  const GradedBasis& basis, Exec exec = Exec::Parallel);

}  // namespace modlie::grading
