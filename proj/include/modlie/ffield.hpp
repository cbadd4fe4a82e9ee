#pragma once

// Exact arithmetic in F_p and F_{p^m}.
//
// Fields are interned: Field::get() returns a reference with static lifetime,
// so a FieldElement can carry a plain pointer to its field and two elements
// belong to the same field exactly when the pointers agree.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modlie {

/// Raised for violated preconditions of the algebraic operations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace ff {

/// Polynomial over F_p, coefficients low to high.
using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Least non-negative residue of v modulo p.
inline std::uint32_t residue(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Binomial coefficient C(n, k) mod p via Lucas' theorem.
/// C(n, k) = 0 for k < 0; negative n uses C(n, k) = (-1)^k C(k - n - 1, k).
std::uint32_t lucas_binomial(std::int64_t n, std::int64_t k, std::uint32_t p);

bool is_irreducible(std::uint32_t p, const Poly& monic);

/// Smallest monic irreducible polynomial of degree m over F_p, ordering the
/// candidates by their lower coefficients read from degree m-1 down to 0.
Poly find_irreducible(std::uint32_t p, unsigned m);

class FieldElement;

class Field {
 public:
  /// Interned field F_p[t]/(modulus). Throws Error on a non-prime or even p,
  /// or a modulus that is not monic irreducible.
  static const Field& get(std::uint32_t p, const Poly& modulus);
  /// F_p presented as F_p[t]/(t).
  static const Field& prime(std::uint32_t p);
  /// Parses the `p^m:c0,c1,...,cm` notation.
  static const Field& parse(std::string_view spec);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }
  bool is_prime_field() const { return m_ == 1; }
  std::string spec() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  /// Element with base-p digits of `code` as coefficients (low to high).
  FieldElement from_code(std::uint32_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The class of t; for m = 1 this is the root of the linear modulus.
  FieldElement generator() const;
  /// Parses the polynomial-in-t text produced by FieldElement::to_string.
  FieldElement parse_element(std::string_view text) const;

  // Raw code arithmetic, used by FieldElement and hot loops.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

 private:
  Field(std::uint32_t p, Poly modulus);
  friend struct FieldRegistry;

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t order_;
  Poly modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[g^k] = k, log_[0] unused
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& field, std::uint32_t code) : field_(&field), code_(code) {}

  const Field& field() const { return *field_; }
  bool has_field() const { return field_ != nullptr; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  /// Exactly m coefficients in [0, p), low to high.
  std::vector<std::uint32_t> coeffs() const;
  /// Integer representative in [0, p) when the element lies in F_p.
  std::optional<std::uint32_t> prime_value() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  /// Throws Error when the element is zero.
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }
  /// Coefficient-lexicographic order (highest coefficient first).
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.code_ < b.code_; }

 private:
  void require_same(const FieldElement& o) const;

  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

inline FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
inline FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
inline FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
inline FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

/// alpha (alpha - 1) ... (alpha - i + 1) / i!, requires i < p.
FieldElement falling_binomial(const FieldElement& alpha, unsigned i);

/// Smallest pi (in code order) with pi^p - pi = c, by exhaustive search.
std::optional<FieldElement> solve_artin_schreier(const FieldElement& c);

}  // namespace ff
}  // namespace modlie
