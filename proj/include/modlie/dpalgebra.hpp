#pragma once

// The divided power algebra O(2; (n1, n2)) over a finite field.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "modlie/ffield.hpp"

namespace modlie::dp {

using ff::Field;
using ff::FieldElement;

std::uint64_t ipow(std::uint64_t base, unsigned e);

/// Heights of the indeterminates x and y, together with the characteristic.
struct Heights {
  std::uint32_t p = 3;
  unsigned n1 = 1;
  unsigned n2 = 1;

  Heights() = default;
  Heights(std::uint32_t p, unsigned n1, unsigned n2);

  std::uint32_t x_bound() const { return static_cast<std::uint32_t>(ipow(p, n1)); }
  std::uint32_t y_bound() const { return static_cast<std::uint32_t>(ipow(p, n2)); }
  /// q = p^{n2}
  std::uint32_t q() const { return y_bound(); }
  std::uint32_t x_top() const { return x_bound() - 1; }
  std::uint32_t y_top() const { return y_bound() - 1; }
  std::uint64_t monomial_count() const { return std::uint64_t{x_bound()} * y_bound(); }

  friend bool operator==(const Heights&, const Heights&) = default;
};

/// x^{(i)} y^{(j)}
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse element of O(2; (n1, n2)); zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, FieldElement>;

  AlgebraElement(const Field& field, Heights heights);
  static AlgebraElement monomial(const Field& field, Heights heights, Monomial m);
  static AlgebraElement monomial(Heights heights, Monomial m, const FieldElement& coeff);

  const Field& field() const { return *field_; }
  const Heights& heights() const { return heights_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElement coefficient(Monomial m) const;
  /// Adds c * m, pruning a resulting zero. Throws Error for out-of-range m.
  void add_term(Monomial m, const FieldElement& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  AlgebraElement scaled(const FieldElement& c) const;

  /// Text form: `c*x^(i)y^(j)` terms joined by " + ", "0" for zero.
  std::string to_string() const;
  static AlgebraElement parse(const Field& field, Heights heights, std::string_view text);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.field_ == b.field_ && a.heights_ == b.heights_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const AlgebraElement& o) const;

  const Field* field_;
  Heights heights_;
  Terms terms_;
};

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
inline AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
inline AlgebraElement operator*(const FieldElement& c, const AlgebraElement& a) { return a.scaled(c); }

/// Divided-power product of two monomials; zero once an exponent overflows.
AlgebraElement mono_mul(const Field& field, const Heights& h, Monomial a, Monomial b);

/// Commutative associative product of O(2; (n1, n2)).
AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v);

/// (1 + sigma x^{(p^s)})^alpha = sum_{i<p} C(alpha, i) i! sigma^i x^{(i p^s)}.
AlgebraElement generalized_power(const Heights& h, const FieldElement& sigma, const FieldElement& alpha, unsigned s);

}  // namespace modlie::dp
