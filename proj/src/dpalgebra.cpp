#include "modlie/dpalgebra.hpp"

#include <charconv>

namespace modlie::dp {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

Heights::Heights(std::uint32_t p_, unsigned n1_, unsigned n2_) : p(p_), n1(n1_), n2(n2_) {
  if (n1 < 1 || n2 < 1) throw Error("heights n1, n2 must be at least 1");
  if (!ff::is_prime(p) || p < 3) throw Error("characteristic must be an odd prime");
  if (ipow(p, n1 + n2) > (1u << 24)) throw Error("divided power algebra too large");
}

AlgebraElement::AlgebraElement(const Field& field, Heights heights) : field_(&field), heights_(heights) {
  if (field.characteristic() != heights.p) throw Error("field characteristic does not match heights");
}

AlgebraElement AlgebraElement::monomial(const Field& field, Heights heights, Monomial m) {
  AlgebraElement e(field, heights);
  e.add_term(m, field.one());
  return e;
}

AlgebraElement AlgebraElement::monomial(Heights heights, Monomial m, const FieldElement& coeff) {
  AlgebraElement e(coeff.field(), heights);
  e.add_term(m, coeff);
  return e;
}

FieldElement AlgebraElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

void AlgebraElement::add_term(Monomial m, const FieldElement& c) {
  if (m.i >= heights_.x_bound() || m.j >= heights_.y_bound()) throw Error("monomial exponent out of range");
  if (&c.field() != field_) throw Error("coefficient from a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::require_compatible(const AlgebraElement& o) const {
  if (field_ != o.field_ || !(heights_ == o.heights_)) throw Error("algebra elements with mismatched heights or fields");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
  AlgebraElement r(*field_, heights_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (field_->is_prime_field())
      out += c.to_string();
    else
      out += '(' + c.to_string() + ')';
    out += "*x^(" + std::to_string(m.i) + ")y^(" + std::to_string(m.j) + ')';
  }
  return out;
}

AlgebraElement AlgebraElement::parse(const Field& field, Heights heights, std::string_view text) {
  auto fail = [&]() -> AlgebraElement { throw Error("malformed algebra element '" + std::string(text) + "'"); };
  AlgebraElement out(field, heights);
  if (text == "0") return out;
  auto read_uint = [&](std::string_view s, std::uint32_t& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  while (!text.empty()) {
    const auto sep = text.find(" + ");
    std::string_view term = text.substr(0, sep);
    text = sep == std::string_view::npos ? std::string_view{} : text.substr(sep + 3);
    if (sep != std::string_view::npos && text.empty()) return fail();
    const auto star = term.find("*x^(");
    if (star == std::string_view::npos) return fail();
    std::string_view coeff = term.substr(0, star);
    if (!field.is_prime_field()) {
      if (coeff.size() < 2 || coeff.front() != '(' || coeff.back() != ')') return fail();
      coeff = coeff.substr(1, coeff.size() - 2);
    }
    std::string_view rest = term.substr(star + 4);
    const auto close_i = rest.find(")y^(");
    if (close_i == std::string_view::npos || rest.back() != ')') return fail();
    Monomial m;
    if (!read_uint(rest.substr(0, close_i), m.i)) return fail();
    if (!read_uint(rest.substr(close_i + 4, rest.size() - close_i - 5), m.j)) return fail();
    const FieldElement c = field.parse_element(coeff);
    if (c.is_zero() || out.terms_.count(m)) return fail();
    out.add_term(m, c);
  }
  return out;
}

AlgebraElement mono_mul(const Field& field, const Heights& h, Monomial a, Monomial b) {
  AlgebraElement out(field, h);
  const std::uint32_t p = h.p;
  const std::uint64_t coeff =
      std::uint64_t{ff::lucas_binomial(a.i + b.i, a.i, p)} * ff::lucas_binomial(a.j + b.j, a.j, p) % p;
  if (a.i + b.i >= h.x_bound() || a.j + b.j >= h.y_bound()) {
    // Overflow forces a base-p carry, so Lucas already gives zero.
    if (coeff != 0) throw std::logic_error("divided power overflow with nonzero coefficient");
    return out;
  }
  out.add_term({a.i + b.i, a.j + b.j}, field.from_int(static_cast<std::int64_t>(coeff)));
  return out;
}

AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
  if (&u.field() != &v.field() || !(u.heights() == v.heights())) throw Error("algebra elements with mismatched heights or fields");
  AlgebraElement out(u.field(), u.heights());
  for (const auto& [ma, ca] : u.terms())
    for (const auto& [mb, cb] : v.terms()) {
      const auto prod = mono_mul(u.field(), u.heights(), ma, mb);
      for (const auto& [m, c] : prod.terms()) out.add_term(m, c * ca * cb);
    }
  return out;
}

AlgebraElement generalized_power(const Heights& h, const FieldElement& sigma, const FieldElement& alpha, unsigned s) {
  const Field& f = alpha.field();
  const std::uint64_t step = ipow(h.p, s);
  if (step >= h.x_bound()) throw Error("generalized_power: x^(p^s) is not in the algebra");
  AlgebraElement out(f, h);
  FieldElement factorial = f.one();
  for (unsigned i = 0; i < h.p; ++i) {
    if (i > 0) factorial *= f.from_int(i);
    const std::uint64_t exponent = i * step;
    if (exponent >= h.x_bound()) break;
    const FieldElement c = ff::falling_binomial(alpha, i) * factorial * sigma.pow(i);
    out.add_term({static_cast<std::uint32_t>(exponent), 0}, c);
  }
  return out;
}

}  // namespace modlie::dp
