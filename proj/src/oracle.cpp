#include "modlie/oracle.hpp"

#include <stdexcept>

namespace modlie::oracle {

namespace {

struct Split {
  std::uint32_t unit = 1;  // product of the factors with p removed, mod p
  std::int64_t valuation = 0;
};

Split factorial(std::int64_t n, std::uint32_t p) {
  Split s;
  for (std::int64_t m = 2; m <= n; ++m) {
    std::int64_t v = m;
    while (v % p == 0) {
      v /= p;
      ++s.valuation;
    }
    s.unit = static_cast<std::uint32_t>(std::uint64_t{s.unit} * static_cast<std::uint64_t>(v % p) % p);
  }
  return s;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

dp::AlgebraElement derivative(const dp::AlgebraElement& f, bool in_x) {
  dp::AlgebraElement out(f.field(), f.heights());
  for (const auto& [m, c] : f.terms()) {
    if (in_x && m.i > 0) out.add_term({m.i - 1, m.j}, c);
    if (!in_x && m.j > 0) out.add_term({m.i, m.j - 1}, c);
  }
  return out;
}

}  // namespace

std::uint32_t factorial_binomial(std::int64_t n, std::int64_t k, std::uint32_t p) {
  if (n < 0) throw Error("factorial_binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  const Split a = factorial(n, p), b = factorial(k, p), c = factorial(n - k, p);
  if (a.valuation > b.valuation + c.valuation) return 0;
  const std::uint64_t denom = std::uint64_t{b.unit} * c.unit % p;
  return static_cast<std::uint32_t>(std::uint64_t{a.unit} * inverse_mod(static_cast<std::uint32_t>(denom), p) % p);
}

dp::AlgebraElement poisson_bracket(lie::Family family, const dp::AlgebraElement& u, const dp::AlgebraElement& v) {
  const auto& h = u.heights();
  const auto& f = u.field();
  dp::AlgebraElement out = derivative(u, false) * derivative(v, true) - derivative(u, true) * derivative(v, false);

  if (family == lie::Family::AlbertZassenhaus) {
    for (const auto& [a, ca] : u.terms())
      for (const auto& [b, cb] : v.terms()) {
        if (a.i != 0 || b.i != 0 || a.j + b.j == 0) continue;
        const std::int64_t top = std::int64_t{a.j} + b.j - 1;
        const std::int64_t c = std::int64_t{factorial_binomial(top, b.j, h.p)} - factorial_binomial(top, a.j, h.p);
        if (c % h.p == 0) continue;
        if (top >= h.y_bound()) throw std::logic_error("y-only correction overflows with a nonzero coefficient");
        out.add_term({h.x_top(), static_cast<std::uint32_t>(top)}, f.from_int(c) * ca * cb);
      }
  } else {
    out.add_term({0, 0}, -out.coefficient({0, 0}));
    if (!out.coefficient({h.x_top(), h.y_top()}).is_zero())
      throw std::logic_error("Poisson product reaches the excluded top monomial");
  }
  return out;
}

}  // namespace modlie::oracle
