#include "modlie/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace modlie::ff {

namespace {

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for 0 <= a, b < p.
std::uint32_t small_binomial(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    num = num * (a - i) % p;
    den = den * (i + 1) % p;
  }
  return static_cast<std::uint32_t>(num * powmod_u64(den, p - 2, p) % p);
}

// ---- polynomials over F_p -------------------------------------------------

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const int df = deg(f);
  const std::uint64_t lead_inv = powmod_u64(f.back(), p - 2, p);
  while (deg(a) >= df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const int shift = deg(a) - df;
    for (int i = 0; i <= df; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly code_to_poly(std::uint32_t code, std::uint32_t p, unsigned m) {
  Poly f(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    f[i] = code % p;
    code /= p;
  }
  trim(f);
  return f;
}

std::uint32_t poly_to_code(const Poly& f, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

constexpr std::uint32_t kMaxFieldOrder = 1u << 22;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t lucas_binomial(std::int64_t n, std::int64_t k, std::uint32_t p) {
  if (k < 0) return 0;
  if (n < 0) {
    const std::uint32_t v = lucas_binomial(k - n - 1, k, p);
    return (k % 2 == 0 || v == 0) ? v : p - v;
  }
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    result = result * small_binomial(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_irreducible(std::uint32_t p, const Poly& monic) {
  Poly f = monic;
  trim(f);
  const int m = deg(f);
  if (m < 1 || f.back() != 1) return false;
  if (m == 1) return true;
  // Rabin: x^(p^m) = x mod f and gcd(x^(p^d) - x, f) = 1 for proper divisors d.
  const Poly x{0, 1};
  std::vector<Poly> frob(m + 1);
  frob[0] = x;
  for (int d = 1; d <= m; ++d) frob[d] = poly_powmod(frob[d - 1], p, f, p);
  if (poly_sub(frob[m], x, p) != Poly{}) return false;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const Poly g = poly_gcd(f, poly_sub(frob[d], x, p), p);
    if (deg(g) > 0) return false;
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, unsigned m) {
  if (m < 1) throw Error("find_irreducible: degree must be positive");
  if (!is_prime(p)) throw Error("find_irreducible: p is not prime");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw Error("find_irreducible: no irreducible polynomial found");
}

// ---- Field ------------------------------------------------------------------

struct FieldRegistry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, Poly>, std::unique_ptr<Field>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }

  const Field& get(std::uint32_t p, const Poly& modulus) {
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, modulus);
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    auto field = std::unique_ptr<Field>(new Field(p, modulus));
    const Field& ref = *field;
    fields.emplace(std::move(key), std::move(field));
    return ref;
  }
};

Field::Field(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p) || p < 3) throw Error("field characteristic must be an odd prime, got " + std::to_string(p));
  for (auto& c : modulus_) c %= p;
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) throw Error("field modulus must be monic of positive degree");
  m_ = static_cast<unsigned>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m_; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error("field order exceeds desk-scale limit");
  }
  order_ = static_cast<std::uint32_t>(q);
  if (!is_irreducible(p, modulus_)) throw Error("field modulus is not irreducible: " + spec());

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return poly_to_code(poly_mulmod(code_to_poly(a, p_, m_), code_to_poly(b, p_, m_), modulus_, p_), p_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  const std::uint64_t group = order_ - 1;
  const auto factors = prime_factors(group);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < order_ && gen == 0; ++cand) {
    bool primitive = true;
    for (auto r : factors)
      if (slow_pow(cand, group / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) gen = cand;
  }
  exp_.resize(group);
  log_.assign(order_, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t k = 0; k < group; ++k) {
    exp_[k] = cur;
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = slow_mul(cur, gen);
  }
}

const Field& Field::get(std::uint32_t p, const Poly& modulus) {
  Poly f = modulus;
  if (p > 0)
    for (auto& c : f) c %= p;
  trim(f);
  return FieldRegistry::instance().get(p, f);
}

const Field& Field::prime(std::uint32_t p) { return get(p, Poly{0, 1}); }

const Field& Field::parse(std::string_view spec) {
  auto fail = [&]() -> const Field& { throw Error("malformed field spec '" + std::string(spec) + "', expected p^m:c0,...,cm"); };
  const auto caret = spec.find('^');
  const auto colon = spec.find(':');
  if (caret == std::string_view::npos || colon == std::string_view::npos || colon < caret) return fail();
  auto parse_uint = [&](std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  std::uint64_t p = 0, m = 0;
  if (!parse_uint(spec.substr(0, caret), p) || !parse_uint(spec.substr(caret + 1, colon - caret - 1), m)) return fail();
  Poly f;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    std::uint64_t c = 0;
    if (!parse_uint(rest.substr(0, comma), c) || c >= p) return fail();
    f.push_back(static_cast<std::uint32_t>(c));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (f.size() != m + 1 || f.back() != 1) return fail();
  return get(static_cast<std::uint32_t>(p), f);
}

std::string Field::spec() const {
  std::ostringstream os;
  os << p_ << '^' << m_ << ':';
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }
FieldElement Field::from_int(std::int64_t v) const { return {*this, residue(v, p_)}; }

FieldElement Field::from_code(std::uint32_t code) const {
  if (code >= order_) throw Error("field element code out of range");
  return {*this, code};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  Poly f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p_;
  if (f.size() > m_) f = poly_mod(std::move(f), modulus_, p_);
  trim(f);
  return {*this, poly_to_code(f, p_)};
}

FieldElement Field::generator() const {
  const std::uint32_t t[] = {0, 1};
  return from_coeffs(t);
}

FieldElement Field::parse_element(std::string_view text) const {
  auto fail = [&]() -> FieldElement { throw Error("malformed field element '" + std::string(text) + "'"); };
  if (text.empty()) return fail();
  FieldElement acc = zero();
  const FieldElement t = generator();
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      return fail();
    }
    first = false;
    std::uint64_t coeff = 1;
    bool have_digits = false;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos > start) {
      have_digits = true;
      coeff = 0;
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, coeff);
      if (ec != std::errc()) return fail();
    }
    std::uint64_t power = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        const std::size_t es = ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == es) return fail();
        std::from_chars(text.data() + es, text.data() + pos, power);
      }
    } else if (!have_digits) {
      return fail();
    }
    FieldElement term = from_int(static_cast<std::int64_t>(coeff % p_)) * t.pow(power);
    acc += negative ? -term : term;
  }
  return acc;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
  const std::uint64_t group = order_ - 1;
  if (k >= group) k -= group;
  return exp_[k];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error("inversion of zero field element");
  const std::uint32_t group = order_ - 1;
  return exp_[(group - log_[a]) % group];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % group)) % group];
}

// ---- FieldElement -----------------------------------------------------------

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_ || field_ == nullptr) throw Error("field elements belong to different fields");
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  std::vector<std::uint32_t> c(field_->degree());
  std::uint32_t code = code_;
  for (auto& d : c) {
    d = code % field_->characteristic();
    code /= field_->characteristic();
  }
  return c;
}

std::optional<std::uint32_t> FieldElement::prime_value() const {
  if (code_ < field_->characteristic()) return code_;
  return std::nullopt;
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(code_)}; }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(o);
  code_ = field_->add(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same(o);
  code_ = field_->sub(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(o);
  code_ = field_->mul(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same(o);
  code_ = field_->mul(code_, field_->inv(o.code_));
  return *this;
}

FieldElement FieldElement::inv() const { return {*field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {*field_, field_->pow(code_, e)}; }

std::string FieldElement::to_string() const {
  const auto c = coeffs();
  if (field_->degree() == 1) return std::to_string(c[0]);
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0 || c[k] != 1) out += std::to_string(c[k]);
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

FieldElement falling_binomial(const FieldElement& alpha, unsigned i) {
  const Field& f = alpha.field();
  if (i >= f.characteristic()) throw Error("falling_binomial: index must be below the characteristic");
  FieldElement num = f.one();
  FieldElement fact = f.one();
  for (unsigned r = 0; r < i; ++r) {
    num *= alpha - f.from_int(r);
    fact *= f.from_int(r + 1);
  }
  return num / fact;
}

std::optional<FieldElement> solve_artin_schreier(const FieldElement& c) {
  const Field& f = c.field();
  for (std::uint32_t code = 0; code < f.order(); ++code) {
    const FieldElement x{f, code};
    if (x.pow(f.characteristic()) - x == c) return x;
  }
  return std::nullopt;
}

}  // namespace modlie::ff
