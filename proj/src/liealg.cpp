#include "modlie/liealg.hpp"

#include <stdexcept>
#include <string>

namespace modlie::lie {

namespace {

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + p - b) % p; }

}  // namespace

std::string_view family_name(Family f) {
  return f == Family::GradedHamiltonian ? "graded-hamiltonian" : "albert-zassenhaus";
}

Family parse_family(std::string_view text) {
  if (text == "gh" || text == "graded-hamiltonian") return Family::GradedHamiltonian;
  if (text == "az" || text == "albert-zassenhaus") return Family::AlbertZassenhaus;
  throw Error("unknown algebra family '" + std::string(text) + "'");
}

std::uint32_t n_coeff(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l, std::uint32_t p) {
  using ff::lucas_binomial;
  const std::uint64_t first = std::uint64_t{lucas_binomial(i + k - 1, i, p)} * lucas_binomial(j + l - 1, j - 1, p) % p;
  const std::uint64_t second = std::uint64_t{lucas_binomial(i + k - 1, i - 1, p)} * lucas_binomial(j + l - 1, j, p) % p;
  return sub_mod(static_cast<std::uint32_t>(first), static_cast<std::uint32_t>(second), p);
}

std::optional<MonomialBracket> monomial_bracket(Family family, const Heights& h, Monomial a, Monomial b) {
  const std::uint32_t p = h.p;
  const std::int64_t i = a.i, j = a.j, k = b.i, l = b.j;
  if (family == Family::AlbertZassenhaus && i + k == 0) {
    if (j + l == 0) return std::nullopt;
    const std::uint32_t c = sub_mod(ff::lucas_binomial(j + l - 1, l, p), ff::lucas_binomial(j + l - 1, j, p), p);
    if (j + l - 1 >= h.y_bound()) {
      if (c != 0) throw std::logic_error("y-overflow with nonzero exceptional coefficient");
      return std::nullopt;
    }
    if (c == 0) return std::nullopt;
    return MonomialBracket{c, {h.x_top(), static_cast<std::uint32_t>(j + l - 1)}};
  }
  // x^{(-1)} or y^{(-1)} in the target: the Poisson product has no such term.
  if (i + k == 0 || j + l == 0) return std::nullopt;
  const std::uint32_t c = n_coeff(i, j, k, l, p);
  if (i + k - 1 >= h.x_bound() || j + l - 1 >= h.y_bound()) {
    if (c != 0) throw std::logic_error("exponent overflow with nonzero structure constant");
    return std::nullopt;
  }
  if (c == 0) return std::nullopt;
  const Monomial target{static_cast<std::uint32_t>(i + k - 1), static_cast<std::uint32_t>(j + l - 1)};
  if (family == Family::GradedHamiltonian) {
    if (target.i == 0 && target.j == 0) return std::nullopt;
    if (target.i == h.x_top() && target.j == h.y_top())
      throw std::logic_error("graded Hamiltonian bracket reached the excluded top monomial");
  }
  return MonomialBracket{c, target};
}

AlgebraDescriptor::AlgebraDescriptor(Family family, const Field& field, Heights heights)
    : family_(family), field_(&field), heights_(heights) {
  if (field.characteristic() != heights.p) throw Error("field characteristic does not match heights");
  const std::uint32_t xb = heights.x_bound(), yb = heights.y_bound();
  index_.assign(std::size_t{xb} * yb, -1);
  for (std::uint32_t i = 0; i < xb; ++i)
    for (std::uint32_t j = 0; j < yb; ++j) {
      if (family == Family::GradedHamiltonian && ((i == 0 && j == 0) || (i == xb - 1 && j == yb - 1))) continue;
      index_[std::size_t{i} * yb + j] = static_cast<std::int32_t>(basis_.size());
      basis_.push_back({i, j});
    }
  const std::size_t n = basis_.size();
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = monomial_bracket(family, heights, basis_[a], basis_[b]);
      if (!r) continue;
      const std::int32_t t = index_[std::size_t{r->target.i} * yb + r->target.j];
      if (t < 0) throw std::logic_error("bracket of basis monomials leaves the basis");
      table_[a * n + b] = {r->coeff, t};
    }
}

std::optional<std::size_t> AlgebraDescriptor::index_of(Monomial m) const {
  if (m.i >= heights_.x_bound() || m.j >= heights_.y_bound()) return std::nullopt;
  const std::int32_t idx = index_[std::size_t{m.i} * heights_.y_bound() + m.j];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::size_t AlgebraDescriptor::require_index(Monomial m) const {
  auto idx = index_of(m);
  if (!idx)
    throw Error("monomial x^(" + std::to_string(m.i) + ")y^(" + std::to_string(m.j) + ") is not a basis element of the " +
                std::string(family_name(family_)) + " algebra");
  return *idx;
}

AlgebraElement AlgebraDescriptor::basis_element(std::size_t idx) const {
  return AlgebraElement::monomial(*field_, heights_, basis_.at(idx));
}

AlgebraElement AlgebraDescriptor::element(Monomial m) const {
  require_index(m);
  return AlgebraElement::monomial(*field_, heights_, m);
}

AlgebraElement AlgebraDescriptor::bracket(const AlgebraElement& u, const AlgebraElement& v) const {
  if (&u.field() != field_ || &v.field() != field_ || !(u.heights() == heights_) || !(v.heights() == heights_))
    throw Error("bracket operands do not belong to this algebra");
  const std::size_t n = basis_.size();
  std::vector<std::size_t> vidx;
  vidx.reserve(v.size());
  for (const auto& [m, c] : v.terms()) vidx.push_back(require_index(m));
  AlgebraElement out(*field_, heights_);
  for (const auto& [ma, ca] : u.terms()) {
    const std::size_t a = require_index(ma);
    std::size_t t = 0;
    for (const auto& [mb, cb] : v.terms()) {
      const Entry& e = table_[a * n + vidx[t++]];
      if (e.target < 0) continue;
      out.add_term(basis_[e.target], field_->from_int(e.coeff) * ca * cb);
    }
  }
  return out;
}

la::Vec AlgebraDescriptor::to_coords(const AlgebraElement& u) const {
  la::Vec v = la::zero_vec(*field_, basis_.size());
  for (const auto& [m, c] : u.terms()) v[require_index(m)] = c;
  return v;
}

AlgebraElement AlgebraDescriptor::from_coords(std::span<const FieldElement> coords) const {
  if (coords.size() != basis_.size()) throw Error("coordinate vector has wrong length");
  AlgebraElement out(*field_, heights_);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(basis_[i], coords[i]);
  return out;
}

AlgebraPtr make_algebra(Family family, const Field& field, Heights heights) {
  return std::make_shared<const AlgebraDescriptor>(family, field, heights);
}

DerivationOperator::DerivationOperator(AlgebraPtr alg, unsigned s, Realization realization, la::Matrix matrix)
    : alg_(std::move(alg)), s_(s), realization_(realization), matrix_(std::move(matrix)) {}

AlgebraElement DerivationOperator::apply(const AlgebraElement& v) const {
  AlgebraElement out = alg_->zero();
  const auto basis = alg_->basis();
  for (const auto& [m, c] : v.terms()) {
    const auto idx = alg_->index_of(m);
    if (!idx) throw Error("derivation applied to an element outside the basis");
    const std::size_t col = *idx;
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
      if (!matrix_(r, col).is_zero()) out.add_term(basis[r], matrix_(r, col) * c);
  }
  return out;
}

DerivationOperator build_derivation(AlgebraPtr alg, unsigned s, Realization realization) {
  const AlgebraDescriptor& A = *alg;
  const Heights& h = A.heights();
  const Field& f = A.field();
  const std::uint64_t step = dp::ipow(h.p, s);
  const std::size_t n = A.dim();
  std::vector<la::Vec> columns;
  columns.reserve(n);
  if (realization == Realization::IteratedAd) {
    if (step > h.monomial_count() * h.p) throw Error("build_derivation: p^s too large");
    const AlgebraElement y = A.element({0, 1});
    for (std::size_t idx = 0; idx < n; ++idx) {
      AlgebraElement v = A.basis_element(idx);
      for (std::uint64_t r = 0; r < step && !v.is_zero(); ++r) v = A.bracket(y, v);
      columns.push_back(A.to_coords(v));
    }
  } else {
    if (h.n1 != s + 1) throw Error("closed-form derivation requires n1 = s + 1");
    for (std::size_t idx = 0; idx < n; ++idx) {
      const Monomial m = A.basis()[idx];
      AlgebraElement v = A.zero();
      if (m.i >= step) {
        const Monomial t{static_cast<std::uint32_t>(m.i - step), m.j};
        if (A.in_basis(t)) v.add_term(t, f.one());
      } else if (A.family() == Family::AlbertZassenhaus) {
        // x^{(k+1)} y^{(j+1)} -> -j x^{((p-1)p^s)} x^{(k+1)} y^{(j+1)}
        const Monomial t{static_cast<std::uint32_t>(m.i + (h.p - 1) * step), m.j};
        v.add_term(t, f.from_int(1 - static_cast<std::int64_t>(m.j)));
      }
      columns.push_back(A.to_coords(v));
    }
  }
  return DerivationOperator(std::move(alg), s, realization, la::Matrix::from_columns(f, n, columns));
}

}  // namespace modlie::lie
