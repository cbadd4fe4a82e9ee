#include "modlie/grading.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace modlie::grading {

namespace {

std::int64_t pow_i(std::int64_t b, unsigned e) { return static_cast<std::int64_t>(dp::ipow(b, e)); }

std::int64_t mod_n(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

void sort_basis(GradedBasis& b) {
  std::vector<std::size_t> order(b.labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return b.labels[x] < b.labels[y]; });
  GradedBasis out;
  out.modulus = b.modulus;
  for (auto i : order) {
    out.labels.push_back(b.labels[i]);
    out.vectors.push_back(std::move(b.vectors[i]));
    out.degrees.push_back(b.degrees[i]);
    out.scalars.push_back(b.scalars[i]);
  }
  b = std::move(out);
}

// Dense change of coordinates from a spanning basis to its own coefficients.
struct BasisCoordinates {
  std::map<Monomial, std::size_t> monomial_index;
  la::Matrix inverse;

  BasisCoordinates(const Field& f, const std::vector<AlgebraElement>& vectors) : inverse(f, 0, 0) {
    for (const auto& v : vectors)
      for (const auto& [m, c] : v.terms()) monomial_index.emplace(m, 0);
    std::size_t idx = 0;
    for (auto& [m, i] : monomial_index) i = idx++;
    if (monomial_index.size() != vectors.size()) throw Error("graded basis does not span its monomial support");
    std::vector<la::Vec> cols;
    cols.reserve(vectors.size());
    for (const auto& v : vectors) cols.push_back(coords(f, v));
    auto inv = la::inverse(la::Matrix::from_columns(f, vectors.size(), cols));
    if (!inv) throw Error("graded basis vectors are linearly dependent");
    inverse = std::move(*inv);
  }

  la::Vec coords(const Field& f, const AlgebraElement& v) const {
    la::Vec out = la::zero_vec(f, monomial_index.size());
    for (const auto& [m, c] : v.terms()) {
      auto it = monomial_index.find(m);
      if (it == monomial_index.end()) throw Error("element leaves the span of the graded basis");
      out[it->second] = c;
    }
    return out;
  }

  // Coefficients of v with respect to the basis vectors.
  std::vector<std::pair<std::size_t, FieldElement>> expand(const Field& f, const AlgebraElement& v) const {
    std::vector<std::uint32_t> acc(inverse.rows(), 0);
    for (const auto& [m, c] : v.terms()) {
      auto it = monomial_index.find(m);
      if (it == monomial_index.end()) throw Error("element leaves the span of the graded basis");
      for (std::size_t r = 0; r < inverse.rows(); ++r) {
        const std::uint32_t x = inverse(r, it->second).code();
        if (x != 0) acc[r] = f.add(acc[r], f.mul(x, c.code()));
      }
    }
    std::vector<std::pair<std::size_t, FieldElement>> out;
    for (std::size_t r = 0; r < acc.size(); ++r)
      if (acc[r] != 0) out.emplace_back(r, FieldElement(f, acc[r]));
    return out;
  }
};

FieldElement factorial(const Field& f, unsigned n) {
  FieldElement r = f.one();
  for (unsigned i = 2; i <= n; ++i) r *= f.from_int(i);
  return r;
}

AlgebraElement vector_or_zero(const AlgebraDescriptor& alg, const GradedBasis& basis, Label l) {
  auto idx = basis.find(l);
  return idx ? basis.vectors[*idx] : alg.zero();
}

}  // namespace

std::string_view case_name(GradingCase c) {
  switch (c) {
    case GradingCase::PreSwitchAZ:
      return "preswitch-az";
    case GradingCase::PreSwitchGH:
      return "preswitch-gh";
    case GradingCase::BigField:
      return "big-field";
    case GradingCase::PrimeField:
      return "prime-field";
  }
  return "?";
}

std::string Label::to_string() const {
  return "(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(a) + ")";
}

Label label_of(Monomial m, std::uint32_t p, unsigned s) {
  const auto ps = static_cast<std::uint32_t>(dp::ipow(p, s));
  return {static_cast<int>(m.j) - 1, static_cast<int>(m.i % ps) - 1, static_cast<int>(m.i / ps)};
}

Monomial monomial_of(Label l, std::uint32_t p, unsigned s) {
  const auto ps = static_cast<std::int64_t>(dp::ipow(p, s));
  return {static_cast<std::uint32_t>(l.a * ps + l.k + 1), static_cast<std::uint32_t>(l.j + 1)};
}

GradingSpec GradingSpec::preswitch_az(const Heights& h) {
  GradingSpec g;
  g.kind = GradingCase::PreSwitchAZ;
  g.p = h.p;
  g.s = h.n1 - 1;
  g.q = h.q();
  g.modulus = pow_i(h.p, h.n1) * (g.q - 1);
  return g;
}

GradingSpec GradingSpec::preswitch_gh(const Heights& h, unsigned s, std::int64_t pi_hat) {
  if (h.n1 != s + 1) throw Error("graded Hamiltonian grading requires n1 = s + 1");
  GradingSpec g;
  g.kind = GradingCase::PreSwitchGH;
  g.p = h.p;
  g.s = s;
  g.q = h.q();
  g.modulus = pow_i(h.p, s + 1) * (g.q - 1);
  g.pi_hat = pi_hat;
  return g;
}

GradingSpec GradingSpec::big_field(const Heights& h, unsigned s) {
  if (h.n1 != s + 1) throw Error("big-field grading requires n1 = s + 1");
  GradingSpec g = preswitch_az(h);
  g.kind = GradingCase::BigField;
  return g;
}

GradingSpec GradingSpec::prime_field(const Heights& h, unsigned s, std::int64_t pi_hat) {
  GradingSpec g = preswitch_gh(h, s, pi_hat);
  g.kind = GradingCase::PrimeField;
  return g;
}

std::int64_t GradingSpec::degree(Label l) const {
  const std::int64_t ps = pow_i(p, s);
  std::int64_t inner = l.a;
  if (kind == GradingCase::PreSwitchGH || kind == GradingCase::PrimeField) inner += std::int64_t{l.j} * pi_hat;
  return mod_n((1 - q) * (inner * ps + l.k) - l.j, modulus);
}

std::int64_t preswitch_degree(Monomial m, const GradingSpec& spec) { return spec.degree(m); }

std::optional<std::size_t> GradedBasis::find(Label l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || !(*it == l)) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::string GradedBasis::serialize() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << labels[i].to_string() << " | " << degrees[i] << " | " << vectors[i].to_string() << " | "
       << scalars[i].to_string() << '\n';
  return os.str();
}

GradedBasis GradedBasis::parse(std::string_view text, const Field& field, const Heights& h, std::int64_t modulus) {
  GradedBasis b;
  b.modulus = modulus;
  auto fail = [](std::string_view line) -> GradedBasis {
    throw Error("malformed graded basis record '" + std::string(line) + "'");
  };
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    std::vector<std::string_view> parts;
    std::string_view rest = line;
    for (std::size_t sep; (sep = rest.find(" | ")) != std::string_view::npos;) {
      parts.push_back(rest.substr(0, sep));
      rest = rest.substr(sep + 3);
    }
    parts.push_back(rest);
    if (parts.size() != 4 || parts[0].size() < 7 || parts[0].front() != '(' || parts[0].back() != ')') return fail(line);
    Label l;
    {
      std::string lab(parts[0].substr(1, parts[0].size() - 2));
      std::istringstream is(lab);
      char c1 = 0, c2 = 0;
      if (!(is >> l.j >> c1 >> l.k >> c2 >> l.a) || c1 != ',' || c2 != ',') return fail(line);
    }
    std::int64_t deg = 0;
    auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), deg);
    if (ec != std::errc() || ptr != parts[1].data() + parts[1].size()) return fail(line);
    b.labels.push_back(l);
    b.degrees.push_back(deg);
    b.vectors.push_back(AlgebraElement::parse(field, h, parts[2]));
    b.scalars.push_back(field.parse_element(parts[3]));
  }
  sort_basis(b);
  return b;
}

GradedBasis preswitch_basis(const AlgebraDescriptor& alg, const GradingSpec& spec) {
  GradedBasis b;
  b.modulus = spec.modulus;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Monomial m = alg.basis()[i];
    b.labels.push_back(label_of(m, spec.p, spec.s));
    b.vectors.push_back(alg.basis_element(i));
    b.degrees.push_back(spec.degree(m));
    b.scalars.push_back(alg.field().one());
  }
  sort_basis(b);
  return b;
}

std::map<std::int64_t, std::size_t> degree_histogram(const GradedBasis& basis) {
  std::map<std::int64_t, std::size_t> h;
  for (auto d : basis.degrees) ++h[d];
  return h;
}

std::vector<GradingViolation> check_graded(const BracketFn& bracket, const GradedBasis& basis, Exec exec) {
  if (basis.size() == 0) return {};
  const Field& f = basis.vectors.front().field();
  const BasisCoordinates coords(f, basis.vectors);
  const std::size_t n = basis.size();
  return par::collect_rows<GradingViolation>(n, exec, [&](std::size_t r, std::vector<GradingViolation>& out) {
    for (std::size_t c = r; c < n; ++c) {
      const auto w = bracket(basis.vectors[r], basis.vectors[c]);
      const std::int64_t expected = mod_n(basis.degrees[r] + basis.degrees[c], basis.modulus);
      for (const auto& [t, coeff] : coords.expand(f, w)) {
        if (basis.degrees[t] == expected) continue;
        out.push_back({basis.labels[r], basis.labels[c], basis.labels[t], expected, basis.degrees[t], coeff.to_string()});
      }
    }
  });
}

std::vector<GradingViolation> check_graded(const AlgebraDescriptor& alg, const GradedBasis& basis, Exec exec) {
  return check_graded([&alg](const AlgebraElement& u, const AlgebraElement& v) { return alg.bracket(u, v); }, basis,
                      exec);
}

std::size_t EigenDecomposition::total_dim() const {
  std::size_t n = 0;
  for (const auto& s : spaces) n += s.size();
  return n;
}

EigenDecomposition eigen_decompose(const la::Matrix& d, const FieldElement& lambda) {
  const Field& f = d.field();
  const std::uint32_t p = f.characteristic();
  if (lambda.is_zero()) throw Error("eigen_decompose: lambda must be nonzero");
  const la::Matrix dp = d.pow(p);
  const la::Matrix dp2 = dp.pow(p);
  const FieldElement factor = lambda.pow(std::uint64_t{p - 1} * p);
  if (!(dp2 == factor * dp)) throw Error("hypothesis D^{p^2} = lambda^{(p-1)p} D^p fails");
  EigenDecomposition out;
  out.lambda = lambda;
  const FieldElement lp = lambda.pow(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    auto space = la::eigenspace(dp, f.from_int(a) * lp);
    if (space.empty()) continue;
    out.labels.push_back(a);
    out.spaces.push_back(std::move(space));
  }
  if (out.total_dim() != d.rows()) throw Error("eigen_decompose: eigenspaces of D^p do not fill the space");
  return out;
}

EigenDecomposition eigen_decompose(const DerivationOperator& d, const FieldElement& lambda) {
  return eigen_decompose(d.matrix(), lambda);
}

la::Vec laguerre_apply(const FieldElement& alpha, const la::Matrix& d, la::Vec v) {
  const Field& f = d.field();
  const std::uint32_t p = f.characteristic();
  la::Vec acc = la::zero_vec(f, v.size());
  FieldElement kfact = f.one();
  const FieldElement upper = alpha + f.from_int(p - 1);
  for (std::uint32_t k = 0; k < p; ++k) {
    if (k > 0) {
      v = d.apply(v);
      kfact *= f.from_int(k);
    }
    FieldElement c = ff::falling_binomial(upper, p - 1 - k) / kfact;
    if (k % 2 == 1) c = -c;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
  }
  return acc;
}

AlgebraElement laguerre_apply(const FieldElement& alpha, const DerivationOperator& d, const AlgebraElement& v) {
  const auto& alg = d.algebra();
  return alg.from_coords(laguerre_apply(alpha, d.matrix(), alg.to_coords(v)));
}

la::Vec truncated_exp_apply(const la::Matrix& d, la::Vec v) {
  const Field& f = d.field();
  la::Vec acc = v;
  FieldElement kfact = f.one();
  for (std::uint32_t k = 1; k < f.characteristic(); ++k) {
    v = d.apply(v);
    kfact *= f.from_int(k);
    const FieldElement c = kfact.inv();
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
  }
  return acc;
}

GradedBasis switch_grading(const AlgebraDescriptor& alg, const GradedBasis& graded, const DerivationOperator& d,
                           const SwitchConfig& cfg) {
  const Field& f = alg.field();
  const std::uint32_t p = f.characteristic();
  const std::int64_t n_mod = graded.modulus;
  if (n_mod <= 0 || n_mod % p != 0) throw Error("hypothesis m | pd fails: grading modulus is not divisible by p");
  const std::int64_t d_deg = n_mod / p;
  if (graded.size() != alg.dim()) throw Error("graded basis does not match the algebra dimension");

  const BasisCoordinates coords(f, graded.vectors);
  for (std::size_t i = 0; i < graded.size(); ++i) {
    const std::int64_t expected = mod_n(graded.degrees[i] + d_deg, n_mod);
    for (const auto& [t, c] : coords.expand(f, d.apply(graded.vectors[i])))
      if (graded.degrees[t] != expected) throw Error("hypothesis fails: D is not graded of degree N/p");
  }

  GradedBasis out;
  out.modulus = n_mod;
  out.labels = graded.labels;
  out.degrees = graded.degrees;
  out.scalars.assign(graded.size(), f.one());

  if (d.power(p).is_zero()) {
    for (const auto& v : graded.vectors) out.vectors.push_back(alg.from_coords(truncated_exp_apply(d.matrix(), alg.to_coords(v))));
    return out;
  }

  if (!cfg.sigma.has_field() || cfg.sigma.is_zero()) throw Error("switch_grading: sigma must be nonzero");
  const FieldElement lambda = cfg.lambda();
  const la::Matrix scaled = lambda * d.matrix();
  const EigenDecomposition eig = eigen_decompose(scaled, lambda);
  if (!(cfg.pi.pow(p) - cfg.pi == lambda.pow(p))) throw Error("hypothesis pi^p - pi = lambda^p fails");

  std::vector<la::Vec> columns;
  std::vector<std::uint32_t> column_label;
  for (std::size_t b = 0; b < eig.labels.size(); ++b)
    for (const auto& v : eig.spaces[b]) {
      columns.push_back(v);
      column_label.push_back(eig.labels[b]);
    }
  auto pinv = la::inverse(la::Matrix::from_columns(f, alg.dim(), columns));
  if (!pinv) throw Error("switch_grading: eigenvectors are dependent");

  for (const auto& v : graded.vectors) {
    const la::Vec c = pinv->apply(alg.to_coords(v));
    la::Vec result = la::zero_vec(f, alg.dim());
    for (std::size_t b = 0; b < eig.labels.size(); ++b) {
      la::Vec component = la::zero_vec(f, alg.dim());
      bool any = false;
      for (std::size_t col = 0; col < columns.size(); ++col) {
        if (column_label[col] != eig.labels[b] || c[col].is_zero()) continue;
        any = true;
        for (std::size_t r = 0; r < component.size(); ++r) component[r] += c[col] * columns[col][r];
      }
      if (!any) continue;
      const FieldElement alpha = f.from_int(eig.labels[b]) * cfg.pi;
      const la::Vec mapped = laguerre_apply(alpha, scaled, std::move(component));
      for (std::size_t r = 0; r < result.size(); ++r) result[r] += mapped[r];
    }
    out.vectors.push_back(alg.from_coords(result));
  }
  return out;
}

GradingSpec closed_basis_grading(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg) {
  if (kind == GradingCase::BigField) return GradingSpec::big_field(alg.heights(), cfg.s);
  if (kind == GradingCase::PrimeField) {
    auto pi = cfg.pi.prime_value();
    if (!pi) throw Error("prime-field case requires pi in the prime field");
    return GradingSpec::prime_field(alg.heights(), cfg.s, *pi);
  }
  throw Error("closed-form bases exist only for the big-field and prime-field cases");
}

GradedBasis build_closed_basis(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg,
                               bool allow_zero_pi) {
  const Field& f = alg.field();
  const Heights& h = alg.heights();
  const std::uint32_t p = h.p;
  const unsigned s = cfg.s;
  if (h.n1 != s + 1) throw Error("closed-form basis requires n1 = s + 1");
  const int q = static_cast<int>(h.q());
  const int ps = static_cast<int>(dp::ipow(p, s));

  FieldElement sigma = f.one();
  if (kind == GradingCase::BigField) {
    if (alg.family() != lie::Family::AlbertZassenhaus) throw Error("big-field case needs the Albert-Zassenhaus algebra");
    sigma = cfg.sigma;
    if (sigma.is_zero()) throw Error("big-field case needs sigma != 0");
    if (!((cfg.pi.pow(p) - cfg.pi) * sigma.pow(p) == f.one())) throw Error("big-field case needs (pi^p - pi) sigma^p = 1");
  } else if (kind == GradingCase::PrimeField) {
    if (alg.family() != lie::Family::GradedHamiltonian) throw Error("prime-field case needs the graded Hamiltonian algebra");
    auto pi = cfg.pi.prime_value();
    if (!pi) throw Error("prime-field case requires pi in the prime field");
    if (*pi == 0 && !allow_zero_pi) throw Error("prime-field case requires pi != 0");
  }
  const GradingSpec spec = closed_basis_grading(kind, alg, cfg);

  GradedBasis b;
  b.modulus = spec.modulus;
  for (int j = -1; j < q - 1; ++j)
    for (int k = -1; k < ps - 1; ++k)
      for (int a = 0; a < static_cast<int>(p); ++a) {
        const Label l{j, k, a};
        const auto tail = AlgebraElement::monomial(f, h, {static_cast<std::uint32_t>(k + 1), static_cast<std::uint32_t>(j + 1)});
        if (kind == GradingCase::BigField) {
          const FieldElement alpha = -f.from_int(j) * cfg.pi + f.from_int(a);
          const FieldElement denom = ff::falling_binomial(-f.from_int(j) * cfg.pi + f.from_int(p - 1), p - 1);
          if (denom.is_zero()) throw Error("c_{j,a} is undefined: C(-j pi + p - 1, p - 1) = 0 at j = " + std::to_string(j));
          b.labels.push_back(l);
          b.vectors.push_back(dp::generalized_power(h, sigma, alpha, s) * tail);
          b.scalars.push_back(factorial(f, a) * sigma.pow(a) * ff::falling_binomial(alpha, a) / denom);
        } else {
          if ((j == -1 && k == -1 && a == 0) || (j == q - 2 && k == ps - 2 && a == static_cast<int>(p) - 1)) continue;
          AlgebraElement e = dp::generalized_power(h, f.one(), f.from_int(a), s) * tail;
          e.add_term({0, 0}, -e.coefficient({0, 0}));
          b.labels.push_back(l);
          b.vectors.push_back(std::move(e));
          b.scalars.push_back(factorial(f, a));
        }
        b.degrees.push_back(spec.degree(l));
      }
  sort_basis(b);
  for (const auto& v : b.vectors)
    for (const auto& [m, c] : v.terms())
      if (!alg.in_basis(m)) throw std::logic_error("closed-form basis vector leaves the algebra");
  return b;
}

AlgebraElement predicted_product(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg,
                                 const GradedBasis& basis, Label u, Label v) {
  const Field& f = alg.field();
  const std::uint32_t p = f.characteristic();
  const int ps = static_cast<int>(dp::ipow(p, cfg.s));
  auto binom = [&](std::int64_t n, std::int64_t k) { return f.from_int(ff::lucas_binomial(n, k, p)); };
  const int j = u.j, k = u.k, a = u.a, l = v.j, hh = v.k, b = v.a;
  if (k + hh > -2) {
    const FieldElement coeff = binom(k + hh + 1, hh) * binom(j + l + 1, j) - binom(k + hh + 1, k) * binom(j + l + 1, l);
    const Label target{j + l, k + hh, static_cast<int>((a + b) % p)};
    return vector_or_zero(alg, basis, target).scaled(coeff);
  }
  FieldElement coeff = f.zero();
  if (kind == GradingCase::BigField) {
    const FieldElement lhs = -f.from_int(l) * cfg.pi + f.from_int(b);
    const FieldElement rhs = -f.from_int(j) * cfg.pi + f.from_int(a);
    coeff = cfg.sigma * (binom(j + l + 1, j) * lhs - binom(j + l + 1, l) * rhs);
  } else {
    coeff = f.from_int(b) * binom(j + l + 1, j) - f.from_int(a) * binom(j + l + 1, l);
  }
  const Label target{j + l, ps - 2, static_cast<int>((a + b + p - 1) % p)};
  return vector_or_zero(alg, basis, target).scaled(coeff);
}

std::vector<TableViolation> verify_product_tables(GradingCase kind, const AlgebraDescriptor& alg, const SwitchConfig& cfg,
                                                  const GradedBasis& basis, Exec exec) {
  const std::size_t n = basis.size();
  return par::collect_rows<TableViolation>(n, exec, [&](std::size_t r, std::vector<TableViolation>& out) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto actual = alg.bracket(basis.vectors[r], basis.vectors[c]);
      const auto expected = predicted_product(kind, alg, cfg, basis, basis.labels[r], basis.labels[c]);
      if (!(actual == expected)) out.push_back({basis.labels[r], basis.labels[c], expected.to_string(), actual.to_string()});
    }
  });
}

}  // namespace modlie::grading
