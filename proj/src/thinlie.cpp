#include "modlie/thinlie.hpp"

#include <algorithm>
#include <sstream>

namespace modlie::thin {

namespace {

std::vector<la::Vec> coords_of(const lie::AlgebraDescriptor& alg, const std::vector<AlgebraElement>& elems) {
  std::vector<la::Vec> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(alg.to_coords(e));
  return out;
}

std::size_t span_rank(const lie::AlgebraDescriptor& alg, const std::vector<AlgebraElement>& elems) {
  return la::rank(alg.field(), coords_of(alg, elems));
}

bool same_span(const lie::AlgebraDescriptor& alg, const std::vector<AlgebraElement>& a,
               const std::vector<AlgebraElement>& b) {
  if (a.size() != b.size()) return false;
  std::vector<AlgebraElement> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(alg, both) == a.size();
}

// c with a = c w, when a is a multiple of the nonzero element w.
std::optional<FieldElement> ratio(const AlgebraElement& a, const AlgebraElement& w) {
  const auto& [m, wc] = *w.terms().begin();
  const FieldElement c = a.coefficient(m) / wc;
  if (!(a == w.scaled(c))) return std::nullopt;
  return c;
}

const ComponentRecord& component(const std::vector<ComponentRecord>& comps, std::int64_t i) {
  if (i < 1 || static_cast<std::size_t>(i) > comps.size())
    throw Error("component of degree " + std::to_string(i) + " has not been expanded");
  return comps[static_cast<std::size_t>(i - 1)];
}

DiamondRecord anomaly(std::int64_t degree, std::string what) {
  return {degree, DiamondKind::Anomaly, std::nullopt, std::move(what)};
}

std::string expected_text(const DiamondRecord& r) {
  return std::string(kind_name(r.kind)) + "(" + r.type_text() + ")";
}

}  // namespace

LoopConfig make_loop_config(lie::AlgebraPtr alg, grading::GradedBasis basis, std::int64_t max_degree) {
  const auto q = static_cast<int>(alg->heights().q());
  std::optional<AlgebraElement> x, y;
  std::size_t count = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.degrees[i] != 1 % basis.modulus) continue;
    ++count;
    if (basis.labels[i].j == -1) x = basis.vectors[i];
    if (basis.labels[i].j == q - 2) y = basis.vectors[i];
  }
  if (count != 2 || !x || !y) throw Error("degree 1 is not spanned by the expected pair of basis vectors");
  LoopConfig cfg{std::move(alg), std::move(basis), std::move(*x), std::move(*y), max_degree};
  return cfg;
}

std::vector<ComponentRecord> expand_loop(const LoopConfig& cfg, std::int64_t through) {
  const auto& alg = *cfg.alg;
  std::vector<ComponentRecord> comps;
  if (through < 1) return comps;

  auto reduce = [&](std::int64_t degree, const std::vector<AlgebraElement>& gens) {
    ComponentRecord rec{degree, {}};
    std::vector<la::Vec> kept;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      kept.push_back(alg.to_coords(g));
      if (la::rank(alg.field(), kept) == kept.size())
        rec.basis_vectors.push_back(g);
      else
        kept.pop_back();
    }
    return rec;
  };

  comps.push_back(reduce(1, {cfg.X, cfg.Y}));
  for (std::int64_t d = 2; d <= through; ++d) {
    std::vector<AlgebraElement> gens;
    for (const auto& u : comps.back().basis_vectors) {
      gens.push_back(alg.bracket(u, cfg.X));
      gens.push_back(alg.bracket(u, cfg.Y));
    }
    comps.push_back(reduce(d, gens));
  }
  return comps;
}

CheckResult check_covering(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t i,
                           Exec exec) {
  const auto& alg = *cfg.alg;
  const Field& f = alg.field();
  const auto& li = component(comps, i);
  const std::size_t target = component(comps, i + 1).dim();
  if (li.dim() == 0) return {};
  if (li.dim() > 2) return {false, "degree " + std::to_string(i) + ": dimension " + std::to_string(li.dim()) + " exceeds 2"};

  std::vector<AlgebraElement> reps;
  if (li.dim() == 1) {
    reps.push_back(li.basis_vectors[0]);
  } else {
    reps.push_back(li.basis_vectors[1]);
    for (std::uint32_t c = 0; c < f.order(); ++c)
      reps.push_back(li.basis_vectors[0] + li.basis_vectors[1].scaled(f.from_code(c)));
  }

  auto failures = par::collect_rows<std::string>(reps.size(), exec, [&](std::size_t r, std::vector<std::string>& out) {
    const auto ux = alg.bracket(reps[r], cfg.X);
    const auto uy = alg.bracket(reps[r], cfg.Y);
    const std::size_t rk = span_rank(alg, {ux, uy});
    if (target > 0 && rk == target) return;
    std::ostringstream os;
    os << "degree " << i << ": u = " << reps[r].to_string() << ", [u,X] = " << ux.to_string()
       << ", [u,Y] = " << uy.to_string() << ", dim L_" << i + 1 << " = " << target;
    out.push_back(os.str());
  });
  if (failures.empty()) return {};
  return {false, failures.front()};
}

std::string_view kind_name(DiamondKind k) {
  switch (k) {
    case DiamondKind::Genuine:
      return "genuine";
    case DiamondKind::Fake:
      return "fake";
    case DiamondKind::Anomaly:
      return "anomaly";
  }
  return "?";
}

std::string DiamondRecord::type_text() const {
  if (kind == DiamondKind::Anomaly) return description;
  return type ? type->to_string() : "inf";
}

bool is_diamond_slot(std::int64_t degree, std::int64_t q) { return degree > 1 && (degree - 1) % (q - 1) == 0; }

std::optional<DiamondRecord> classify_component(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps,
                                                std::int64_t i, std::int64_t q) {
  const auto& alg = *cfg.alg;
  const Field& f = alg.field();
  const std::size_t dim = component(comps, i).dim();
  if (!is_diamond_slot(i, q)) {
    if (dim <= 1) return std::nullopt;
    return anomaly(i, "component of dimension " + std::to_string(dim) + " away from the diamond slots");
  }
  const auto& prev = component(comps, i - 1);
  const auto& next = component(comps, i + 1);
  if (prev.dim() != 1) return anomaly(i, "preceding component has dimension " + std::to_string(prev.dim()));

  const auto& V = prev.basis_vectors[0];
  const auto vx = alg.bracket(V, cfg.X);
  const auto vy = alg.bracket(V, cfg.Y);
  const auto vxx = alg.bracket(vx, cfg.X);
  const auto vyy = alg.bracket(vy, cfg.Y);
  const auto vxy = alg.bracket(vx, cfg.Y);
  const auto vyx = alg.bracket(vy, cfg.X);

  if (dim == 1) {
    if (vy.is_zero()) return DiamondRecord{i, DiamondKind::Fake, f.one(), {}};
    if (vxy.is_zero() && vxx.is_zero()) return DiamondRecord{i, DiamondKind::Fake, f.zero(), {}};
    return anomaly(i, "one-dimensional slot is not a fake diamond");
  }
  if (dim != 2) return anomaly(i, "slot component has dimension " + std::to_string(dim));
  if (!vxx.is_zero() || !vyy.is_zero()) return anomaly(i, "[V,X,X] or [V,Y,Y] is nonzero");
  if (next.dim() != 1) return anomaly(i, "component after the diamond has dimension " + std::to_string(next.dim()));

  const auto alpha = ratio(vxy, next.basis_vectors[0]);
  const auto beta = ratio(vyx, next.basis_vectors[0]);
  if (!alpha || !beta) return anomaly(i, "[V,X,Y] and [V,Y,X] are not proportional");
  const FieldElement sum = *alpha + *beta;
  if (sum.is_zero()) {
    if (alpha->is_zero()) return anomaly(i, "[V,X,Y] = 0 = [V,Y,X]");
    return DiamondRecord{i, DiamondKind::Genuine, std::nullopt, {}};
  }
  const FieldElement mu = *alpha / sum;
  if (mu.is_zero() || mu.is_one()) return anomaly(i, "genuine diamond of type " + mu.to_string());
  return DiamondRecord{i, DiamondKind::Genuine, mu, {}};
}

bool Centralizer::is_span_of_Y() const {
  return basis.size() == 1 && basis[0].first.is_zero() && !basis[0].second.is_zero();
}

std::vector<Centralizer> centralizer_chain(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps,
                                           std::int64_t bound, Exec exec) {
  const auto& alg = *cfg.alg;
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  const std::size_t upto = std::min<std::size_t>(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)), comps.size());
  return par::collect_rows<Centralizer>(upto, exec, [&](std::size_t r, std::vector<Centralizer>& out) {
    const auto& li = comps[r];
    la::Matrix m(f, std::max<std::size_t>(li.dim(), 1) * n, 2);
    for (std::size_t b = 0; b < li.dim(); ++b) {
      const auto ux = alg.to_coords(alg.bracket(li.basis_vectors[b], cfg.X));
      const auto uy = alg.to_coords(alg.bracket(li.basis_vectors[b], cfg.Y));
      for (std::size_t t = 0; t < n; ++t) {
        m(b * n + t, 0) = ux[t];
        m(b * n + t, 1) = uy[t];
      }
    }
    Centralizer c{li.degree, {}};
    for (const auto& v : la::kernel(m)) c.basis.emplace_back(v[0], v[1]);
    out.push_back(std::move(c));
  });
}

CheckResult periodicity_check(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t period) {
  const auto reach = static_cast<std::int64_t>(comps.size());
  if (reach <= period) return {false, "expansion stops before degree " + std::to_string(period + 1)};
  for (std::int64_t i = 1; i <= period && i + period <= reach; ++i) {
    const auto& a = component(comps, i);
    const auto& b = component(comps, i + period);
    if (!same_span(*cfg.alg, a.basis_vectors, b.basis_vectors))
      return {false, "L_" + std::to_string(i + period) + " differs from L_" + std::to_string(i)};
  }
  return {};
}

CheckResult dimension_accounting(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t period) {
  if (static_cast<std::int64_t>(comps.size()) < period)
    return {false, "expansion stops before degree " + std::to_string(period)};
  std::size_t total = 0;
  for (std::int64_t i = 1; i <= period; ++i) total += component(comps, i).dim();
  if (total == cfg.alg->dim()) return {};
  return {false, "sum of dimensions over one period is " + std::to_string(total) + ", algebra has dimension " +
                     std::to_string(cfg.alg->dim())};
}

CheckResult normalization(const LoopConfig& cfg, const std::vector<ComponentRecord>& comps, std::int64_t q) {
  const auto& alg = *cfg.alg;
  const auto& prev = component(comps, q - 1);
  if (prev.dim() != 1) return {false, "L_" + std::to_string(q - 1) + " is not one-dimensional"};
  const auto& V = prev.basis_vectors[0];
  const auto vx = alg.bracket(V, cfg.X);
  const auto vy = alg.bracket(V, cfg.Y);
  if (!alg.bracket(vx, cfg.X).is_zero()) return {false, "[V,X,X] != 0"};
  if (!alg.bracket(vy, cfg.Y).is_zero()) return {false, "[V,Y,Y] != 0"};
  const auto vxy = alg.bracket(vx, cfg.Y);
  const auto vyx = alg.bracket(vy, cfg.X);
  if (!(vyx == vxy.scaled(alg.field().from_int(-2))))
    return {false, "[V,Y,X] = " + vyx.to_string() + " but [V,X,Y] = " + vxy.to_string()};
  return {};
}

bool ThinReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.pass || kv.second.informational; });
}

std::vector<std::string> verify_pattern(const ThinReport& report, const PatternParams& params) {
  std::vector<std::string> issues;
  const std::int64_t q = params.q;
  const Field& f = params.increment.field();
  std::map<std::int64_t, const DiamondRecord*> by_degree;
  for (const auto& d : report.diamonds) by_degree[d.degree] = &d;

  for (const auto& [deg, rec] : by_degree)
    if (!is_diamond_slot(deg, q)) issues.push_back("degree " + std::to_string(deg) + ": unexpected " + expected_text(*rec));

  for (std::int64_t t = 1; t * (q - 1) + 1 <= report.params.max_degree; ++t) {
    const std::int64_t deg = t * (q - 1) + 1;
    DiamondRecord want{deg, DiamondKind::Genuine, std::nullopt, {}};
    if ((t - 1) % params.finite_period == 0) {
      const std::int64_t m = (t - 1) / params.finite_period;
      const FieldElement value = f.from_int(-1) + f.from_int(m) * params.increment;
      if (value.is_zero() || value.is_one())
        want = {deg, DiamondKind::Fake, value, {}};
      else
        want.type = value;
    }
    auto it = by_degree.find(deg);
    if (it == by_degree.end()) {
      issues.push_back("degree " + std::to_string(deg) + ": expected " + expected_text(want) + ", found no diamond");
    } else if (!(*it->second == want)) {
      issues.push_back("degree " + std::to_string(deg) + ": expected " + expected_text(want) + ", found " +
                       expected_text(*it->second));
    }
  }
  return issues;
}

bool second_chain_applies(std::uint32_t p, std::int64_t q) { return p > 5 || (p > 3 && q != 5); }

ThinReport analyze(const LoopConfig& cfg, ReportParams params, const std::optional<PatternParams>& pattern, Exec exec) {
  const std::int64_t max_degree = cfg.max_degree;
  const std::int64_t q = params.q;
  const std::int64_t period = params.N;
  const auto comps = expand_loop(cfg, max_degree + 1);

  ThinReport report;
  params.max_degree = max_degree;
  report.params = std::move(params);
  for (std::int64_t i = 1; i <= max_degree; ++i) report.components.push_back({i, component(comps, i).dim()});

  {
    CheckResult thin;
    for (const auto& c : report.components)
      if (c.dim < 1 || c.dim > 2) {
        thin = {false, "degree " + std::to_string(c.degree) + " has dimension " + std::to_string(c.dim)};
        break;
      }
    report.checks["thinness"] = thin;
  }
  {
    CheckResult cover;
    for (std::int64_t i = 1; i <= max_degree && cover.pass; ++i) cover = check_covering(cfg, comps, i, exec);
    report.checks["covering"] = cover;
  }

  CheckResult well_formed;
  for (std::int64_t i = 2; i <= max_degree; ++i) {
    auto rec = classify_component(cfg, comps, i, q);
    if (!rec) continue;
    if (rec->kind == DiamondKind::Anomaly && well_formed.pass)
      well_formed = {false, "degree " + std::to_string(i) + ": " + rec->description};
    report.diamonds.push_back(std::move(*rec));
  }
  report.checks["diamonds_well_formed"] = well_formed;

  if (pattern) {
    const auto issues = verify_pattern(report, *pattern);
    report.checks["pattern"] = issues.empty() ? CheckResult{} : CheckResult{false, issues.front()};
  } else {
    report.checks["pattern"] = {true, "no expected pattern for this configuration", true};
  }

  const auto chain = centralizer_chain(cfg, comps, std::min(max_degree, 2 * q - 3), exec);
  auto chain_check = [&](std::int64_t lo, std::int64_t hi) {
    CheckResult r;
    if (hi > max_degree) return CheckResult{false, "expansion stops before degree " + std::to_string(hi)};
    for (const auto& c : chain)
      if (c.degree >= lo && c.degree <= hi && !c.is_span_of_Y()) {
        r = {false, "centralizer of L_" + std::to_string(c.degree) + " in L_1 has dimension " +
                        std::to_string(c.basis.size()) + " and is not <Y>"};
        break;
      }
    return r;
  };
  report.checks["centralizer_chain_first"] = chain_check(2, q - 2);
  auto second = chain_check(q + 1, 2 * q - 3);
  second.informational = !second_chain_applies(report.params.p, q);
  report.checks["centralizer_chain_second"] = second;

  if (max_degree >= 2 * period) {
    report.checks["periodicity"] = periodicity_check(cfg, comps, period);
  } else {
    report.checks["periodicity"] = {true, "max degree below two periods", true};
  }
  if (max_degree >= period) {
    report.checks["dimension_accounting"] = dimension_accounting(cfg, comps, period);
  } else {
    report.checks["dimension_accounting"] = {true, "max degree below one period", true};
  }
  report.checks["normalization"] =
      max_degree >= q + 1 ? normalization(cfg, comps, q) : CheckResult{true, "max degree below q + 1", true};
  return report;
}

}  // namespace modlie::thin
