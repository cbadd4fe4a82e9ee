#include "modlie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "modlie/kernels.hpp"
#include "modlie/oracle.hpp"
#include "modlie/report.hpp"
#include "modlie/thinlie.hpp"

namespace modlie::cli {

using nlohmann::json;
using thin::CheckResult;

namespace {

// Settings as supplied, before defaults and validation.
struct Raw {
  std::optional<std::string> command, grading_case, family, field, pi, sigma, format;
  std::optional<std::int64_t> p, n, s, n1, max_degree;
  std::optional<std::uint64_t> seed;
  bool allow_negative_control = false;
};

template <class T>
void take(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config key '") + key + "': " + e.what());
  }
}

Raw read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  Raw r;
  take(j, "command", r.command);
  take(j, "case", r.grading_case);
  take(j, "family", r.family);
  take(j, "field", r.field);
  take(j, "pi", r.pi);
  take(j, "sigma", r.sigma);
  take(j, "format", r.format);
  take(j, "p", r.p);
  take(j, "n", r.n);
  take(j, "s", r.s);
  take(j, "n1", r.n1);
  take(j, "max_degree", r.max_degree);
  take(j, "seed", r.seed);
  r.allow_negative_control = j.value("allow_negative_control", false);
  return r;
}

Command parse_command(const std::string& s) {
  if (s == "verify") return Command::Verify;
  if (s == "switch") return Command::Switch;
  if (s == "analyze") return Command::Analyze;
  if (s == "oracle") return Command::Oracle;
  throw UsageError("unknown command '" + s + "' (expected verify, switch, analyze or oracle)");
}

Case parse_case(const std::string& s) {
  if (s == "preswitch") return Case::Preswitch;
  if (s == "big-field") return Case::BigField;
  if (s == "prime-field") return Case::PrimeField;
  throw UsageError("unknown case '" + s + "' (expected preswitch, big-field or prime-field)");
}

unsigned small_natural(std::int64_t v, const char* what, std::int64_t lo) {
  if (v < lo || v > 64) throw UsageError(std::string("--") + what + " out of range");
  return static_cast<unsigned>(v);
}

// Default big-field coefficient field F_p[t]/(t^p - t - 1).
std::string artin_schreier_field(std::uint32_t p) {
  std::string spec = std::to_string(p) + "^" + std::to_string(p) + ":" + std::to_string(p - 1) + "," + std::to_string(p - 1);
  for (std::uint32_t i = 2; i < p; ++i) spec += ",0";
  return spec + ",1";
}

ff::FieldElement parse_element(const ff::Field& f, const std::string& text, const char* what) {
  try {
    return f.parse_element(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--") + what + ": " + e.what());
  }
}

RunConfig resolve(const Raw& raw) {
  RunConfig cfg;
  if (!raw.command) throw UsageError("missing command (verify, switch, analyze or oracle)");
  cfg.command = parse_command(*raw.command);
  if (!raw.p) throw UsageError("missing --p");
  if (*raw.p < 3 || *raw.p > 1000 || !ff::is_prime(static_cast<std::uint64_t>(*raw.p)))
    throw UsageError("--p must be an odd prime");
  cfg.p = static_cast<std::uint32_t>(*raw.p);
  cfg.grading_case = parse_case(raw.grading_case.value_or("preswitch"));
  cfg.n = small_natural(raw.n.value_or(1), "n", 1);
  cfg.s = small_natural(raw.s.value_or(1), "s", 0);
  cfg.n1 = small_natural(raw.n1.value_or(cfg.s + 1), "n1", 1);

  const lie::Family implied =
      cfg.grading_case == Case::PrimeField ? lie::Family::GradedHamiltonian : lie::Family::AlbertZassenhaus;
  try {
    cfg.family = raw.family ? lie::parse_family(*raw.family) : implied;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (cfg.grading_case != Case::Preswitch) {
    if (cfg.family != implied)
      throw UsageError(std::string("case ") + std::string(case_name(cfg.grading_case)) + " requires the " +
                       std::string(lie::family_name(implied)) + " family");
    if (cfg.n1 != cfg.s + 1) throw UsageError("this case requires n1 = s + 1");
  }
  if (cfg.grading_case == Case::Preswitch && cfg.family == lie::Family::GradedHamiltonian && cfg.n1 != cfg.s + 1)
    throw UsageError("the graded Hamiltonian pre-switch grading requires n1 = s + 1");
  try {
    (void)dp::Heights(cfg.p, cfg.n1, cfg.n);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const std::string field_spec =
      raw.field.value_or(cfg.grading_case == Case::BigField ? artin_schreier_field(cfg.p) : std::to_string(cfg.p) + "^1:0,1");
  try {
    cfg.field = &ff::Field::parse(field_spec);
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
  const ff::Field& f = *cfg.field;
  if (f.characteristic() != cfg.p) throw UsageError("--field has characteristic different from --p");

  if (cfg.grading_case == Case::BigField) {
    if (raw.pi && raw.sigma) {
      cfg.pi = parse_element(f, *raw.pi, "pi");
      cfg.sigma = parse_element(f, *raw.sigma, "sigma");
    } else if (raw.sigma) {
      cfg.sigma = parse_element(f, *raw.sigma, "sigma");
      if (cfg.sigma.is_zero()) throw UsageError("--sigma must be nonzero");
      auto pi = ff::solve_artin_schreier(cfg.sigma.pow(cfg.p).inv());
      if (!pi) throw UsageError("pi^p - pi = sigma^-p has no solution in the field");
      cfg.pi = *pi;
    } else {
      cfg.pi = raw.pi ? parse_element(f, *raw.pi, "pi") : (f.degree() == cfg.p ? f.generator() : f.zero());
      const ff::FieldElement c = cfg.pi.pow(cfg.p) - cfg.pi;
      if (c.is_zero()) throw UsageError("big-field case needs pi^p != pi; pass --pi or --sigma");
      // sigma^p = 1 / (pi^p - pi); the Frobenius inverse is x -> x^(p^(m-1)).
      cfg.sigma = c.inv().pow(dp::ipow(cfg.p, f.degree() - 1));
    }
    if (cfg.sigma.is_zero() || !((cfg.pi.pow(cfg.p) - cfg.pi) * cfg.sigma.pow(cfg.p) == f.one()))
      throw UsageError("big-field case needs (pi^p - pi) sigma^p = 1");
  } else {
    cfg.sigma = raw.sigma ? parse_element(f, *raw.sigma, "sigma") : f.one();
    const bool uses_pi = cfg.grading_case == Case::PrimeField || cfg.family == lie::Family::GradedHamiltonian;
    cfg.pi = raw.pi ? parse_element(f, *raw.pi, "pi") : (uses_pi ? f.one() : f.zero());
    if (uses_pi && !cfg.pi.prime_value()) throw UsageError("--pi must lie in the prime field for this case");
    if (cfg.grading_case == Case::PrimeField && cfg.pi.is_zero() && !raw.allow_negative_control)
      throw UsageError("--pi 0 is the negative control; pass --allow-negative-control to run it");
  }
  cfg.allow_negative_control = raw.allow_negative_control;

  cfg.q = static_cast<std::int64_t>(dp::ipow(cfg.p, cfg.n));
  const bool az_pre = cfg.grading_case == Case::Preswitch && cfg.family == lie::Family::AlbertZassenhaus;
  cfg.N = static_cast<std::int64_t>(dp::ipow(cfg.p, az_pre ? cfg.n1 : cfg.s + 1)) * (cfg.q - 1);
  cfg.max_degree = raw.max_degree.value_or(3 * cfg.N);
  if (cfg.max_degree < 1) throw UsageError("--max-degree must be positive");
  cfg.format = raw.format.value_or("json");
  if (cfg.format != "json" && cfg.format != "text") throw UsageError("--format must be json or text");
  cfg.seed = raw.seed.value_or(cfg.seed);
  return cfg;
}

// ---------------------------------------------------------------------------

struct Checks {
  std::map<std::string, CheckResult> results;

  void add(const std::string& name, CheckResult r) { results[name] = std::move(r); }
  void add(const std::string& name, bool pass, const std::string& why = {}) {
    results[name] = pass ? CheckResult{} : CheckResult{false, why};
  }
  bool ok() const {
    for (const auto& [k, r] : results)
      if (!r.pass && !r.informational) return false;
    return true;
  }
  json to_json() const {
    json out = json::object();
    for (const auto& [name, c] : results) {
      json e = {{"pass", c.pass}};
      if (c.counterexample) e["counterexample"] = *c.counterexample;
      if (c.informational) e["informational"] = true;
      out[name] = e;
    }
    return out;
  }
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& [name, c] : results) {
      os << name << ": " << (c.pass ? "PASS" : "FAIL");
      if (c.informational) os << " (informational)";
      if (c.counterexample) os << " - " << *c.counterexample;
      os << '\n';
    }
    return os.str();
  }
};

std::string mono_text(dp::Monomial m) { return "x^(" + std::to_string(m.i) + ")y^(" + std::to_string(m.j) + ")"; }

grading::GradingCase closed_case(Case c) {
  return c == Case::BigField ? grading::GradingCase::BigField : grading::GradingCase::PrimeField;
}

grading::SwitchConfig switch_config(const RunConfig& cfg) { return {cfg.sigma, cfg.pi, cfg.s}; }

grading::GradingSpec preswitch_spec(const RunConfig& cfg) {
  if (cfg.family == lie::Family::AlbertZassenhaus) return grading::GradingSpec::preswitch_az(cfg.heights());
  return grading::GradingSpec::preswitch_gh(cfg.heights(), cfg.s, *cfg.pi.prime_value());
}

grading::GradedBasis working_basis(const RunConfig& cfg, const lie::AlgebraDescriptor& alg) {
  if (cfg.grading_case == Case::Preswitch) return grading::preswitch_basis(alg, preswitch_spec(cfg));
  return grading::build_closed_basis(closed_case(cfg.grading_case), alg, switch_config(cfg), cfg.allow_negative_control);
}

RunResult finish(const RunConfig& cfg, const Checks& checks, json extra, const std::string& text_prefix = {}) {
  RunResult r;
  r.exit_code = checks.ok() ? 0 : 1;
  if (cfg.format == "json") {
    json out = {{"command", command_name(cfg.command)}, {"params", echo(cfg)}, {"checks", checks.to_json()}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    r.output = out.dump(2) + "\n";
  } else {
    r.output = text_prefix + checks.to_text();
  }
  return r;
}

RunResult run_verify(const RunConfig& cfg) {
  Checks checks;
  const auto alg = lie::make_algebra(cfg.family, *cfg.field, cfg.heights());
  const auto& h = alg->heights();
  const std::uint64_t full = h.monomial_count();
  const std::uint64_t expected_dim = cfg.family == lie::Family::GradedHamiltonian ? full - 2 : full;
  checks.add("dimension", alg->dim() == expected_dim,
             "dimension " + std::to_string(alg->dim()) + ", expected " + std::to_string(expected_dim));

  const auto axioms = kernels::check_axioms(*alg);
  if (axioms.ok()) {
    checks.add("axioms", true);
  } else {
    const auto& v = axioms.violations.front();
    const char* kind = v.kind == kernels::AxiomViolation::Kind::Jacobi ? "Jacobi" : "anticommutativity";
    checks.add("axioms", false,
               std::string(kind) + " fails at " + mono_text(alg->basis()[v.a]) + ", " + mono_text(alg->basis()[v.b]) +
                   (v.kind == kernels::AxiomViolation::Kind::Jacobi ? ", " + mono_text(alg->basis()[v.c]) : ""));
  }

  const bool closed = h.n1 == cfg.s + 1;
  const auto d = lie::build_derivation(alg, cfg.s, closed ? lie::Realization::ClosedForm : lie::Realization::IteratedAd);
  const auto leib = kernels::check_leibniz(d);
  checks.add("leibniz", leib.empty(),
             leib.empty() ? "" : "at " + mono_text(alg->basis()[leib[0].a]) + ", " + mono_text(alg->basis()[leib[0].b]));

  if (closed) {
    const auto dp = d.power(cfg.p);
    if (cfg.family == lie::Family::GradedHamiltonian) {
      checks.add("d_power_p_zero", dp.is_zero(), "D^p != 0");
    } else {
      checks.add("d_power_p2_equals_p", dp.pow(cfg.p) == dp, "D^{p^2} != D^p");
      std::string bad;
      for (std::size_t c = 0; c < alg->dim() && bad.empty(); ++c) {
        const auto m = alg->basis()[c];
        auto col = dp.column(c);
        auto want = la::zero_vec(*cfg.field, alg->dim());
        want[c] = cfg.field->from_int(1 - static_cast<std::int64_t>(m.j));
        if (!(col == want)) bad = "at " + mono_text(m);
      }
      checks.add("d_power_p_eigenvalues", bad.empty(), bad);
    }
  }

  if (cfg.family == lie::Family::AlbertZassenhaus || closed) {
    const auto viol = grading::check_graded(*alg, grading::preswitch_basis(*alg, preswitch_spec(cfg)));
    checks.add("preswitch_graded", viol.empty(),
               viol.empty() ? "" : "{" + viol[0].u.to_string() + "," + viol[0].v.to_string() + "} leaks into " + viol[0].stray.to_string());
  }
  if (cfg.grading_case != Case::Preswitch) {
    const auto viol = grading::check_graded(*alg, working_basis(cfg, *alg));
    checks.add("closed_basis_graded", viol.empty(),
               viol.empty() ? "" : "{" + viol[0].u.to_string() + "," + viol[0].v.to_string() + "} leaks into " + viol[0].stray.to_string());
  }
  return finish(cfg, checks, {{"dim", alg->dim()}}, "dim " + std::to_string(alg->dim()) + "\n");
}

RunResult run_switch(const RunConfig& cfg) {
  if (cfg.grading_case == Case::Preswitch) throw UsageError("switch needs --case big-field or prime-field");
  Checks checks;
  const auto alg = lie::make_algebra(cfg.family, *cfg.field, cfg.heights());
  const auto kind = closed_case(cfg.grading_case);
  const auto scfg = switch_config(cfg);
  const auto closed = grading::build_closed_basis(kind, *alg, scfg, cfg.allow_negative_control);

  try {
    const auto d = lie::build_derivation(alg, cfg.s);
    const auto pre = grading::preswitch_basis(*alg, preswitch_spec(cfg));
    const auto switched = grading::switch_grading(*alg, pre, d, scfg);
    const auto viol = grading::check_graded(*alg, switched);
    checks.add("switched_graded", viol.empty(), viol.empty() ? "" : "{" + viol[0].u.to_string() + "," + viol[0].v.to_string() + "}");
    std::string bad;
    for (std::size_t i = 0; i < closed.size() && bad.empty(); ++i) {
      const auto idx = switched.find(closed.labels[i]);
      if (!idx || !(switched.vectors[*idx].scaled(closed.scalars[i]) == closed.vectors[i]))
        bad = "label " + closed.labels[i].to_string();
    }
    checks.add("closed_equals_switched", bad.empty(), bad);
  } catch (const Error& e) {
    checks.add("switch_hypotheses", false, e.what());
  }

  const auto viol = grading::check_graded(*alg, closed);
  checks.add("closed_basis_graded", viol.empty(), viol.empty() ? "" : "{" + viol[0].u.to_string() + "," + viol[0].v.to_string() + "}");
  const auto tables = grading::verify_product_tables(kind, *alg, scfg, closed);
  checks.add("product_tables", tables.empty(),
             tables.empty() ? ""
                            : "{" + tables[0].u.to_string() + "," + tables[0].v.to_string() + "}: expected " + tables[0].expected +
                                  ", got " + tables[0].actual);
  const std::string text = closed.serialize();
  return finish(cfg, checks, {{"basis", text}}, text);
}

RunResult run_analyze(const RunConfig& cfg) {
  const auto alg = lie::make_algebra(cfg.family, *cfg.field, cfg.heights());
  auto basis = working_basis(cfg, *alg);
  const auto loop = thin::make_loop_config(alg, std::move(basis), cfg.max_degree);

  thin::ReportParams rp;
  rp.p = cfg.p;
  rp.n = cfg.n;
  rp.s = cfg.s;
  rp.grading_case = std::string(case_name(cfg.grading_case));
  rp.family = std::string(lie::family_name(cfg.family));
  rp.field = cfg.field->spec();
  rp.pi = cfg.pi.to_string();
  rp.sigma = cfg.sigma.to_string();
  rp.N = cfg.N;
  rp.q = cfg.q;

  std::optional<thin::PatternParams> pattern;
  if (cfg.grading_case != Case::Preswitch && !cfg.pi.is_zero()) {
    const auto nu = cfg.pi.inv() - cfg.field->one();
    rp.nu = nu.to_string();
    pattern = thin::PatternParams{cfg.q, static_cast<std::int64_t>(dp::ipow(cfg.p, cfg.s)), cfg.pi.inv()};
  }
  const auto report = thin::analyze(loop, rp, pattern);
  RunResult r;
  r.exit_code = report.ok() ? 0 : 1;
  r.output = cfg.format == "json" ? thin::to_json(report).dump(2) + "\n" : thin::render_text(report);
  return r;
}

RunResult run_oracle(const RunConfig& cfg) {
  Checks checks;
  const std::uint32_t p = cfg.p;
  {
    std::string bad;
    const std::int64_t top = 2 * std::int64_t{p} * p;
    for (std::int64_t n = 0; n <= top && bad.empty(); ++n)
      for (std::int64_t k = 0; k <= n && bad.empty(); ++k)
        if (ff::lucas_binomial(n, k, p) != oracle::factorial_binomial(n, k, p))
          bad = "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
    checks.add("lucas_vs_factorial", bad.empty(), bad);
  }
  {
    const ff::Field& f = *cfg.field;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    std::string bad;
    for (int t = 0; t < 500 && bad.empty(); ++t) {
      const auto a = f.from_code(pick(rng)), b = f.from_code(pick(rng)), c = f.from_code(pick(rng));
      const bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && (a + b) + c == a + (b + c) &&
                      (a.is_zero() || (a * a.inv()).is_one());
      if (!ok) bad = "at " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    }
    checks.add("field_axioms_sampled", bad.empty(), bad);
  }

  const auto alg = lie::make_algebra(cfg.family, *cfg.field, cfg.heights());
  if (alg->heights().n1 == cfg.s + 1) {
    const auto closed = lie::build_derivation(alg, cfg.s, lie::Realization::ClosedForm);
    const auto iterated = lie::build_derivation(alg, cfg.s, lie::Realization::IteratedAd);
    std::string bad;
    for (std::size_t c = 0; c < alg->dim() && bad.empty(); ++c)
      if (!(closed.matrix().column(c) == iterated.matrix().column(c))) bad = "at " + mono_text(alg->basis()[c]);
    checks.add("derivation_closed_vs_iterated", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t a = 0; a < alg->dim() && bad.empty(); ++a)
      for (std::size_t b = 0; b < alg->dim() && bad.empty(); ++b) {
        const auto u = alg->basis_element(a), v = alg->basis_element(b);
        if (!(alg->bracket(u, v) == oracle::poisson_bracket(cfg.family, u, v)))
          bad = "{" + mono_text(alg->basis()[a]) + ", " + mono_text(alg->basis()[b]) + "}";
      }
    checks.add("bracket_vs_poisson", bad.empty(), bad);
  }
  if (cfg.grading_case != Case::Preswitch) {
    const auto kind = closed_case(cfg.grading_case);
    const auto scfg = switch_config(cfg);
    const auto basis = grading::build_closed_basis(kind, *alg, scfg, cfg.allow_negative_control);
    std::string bad;
    for (std::size_t i = 0; i < basis.size() && bad.empty(); ++i)
      for (std::size_t j = 0; j < basis.size() && bad.empty(); ++j) {
        const auto direct = oracle::poisson_bracket(cfg.family, basis.vectors[i], basis.vectors[j]);
        if (!(direct == grading::predicted_product(kind, *alg, scfg, basis, basis.labels[i], basis.labels[j])))
          bad = "{" + basis.labels[i].to_string() + "," + basis.labels[j].to_string() + "}";
      }
    checks.add("tables_vs_poisson", bad.empty(), bad);
  }
  return finish(cfg, checks, json::object());
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Verify:
      return "verify";
    case Command::Switch:
      return "switch";
    case Command::Analyze:
      return "analyze";
    case Command::Oracle:
      return "oracle";
  }
  return "?";
}

std::string_view case_name(Case c) {
  switch (c) {
    case Case::Preswitch:
      return "preswitch";
    case Case::BigField:
      return "big-field";
    case Case::PrimeField:
      return "prime-field";
  }
  return "?";
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Modular Hamiltonian Lie algebras, grading switching and thin loop algebras", "modlie"};
  std::string command, grading_case, family, field, pi, sigma, format, config;
  std::int64_t p = 0, n = 0, s = 0, n1 = 0, max_degree = 0;
  std::uint64_t seed = 0;
  bool allow_negative = false;
  app.add_option("command", command, "verify | switch | analyze | oracle");
  app.add_option("--case", grading_case, "preswitch | big-field | prime-field");
  app.add_option("--family", family, "gh | az");
  app.add_option("--p", p, "odd prime characteristic");
  app.add_option("--n", n, "height of y (q = p^n)");
  app.add_option("--s", s, "D = (ad y)^(p^s)");
  app.add_option("--n1", n1, "height of x (default s + 1)");
  app.add_option("--field", field, "coefficient field p^m:c0,...,cm");
  app.add_option("--pi", pi, "switching parameter pi");
  app.add_option("--sigma", sigma, "switching parameter sigma");
  app.add_option("--max-degree", max_degree, "loop expansion bound (default 3N)");
  app.add_option("--format", format, "json | text");
  app.add_option("--seed", seed, "seed for sampled property checks");
  app.add_option("--config", config, "JSON file with default settings");
  app.add_flag("--allow-negative-control", allow_negative, "permit pi = 0 in the prime-field case");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Raw raw = config.empty() ? Raw{} : read_config_file(config);
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("command")) raw.command = command;
  if (given("--case")) raw.grading_case = grading_case;
  if (given("--family")) raw.family = family;
  if (given("--field")) raw.field = field;
  if (given("--pi")) raw.pi = pi;
  if (given("--sigma")) raw.sigma = sigma;
  if (given("--format")) raw.format = format;
  if (given("--p")) raw.p = p;
  if (given("--n")) raw.n = n;
  if (given("--s")) raw.s = s;
  if (given("--n1")) raw.n1 = n1;
  if (given("--max-degree")) raw.max_degree = max_degree;
  if (given("--seed")) raw.seed = seed;
  if (allow_negative) raw.allow_negative_control = true;
  return resolve(raw);
}

json echo(const RunConfig& cfg) {
  json j = {{"command", command_name(cfg.command)},
            {"case", case_name(cfg.grading_case)},
            {"family", lie::family_name(cfg.family)},
            {"p", cfg.p},
            {"n", cfg.n},
            {"s", cfg.s},
            {"n1", cfg.n1},
            {"field", cfg.field->spec()},
            {"pi", cfg.pi.to_string()},
            {"sigma", cfg.sigma.to_string()},
            {"q", cfg.q},
            {"N", cfg.N},
            {"max_degree", cfg.max_degree},
            {"format", cfg.format},
            {"seed", cfg.seed},
            {"allow_negative_control", cfg.allow_negative_control}};
  if (cfg.grading_case != Case::Preswitch && !cfg.pi.is_zero()) j["nu"] = (cfg.pi.inv() - cfg.field->one()).to_string();
  return j;
}

RunResult run_command(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::Verify:
        return run_verify(cfg);
      case Command::Switch:
        return run_switch(cfg);
      case Command::Analyze:
        return run_analyze(cfg);
      case Command::Oracle:
        return run_oracle(cfg);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    json err = {{"command", command_name(cfg.command)}, {"params", echo(cfg)}, {"error", e.what()}};
    return {1, cfg.format == "json" ? err.dump(2) + "\n" : std::string("error: ") + e.what() + "\n"};
  }
  return {1, "unknown command\n"};
}

}  // namespace modlie::cli
