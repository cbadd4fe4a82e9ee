#include "modlie/report.hpp"

#include <sstream>

namespace modlie::thin {

using nlohmann::json;

namespace {

DiamondKind parse_kind(const std::string& s) {
  if (s == "genuine") return DiamondKind::Genuine;
  if (s == "fake") return DiamondKind::Fake;
  if (s == "anomaly") return DiamondKind::Anomaly;
  throw Error("unknown diamond kind '" + s + "'");
}

std::string timeline_entry(const DiamondRecord& d) {
  switch (d.kind) {
    case DiamondKind::Genuine:
      return d.type_text();
    case DiamondKind::Fake:
      return "fake(" + d.type_text() + ")";
    case DiamondKind::Anomaly:
      return "anomaly(" + d.description + ")";
  }
  return "?";
}

}  // namespace

json to_json(const ThinReport& r) {
  const auto& p = r.params;
  json params = {{"p", p.p},         {"n", p.n},         {"s", p.s},         {"case", p.grading_case},
                 {"family", p.family}, {"field", p.field}, {"pi", p.pi},       {"sigma", p.sigma},
                 {"N", p.N},         {"q", p.q},         {"max_degree", p.max_degree}};
  if (p.nu) params["nu"] = *p.nu;

  json comps = json::array();
  for (const auto& c : r.components) comps.push_back({{"degree", c.degree}, {"dim", c.dim}});

  json diamonds = json::array();
  for (const auto& d : r.diamonds)
    diamonds.push_back({{"degree", d.degree}, {"kind", kind_name(d.kind)}, {"type", d.type_text()}});

  json checks = json::object();
  for (const auto& [name, c] : r.checks) {
    json entry = {{"pass", c.pass}};
    if (c.counterexample) entry["counterexample"] = *c.counterexample;
    if (c.informational) entry["informational"] = true;
    checks[name] = std::move(entry);
  }
  return {{"params", params}, {"components", comps}, {"diamonds", diamonds}, {"checks", checks}};
}

ThinReport report_from_json(const json& j) {
  ThinReport r;
  const auto& jp = j.at("params");
  auto& p = r.params;
  p.p = jp.at("p").get<std::uint32_t>();
  p.n = jp.at("n").get<unsigned>();
  p.s = jp.at("s").get<unsigned>();
  p.grading_case = jp.at("case").get<std::string>();
  p.family = jp.at("family").get<std::string>();
  p.field = jp.at("field").get<std::string>();
  p.pi = jp.at("pi").get<std::string>();
  p.sigma = jp.at("sigma").get<std::string>();
  p.N = jp.at("N").get<std::int64_t>();
  p.q = jp.at("q").get<std::int64_t>();
  p.max_degree = jp.at("max_degree").get<std::int64_t>();
  if (jp.contains("nu")) p.nu = jp.at("nu").get<std::string>();

  for (const auto& c : j.at("components"))
    r.components.push_back({c.at("degree").get<std::int64_t>(), c.at("dim").get<std::size_t>()});

  const ff::Field& field = ff::Field::parse(p.field);
  for (const auto& d : j.at("diamonds")) {
    DiamondRecord rec;
    rec.degree = d.at("degree").get<std::int64_t>();
    rec.kind = parse_kind(d.at("kind").get<std::string>());
    const auto text = d.at("type").get<std::string>();
    if (rec.kind == DiamondKind::Anomaly)
      rec.description = text;
    else if (text != "inf")
      rec.type = field.parse_element(text);
    r.diamonds.push_back(std::move(rec));
  }

  for (const auto& [name, c] : j.at("checks").items()) {
    CheckResult res;
    res.pass = c.at("pass").get<bool>();
    if (c.contains("counterexample")) res.counterexample = c.at("counterexample").get<std::string>();
    res.informational = c.value("informational", false);
    r.checks[name] = std::move(res);
  }
  return r;
}

std::string render_text(const ThinReport& r) {
  std::ostringstream os;
  const auto& p = r.params;
  os << "# case " << p.grading_case << ", family " << p.family << ", p " << p.p << ", n " << p.n << ", s " << p.s
     << ", field " << p.field << ", pi " << p.pi << ", sigma " << p.sigma << ", N " << p.N << ", q " << p.q;
  if (p.nu) os << ", nu " << *p.nu;
  os << ", max degree " << p.max_degree << '\n';
  for (const auto& d : r.diamonds) os << d.degree << ':' << timeline_entry(d) << '\n';
  for (const auto& [name, c] : r.checks) {
    os << "# " << name << ": " << (c.pass ? "PASS" : "FAIL");
    if (c.informational) os << " (informational)";
    if (c.counterexample) os << " - " << *c.counterexample;
    os << '\n';
  }
  return os.str();
}

}  // namespace modlie::thin
