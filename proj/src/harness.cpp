#include "slicepoly/harness.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace slicepoly {

bool RunReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void RunReport::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

Table& RunReport::table(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

Json RunReport::to_json(bool include_wall_time) const {
  Json spec_j{{"name", spec.name}, {"params", resolved_params}, {"seed", spec.seed}, {"caps", spec.caps}};
  Json checks_j = Json::array();
  for (auto& c : checks) checks_j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json tables_j = Json::array();
  for (auto& t : tables) tables_j.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  Json j{{"spec", spec_j},         {"checks", checks_j},     {"all_pass", all_pass()},
         {"results", results},     {"tables", tables_j},     {"deviations", deviations},
         {"version", kLibraryVersion}};
  if (include_wall_time) j["wall_time"] = wall_time;
  return j;
}

std::string table_csv(const Table& t) {
  auto cell = [](const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
    os << '\n';
  }
  return os.str();
}

Real parse_real(const std::string& text) {
  if (text.rfind("exp:", 0) == 0) return exp(to_real(parse_rational(text.substr(4))));
  return to_real(parse_rational(text));
}

int Params::integer(const std::string& key) const {
  const Json& v = j_.at(key);
  if (v.is_string()) return std::stoi(v.get<std::string>());
  return v.get<int>();
}

std::string Params::str(const std::string& key) const {
  const Json& v = j_.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool Params::flag(const std::string& key) const {
  const Json& v = j_.at(key);
  if (v.is_string()) return v.get<std::string>() == "true" || v.get<std::string>() == "1";
  if (v.is_number()) return v.get<int>() != 0;
  return v.get<bool>();
}

Rational Params::rational(const std::string& key) const { return parse_rational(str(key)); }
Real Params::real(const std::string& key) const { return parse_real(str(key)); }

const std::vector<ExperimentInfo>& registry() {
  static const std::vector<ExperimentInfo> reg = builtin_experiments();
  return reg;
}

const ExperimentInfo& find_experiment(const std::string& name) {
  for (auto& e : registry())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown experiment: " + name);
}

Json schema_to_json(const ExperimentInfo& e) {
  Json params = Json::array();
  for (auto& p : e.params)
    params.push_back({{"name", p.name}, {"type", p.type}, {"default", p.default_value}, {"help", p.help}});
  return {{"name", e.name}, {"summary", e.summary}, {"randomized", e.randomized}, {"params", params}};
}

Json list_experiments() {
  Json out = Json::array();
  for (auto& e : registry()) out.push_back(schema_to_json(e));
  return out;
}

namespace {

void apply_caps(const Json& j, Caps& c) {
  for (auto& [key, v] : j.items()) {
    if (key == "max_slice_points") c.max_slice_points = v.get<std::uint64_t>();
    else if (key == "max_terms") c.max_terms = v.get<std::uint64_t>();
    else if (key == "max_columns") c.max_columns = v.get<std::uint64_t>();
    else if (key == "max_rows") c.max_rows = v.get<std::uint64_t>();
    else if (key == "max_full_cube_n") c.max_full_cube_n = v.get<int>();
    else if (key == "max_galvin_degree") c.max_galvin_degree = v.get<int>();
    else if (key == "max_galvin_enum_n") c.max_galvin_enum_n = v.get<int>();
    else if (key == "threads") c.threads = v.get<unsigned>();
    else throw std::invalid_argument("unknown cap: " + key);
  }
}

}  // namespace

RunReport run(const ExperimentSpec& spec) {
  const ExperimentInfo& info = find_experiment(spec.name);
  Json resolved = Json::object();
  for (auto& p : info.params) resolved[p.name] = p.default_value;
  for (auto& [key, v] : spec.params.items()) {
    if (!resolved.contains(key)) throw std::invalid_argument(spec.name + ": unknown parameter " + key);
    resolved[key] = v;
  }

  RunReport rep;
  rep.spec = spec;
  rep.resolved_params = resolved;
  const Caps saved = caps();
  apply_caps(spec.caps, caps());
  const auto start = std::chrono::steady_clock::now();
  try {
    info.body(Params(resolved), spec.seed, rep);
  } catch (const CapExceeded& e) {
    rep.check("caps", false, e.what());
  } catch (...) {
    caps() = saved;
    throw;
  }
  caps() = saved;
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (rep.checks.empty()) rep.check("ran", true);
  return rep;
}

}  // namespace slicepoly
