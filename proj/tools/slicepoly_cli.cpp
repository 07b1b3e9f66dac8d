// slicepoly: run a named experiment and emit its report.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "slicepoly/harness.hpp"

using namespace slicepoly;

int main(int argc, char** argv) {
  CLI::App app{"slice distinguisher and polynomial construction experiments"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out, format = "json", params_json;
  std::vector<std::string> params;
  std::optional<int> max_n, threads;
  std::optional<std::uint64_t> max_terms;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--out", out, "report path (stdout when empty)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--param", params, "experiment parameter key=value (repeatable)");
  app.add_option("--params", params_json, "experiment parameters as a JSON object");
  app.add_option("--max-n", max_n, "largest n for full-cube enumeration");
  app.add_option("--max-terms", max_terms, "term cap for polynomial expansion");
  app.add_option("--threads", threads, "worker threads");

  // global options may appear after the subcommand
  app.fallthrough();
  auto* list = app.add_subcommand("list", "list experiments and their parameters");
  std::vector<CLI::App*> subs;
  for (auto& e : registry()) subs.push_back(app.add_subcommand(e.name, e.summary));

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    std::cout << list_experiments().dump(2) << '\n';
    return 0;
  }

  ExperimentSpec spec;
  for (auto* s : subs)
    if (s->parsed()) spec.name = s->get_name();
  spec.seed = seed;
  spec.format = format;
  if (!out.empty()) spec.out = out;
  try {
    if (!params_json.empty()) spec.params = Json::parse(params_json);
    for (auto& kv : params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--param expects key=value: " + kv);
      const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      Json v = Json::parse(value, nullptr, false);
      spec.params[key] = v.is_discarded() ? Json(value) : v;
    }
    if (max_n) spec.caps["max_full_cube_n"] = *max_n;
    if (max_terms) spec.caps["max_terms"] = *max_terms;
    if (threads) spec.caps["threads"] = *threads;

    RunReport rep = run(spec);
    const std::string json = rep.to_json().dump(2) + "\n";
    if (spec.out) {
      std::ofstream(*spec.out) << json;
    } else if (format == "json") {
      std::cout << json;
    }
    if (format == "csv") {
      for (auto& t : rep.tables) {
        const std::string csv = table_csv(t);
        if (spec.out) std::ofstream(*spec.out + "." + t.name + ".csv") << csv;
        else std::cout << "# " << t.name << '\n' << csv;
      }
    }
    for (auto& c : rep.checks)
      std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
