#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slicepoly/json_io.hpp"
#include "slicepoly/numeric.hpp"

namespace slicepoly {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct ExperimentSpec {
  std::string name;
  Json params = Json::object();
  std::uint64_t seed = 1;
  std::optional<std::string> out;
  std::string format = "json";  // json or csv
  /// Entries of Caps to override, e.g. {"max_terms": 1000}.
  Json caps = Json::object();
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct RunReport {
  ExperimentSpec spec;
  Json resolved_params = Json::object();
  std::vector<Check> checks;
  std::deque<Table> tables;  // stable references for table()
  Json results = Json::object();
  std::vector<std::string> deviations;
  double wall_time = 0;

  bool all_pass() const;
  void check(std::string name, bool pass, std::string detail = {});
  Table& table(std::string name, std::vector<std::string> columns);
  Json to_json(bool include_wall_time = true) const;
};

std::string table_csv(const Table& t);

struct ParamSchema {
  std::string name;
  std::string type;  // int, string, rational, real, bool
  Json default_value;
  std::string help;
};

/// Resolved parameters with typed accessors.
class Params {
 public:
  explicit Params(Json j) : j_(std::move(j)) {}
  const Json& json() const { return j_; }
  int integer(const std::string& key) const;
  std::string str(const std::string& key) const;
  bool flag(const std::string& key) const;
  Rational rational(const std::string& key) const;
  /// Accepts a rational literal or "exp:x" for e^x.
  Real real(const std::string& key) const;

 private:
  Json j_;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  std::vector<ParamSchema> params;
  bool randomized;
  std::function<void(const Params&, std::uint64_t seed, RunReport&)> body;
};

const std::vector<ExperimentInfo>& registry();
const ExperimentInfo& find_experiment(const std::string& name);
Json schema_to_json(const ExperimentInfo& e);
Json list_experiments();

/// Runs one experiment; unknown names and bad parameters throw std::invalid_argument,
/// cap violations are recorded as a failed check with the message verbatim.
RunReport run(const ExperimentSpec& spec);

/// Parses "exp:x" or a rational literal.
Real parse_real(const std::string& text);

// Defined in experiments.cpp.
std::vector<ExperimentInfo> builtin_experiments();

}  // namespace slicepoly
