#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "conepack/apps.hpp"
#include "conepack/instance.hpp"

namespace conepack {

using Json = nlohmann::json;

Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

// {"m":..., "n":..., "triples":[[i,j,"p/q"],...], "b":[...], "c":[...]}
PackingInstance instance_from_json(const Json& doc);
Json instance_to_json(const PackingInstance& instance);

// {"generators":[[...],...]} with dense length-n rows.
std::vector<Generator> generators_from_json(const Json& doc, int dimension);
Json generators_to_json(const std::vector<Generator>& generators, int dimension);

Json solution_to_json(const Solution& solution);
std::vector<double> solution_x_from_json(const Json& doc);

Json solve_log_to_json(const SolveLog& log);

struct RunReport {
  std::string problem;
  Rational eps;
  std::string bound_mode;
  Solution solution;
  Rational worst_violation;
  double lambda_initial = 0.0;
  double lambda_final = 0.0;
  long bound_raises = 0;
  std::string note;
  double wall_ms = 0.0;
};

Json report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

}  // namespace conepack
