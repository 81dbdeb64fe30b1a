#include "conepack/json_io.hpp"

#include <cmath>
#include <sstream>

namespace conepack {

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
  if (value.is_number_float()) return rational_of(value.get<double>());
  fail(Errc::ParseError, "expected a rational (string or number)");
}

Json rational_to_json(const Rational& value) { return to_string(value); }

PackingInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) fail(Errc::ParseError, "instance document must be an object");
  for (const char* key : {"m", "n", "triples", "b", "c"}) {
    if (!doc.contains(key)) fail(Errc::ParseError, std::string("instance is missing '") + key + "'");
  }
  const int m = doc.at("m").get<int>();
  const int n = doc.at("n").get<int>();
  std::vector<Triple> triples;
  for (const Json& row : doc.at("triples")) {
    if (!row.is_array() || row.size() != 3) fail(Errc::ParseError, "triple must be [i, j, value]");
    triples.push_back({row[0].get<int>(), row[1].get<int>(), rational_from_json(row[2])});
  }
  std::vector<Rational> b, c;
  for (const Json& value : doc.at("b")) b.push_back(rational_from_json(value));
  for (const Json& value : doc.at("c")) c.push_back(rational_from_json(value));
  return new_instance(m, n, std::move(triples), std::move(b), std::move(c));
}

Json instance_to_json(const PackingInstance& instance) {
  Json doc;
  doc["m"] = instance.rows();
  doc["n"] = instance.cols();
  Json triples = Json::array();
  for (const Triple& t : instance.triples()) {
    triples.push_back(Json::array({t.row, t.col, rational_to_json(t.value)}));
  }
  doc["triples"] = std::move(triples);
  Json b = Json::array(), c = Json::array();
  for (const Rational& value : instance.capacities()) b.push_back(rational_to_json(value));
  for (const Rational& value : instance.costs()) c.push_back(rational_to_json(value));
  doc["b"] = std::move(b);
  doc["c"] = std::move(c);
  return doc;
}

std::vector<Generator> generators_from_json(const Json& doc, int dimension) {
  if (!doc.contains("generators")) fail(Errc::ParseError, "missing 'generators'");
  std::vector<Generator> generators;
  for (const Json& row : doc.at("generators")) {
    if (static_cast<int>(row.size()) != dimension) {
      fail(Errc::ParseError, "generator length does not match the instance dimension");
    }
    std::vector<std::pair<int, Rational>> entries;
    for (int j = 0; j < dimension; ++j) {
      Rational value = rational_from_json(row[j]);
      if (sgn(value) != 0) entries.emplace_back(j, std::move(value));
    }
    generators.emplace_back(std::move(entries));
  }
  if (generators.empty()) fail(Errc::ParseError, "generator list is empty");
  return generators;
}

Json generators_to_json(const std::vector<Generator>& generators, int dimension) {
  Json rows = Json::array();
  for (const Generator& g : generators) {
    std::vector<Rational> dense(dimension, Rational(0));
    for (const auto& [index, value] : g.entries()) dense[index] = value;
    Json row = Json::array();
    for (const Rational& value : dense) row.push_back(rational_to_json(value));
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["generators"] = std::move(rows);
  return doc;
}

Json solution_to_json(const Solution& solution) {
  Json doc;
  doc["x"] = solution.x;
  doc["objective"] = solution.objective;
  doc["feasible"] = solution.feasible;
  doc["iterations"] = solution.iterations;
  doc["oracle_calls"] = solution.oracle_calls;
  return doc;
}

std::vector<double> solution_x_from_json(const Json& doc) {
  if (!doc.contains("x")) fail(Errc::ParseError, "solution document is missing 'x'");
  return doc.at("x").get<std::vector<double>>();
}

Json solve_log_to_json(const SolveLog& log) {
  Json doc;
  doc["augment_steps"] = log.augment_steps;
  doc["bound_raises"] = log.bound_raises;
  doc["lambda_lower_initial"] = log.lambda_lower_initial;
  doc["lambda_lower_final"] = log.lambda_lower_final;
  doc["final_scale"] = log.final_scale;
  Json steps = Json::array();
  for (const SolveStep& step : log.steps) {
    Json item;
    item["kind"] = step.kind == SolveStep::Kind::Augment ? "augment" : "bound-raise";
    item["nu"] = step.nu;
    item["lambda_lower"] = step.lambda_lower;
    if (step.generator) {
      Json entries = Json::array();
      for (const auto& [index, value] : step.generator->entries()) {
        entries.push_back(Json::array({index, to_string(value)}));
      }
      item["generator"] = std::move(entries);
    }
    steps.push_back(std::move(item));
  }
  doc["steps"] = std::move(steps);
  return doc;
}

Json report_to_json(const RunReport& report) {
  Json doc;
  doc["problem"] = report.problem;
  doc["eps"] = to_string(report.eps);
  doc["bound"] = report.bound_mode;
  doc["objective"] = report.solution.objective;
  doc["feasible"] = report.solution.feasible;
  doc["worst_violation"] = to_string(report.worst_violation);
  doc["iterations"] = report.solution.iterations;
  doc["oracle_calls"] = report.solution.oracle_calls;
  doc["bound_raises"] = report.bound_raises;
  doc["lambda_initial"] = report.lambda_initial;
  doc["lambda_final"] = report.lambda_final;
  doc["note"] = report.note;
  doc["wall_ms"] = report.wall_ms;  // excluded from determinism comparisons
  doc["x"] = report.solution.x;
  return doc;
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "problem,eps,bound,objective,feasible,iterations,oracle_calls,bound_raises,wall_ms\n";
  out << report.problem << ',' << to_string(report.eps) << ',' << report.bound_mode << ','
      << report.solution.objective << ',' << (report.solution.feasible ? 1 : 0) << ','
      << report.solution.iterations << ',' << report.solution.oracle_calls << ','
      << report.bound_raises << ',' << report.wall_ms << '\n';
  return out.str();
}

}  // namespace conepack
