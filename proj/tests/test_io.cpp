#include <doctest.h>

#include <sstream>

#include "conepack/dimacs.hpp"
#include "conepack/instance_gen.hpp"
#include "conepack/json_io.hpp"
#include "test_util.hpp"

using namespace conepack;

TEST_CASE("rational parsing accepts p/q, integers and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("7/2") == make_ratio(7, 2));
  CHECK(parse_rational("4/6") == make_ratio(2, 3));
  CHECK(parse_rational("0.25") == make_ratio(1, 4));
  CHECK(parse_rational("-1.5e2") == Rational(-150));
  CHECK(parse_rational("2.5e-1") == make_ratio(1, 4));
  CHECK(parse_rational(" 12 ") == Rational(12));
  CHECK_THROWS_AS(parse_rational(""), SolverError);
  CHECK_THROWS_AS(parse_rational("1/0"), SolverError);
  CHECK_THROWS_AS(parse_rational("x"), SolverError);
}

TEST_CASE("double lifting is exact") {
  Rng rng(101);
  std::uniform_real_distribution<double> values(-1e6, 1e6);
  for (int round = 0; round < 1000; ++round) {
    double v = values(rng);
    CHECK(to_double(rational_of(v)) == v);
  }
  CHECK(double_below(make_ratio(1, 3)) <= 1.0 / 3.0);
  CHECK(rational_of(double_below(make_ratio(1, 3))) <= make_ratio(1, 3));
  CHECK(rational_of(double_below(make_ratio(-1, 3))) <= make_ratio(-1, 3));
}

TEST_CASE("instance json round trip preserves exact data") {
  Rng rng(103);
  for (int round = 0; round < 25; ++round) {
    ExplicitInstance sample = random_explicit_instance(rng, {});
    Json doc = instance_to_json(sample.instance);
    PackingInstance back = instance_from_json(doc);
    CHECK(back.rows() == sample.instance.rows());
    CHECK(back.cols() == sample.instance.cols());
    CHECK(back.triples().size() == sample.instance.triples().size());
    for (size_t i = 0; i < back.triples().size(); ++i) {
      CHECK(back.triples()[i].value == sample.instance.triples()[i].value);
    }
    CHECK(back.capacities() == sample.instance.capacities());
    CHECK(back.costs() == sample.instance.costs());

    Json gens = generators_to_json(sample.generators, sample.instance.cols());
    std::vector<Generator> back_gens = generators_from_json(gens, sample.instance.cols());
    CHECK(back_gens == sample.generators);
  }
}

TEST_CASE("instance json accepts the documented shapes") {
  Json doc = Json::parse(R"({
    "m": 2, "n": 2,
    "triples": [[0, 0, "1"], [1, 1, 0.5]],
    "b": ["1", "2/3"],
    "c": [1, "-3/2"]
  })");
  PackingInstance instance = instance_from_json(doc);
  CHECK(instance.capacities()[1] == make_ratio(2, 3));
  CHECK(instance.costs()[1] == make_ratio(-3, 2));
  CHECK_THROWS_AS(instance_from_json(Json::parse("{\"m\":1}")), SolverError);
}

TEST_CASE("dimacs reader handles the extended format") {
  std::istringstream in(R"(c a comment line
p mincost 3 4
n 1 s
n 3 t
a 1 2 5 2 1
a 2 3 4 -1 0
a 3 1 2 0.5 0
a 1 3 1 3/2 2
c 1 1 3 2 4
b 10
alpha 2 0.5
)");
  DimacsProblem problem = read_dimacs(in);
  CHECK(problem.kind == "mincost");
  CHECK(problem.graph.num_nodes == 3);
  CHECK(problem.graph.edges.size() == 4);
  CHECK(problem.graph.source == 0);
  CHECK(problem.graph.sink == 2);
  CHECK(problem.graph.edges[0].capacity == Rational(5));
  CHECK(problem.graph.edges[0].fee == Rational(1));
  CHECK(problem.graph.edges[2].cost == make_ratio(1, 2));
  CHECK(problem.graph.edges[3].cost == make_ratio(3, 2));
  REQUIRE(problem.commodities.size() == 1);
  CHECK(problem.commodities[0].source == 0);
  CHECK(problem.commodities[0].sink == 2);
  CHECK(problem.commodities[0].demand == Rational(2));
  CHECK(problem.commodities[0].weight == Rational(4));
  REQUIRE(problem.budget.has_value());
  CHECK(*problem.budget == Rational(10));
  CHECK(problem.alpha[1] == make_ratio(1, 2));
  CHECK(problem.alpha[0] == Rational(1));

  std::istringstream bad("a 1 2 1\n");
  CHECK_THROWS_AS(read_dimacs(bad), SolverError);
}

TEST_CASE("report serialization carries the solver fields") {
  RunReport report;
  report.problem = "pack";
  report.eps = make_ratio(1, 5);
  report.bound_mode = "weak";
  report.solution.objective = 1.75;
  report.solution.feasible = true;
  report.solution.iterations = 42;
  report.worst_violation = make_ratio(-1, 8);
  Json doc = report_to_json(report);
  CHECK(doc["problem"] == "pack");
  CHECK(doc["eps"] == "1/5");
  CHECK(doc["iterations"] == 42);
  CHECK(doc["worst_violation"] == "-1/8");
  std::string csv = report_to_csv(report);
  CHECK(csv.find("pack,1/5,weak,1.75,1,42") != std::string::npos);
}
