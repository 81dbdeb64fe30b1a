#include "conepack/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace conepack {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool numeric_token(const std::string& token) {
  try {
    parse_rational(token);
    return true;
  } catch (const SolverError&) {
    return false;
  }
}

}  // namespace

DimacsProblem read_dimacs(std::istream& in) {
  DimacsProblem problem;
  bool have_header = false;
  int declared_edges = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tokens = split(line);
    if (tokens.empty()) continue;
    const std::string& tag = tokens[0];
    auto parse_error = [&](const std::string& what) {
      fail(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };
    if (tag == "p") {
      if (tokens.size() != 4) parse_error("expected 'p <kind> <nodes> <edges>'");
      problem.kind = tokens[1];
      problem.graph.num_nodes = std::stoi(tokens[2]);
      declared_edges = std::stoi(tokens[3]);
      have_header = true;
    } else if (tag == "a") {
      if (!have_header) parse_error("'a' before 'p'");
      if (tokens.size() < 4 || tokens.size() > 6) {
        parse_error("expected 'a <tail> <head> <cap> [cost] [fee]'");
      }
      GraphEdge edge;
      edge.tail = std::stoi(tokens[1]) - 1;  // files are 1-based
      edge.head = std::stoi(tokens[2]) - 1;
      edge.capacity = parse_rational(tokens[3]);
      edge.cost = tokens.size() > 4 ? parse_rational(tokens[4]) : Rational(0);
      edge.fee = tokens.size() > 5 ? parse_rational(tokens[5]) : Rational(0);
      problem.graph.edges.push_back(std::move(edge));
    } else if (tag == "n") {
      if (tokens.size() != 3) parse_error("expected 'n <id> s|t'");
      const int node = std::stoi(tokens[1]) - 1;
      if (tokens[2] == "s") {
        problem.graph.source = node;
      } else if (tokens[2] == "t") {
        problem.graph.sink = node;
      } else {
        parse_error("node designator must be 's' or 't'");
      }
    } else if (tag == "c") {
      // Commodity lines carry exactly five numeric fields; anything else is
      // a DIMACS comment.
      if (tokens.size() == 6 && numeric_token(tokens[1]) && numeric_token(tokens[2]) &&
          numeric_token(tokens[3]) && numeric_token(tokens[4]) && numeric_token(tokens[5])) {
        Commodity commodity;
        commodity.source = std::stoi(tokens[2]) - 1;
        commodity.sink = std::stoi(tokens[3]) - 1;
        commodity.demand = parse_rational(tokens[4]);
        commodity.weight = parse_rational(tokens[5]);
        problem.commodities.push_back(std::move(commodity));
      }
    } else if (tag == "alpha") {
      if (tokens.size() != 3) parse_error("expected 'alpha <edge> <value>'");
      const int edge = std::stoi(tokens[1]) - 1;
      if (edge < 0 || edge >= static_cast<int>(problem.graph.edges.size())) {
        parse_error("alpha line references an unknown edge");
      }
      if (problem.alpha.size() < problem.graph.edges.size()) {
        problem.alpha.resize(problem.graph.edges.size(), Rational(1));
      }
      problem.alpha[edge] = parse_rational(tokens[2]);
    } else if (tag == "b") {
      if (tokens.size() != 2) parse_error("expected 'b <budget>'");
      problem.budget = parse_rational(tokens[1]);
    } else {
      // unknown tags are ignored, like comments
    }
  }
  if (!have_header) fail(Errc::ParseError, "missing 'p' header line");
  if (declared_edges != static_cast<int>(problem.graph.edges.size())) {
    fail(Errc::ParseError, "edge count differs from the 'p' header");
  }
  problem.alpha.resize(problem.graph.edges.size(), Rational(1));
  problem.graph.validate();
  return problem;
}

DimacsProblem read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return read_dimacs(in);
}

}  // namespace conepack
