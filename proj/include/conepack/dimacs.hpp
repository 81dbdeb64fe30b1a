#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "conepack/graph.hpp"

namespace conepack {

// Extended DIMACS problem file; see docs/formats.md.
struct DimacsProblem {
  std::string kind;  // maxflow | mincost | gpn | concurrent | mcf | treepack
  Digraph graph;
  std::vector<Commodity> commodities;
  std::vector<Rational> alpha;     // per edge, gpn only
  std::optional<Rational> budget;  // 'b' line
};

DimacsProblem read_dimacs(std::istream& in);
DimacsProblem read_dimacs_file(const std::string& path);

}  // namespace conepack
