#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spingraph/coloring.hpp"
#include "spingraph/graph.hpp"
#include "spingraph/su2.hpp"
#include "spingraph/types.hpp"

namespace spingraph {

// Chain description given by spin data only; the CLI synthesizes canonical
// intertwiners from the equivariant-map bases.
struct ChainData {
  std::string kind;  // "trace" or "spherical"
  std::vector<Spin> edge_spins;
  // trace: one sigma spin per site; spherical: one sigma spin per bulk vertex.
  std::vector<Spin> vertex_spins;
  int left_weight = 0;   // spherical only
  int right_weight = 0;  // spherical only
};

struct Tolerances {
  double equivariance = 1e-9;
  double casimir = 1e-12;
  double finite_difference = 1e-4;
  double orthogonality = 1e-7;
};

// Parsed input file for the command-line tool.  Unset numeric fields fall
// back to the defaults below; command-line flags override both.
struct RunSpec {
  std::optional<GraphSpec> graph;
  // Colors keyed by vertex id; resolved against graph vertex order.
  std::vector<std::pair<std::string, VertexColor>> colors;
  std::optional<Sector> sector;
  Spin max_spin{3};
  std::uint64_t seed = 12345;
  int samples = 50;
  int degree_cap = 4;
  int quadrature_order = 6;
  int grid = 0;
  Tolerances tolerances;
  std::optional<ChainData> chain;
  // Explicit evaluation points: one Euler triple per edge, one row per point.
  std::vector<std::vector<EulerAngles>> points;

  // Colors in graph vertex order; throws SpecError on missing/unknown ids.
  std::vector<VertexColor> resolved_colors(const OrientedGraph& g) const;
};

RunSpec parse_run_spec(const std::string& json_text, const std::string& origin);
RunSpec parse_run_spec_file(const std::string& path);

}  // namespace spingraph
