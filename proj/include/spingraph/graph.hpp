#pragma once

#include <array>
#include <string>
#include <vector>

#include "spingraph/types.hpp"

namespace spingraph {

// Oriented edge between vertex indices; loops (source == target) are allowed.
struct Edge {
  std::string id;
  int source = 0;
  int target = 0;
};

// Finite oriented multigraph with total orders on vertices and edges given by
// the insertion order of the spec.
struct OrientedGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  bool connected = false;

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
};

// Raw description as read from a spec document: vertex ids plus
// (edge id, source id, target id) triples.
struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
};

// Validates ids (unique, endpoints known), computes connectivity of the
// underlying undirected graph.  With require_connected set, a disconnected
// graph is rejected.  Throws SpecError naming the offending id.
OrientedGraph build_graph(const GraphSpec& spec, bool require_connected = false);

// Star of a vertex: incident edges split by incidence type, each list in
// global edge order.  A loop at v appears in both lists, so the disjoint
// unions of the out-lists (resp. in-lists) over all vertices recover the edge
// set exactly once each.
struct Star {
  int vertex = 0;
  std::vector<int> out_edges;  // edges with source v
  std::vector<int> in_edges;   // edges with target v
  int degree() const { return int(out_edges.size() + in_edges.size()); }
};

Star star(const OrientedGraph& g, int vertex);

}  // namespace spingraph
