#include "spingraph/graph.hpp"

#include <algorithm>
#include <set>

namespace spingraph {

int OrientedGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  if (it == vertices.end()) throw SpecError("unknown vertex id '" + id + "'");
  return int(it - vertices.begin());
}

int OrientedGraph::edge_index(const std::string& id) const {
  for (size_t k = 0; k < edges.size(); ++k)
    if (edges[k].id == id) return int(k);
  throw SpecError("unknown edge id '" + id + "'");
}

OrientedGraph build_graph(const GraphSpec& spec, bool require_connected) {
  if (spec.vertices.empty()) throw SpecError("graph has no vertices");
  if (spec.edges.empty()) throw SpecError("graph has no edges");
  std::set<std::string> seen;
  for (const auto& v : spec.vertices)
    if (!seen.insert(v).second) throw SpecError("duplicate vertex id '" + v + "'");

  OrientedGraph g;
  g.vertices = spec.vertices;
  seen.clear();
  for (const auto& [id, src, dst] : spec.edges) {
    if (!seen.insert(id).second) throw SpecError("duplicate edge id '" + id + "'");
    g.edges.push_back({id, g.vertex_index(src), g.vertex_index(dst)});
  }

  // Connectivity of the underlying undirected graph by flood fill.
  std::vector<char> reached(g.vertices.size(), 0);
  std::vector<int> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (const auto& e : g.edges) {
      for (int w : {e.source == v ? e.target : -1, e.target == v ? e.source : -1}) {
        if (w >= 0 && !reached[w]) {
          reached[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  g.connected = std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
  if (require_connected && !g.connected) throw SpecError("graph is not connected");
  return g;
}

Star star(const OrientedGraph& g, int vertex) {
  if (vertex < 0 || vertex >= int(g.vertices.size()))
    throw SpecError("vertex index out of range");
  Star s{vertex, {}, {}};
  for (size_t k = 0; k < g.edges.size(); ++k) {
    if (g.edges[k].source == vertex) s.out_edges.push_back(int(k));
    if (g.edges[k].target == vertex) s.in_edges.push_back(int(k));
  }
  return s;
}

}  // namespace spingraph
