#pragma once

#include <random>
#include <vector>

#include "spingraph/graph.hpp"
#include "spingraph/su2.hpp"

namespace spingraph {

// Gauge group sitting at a vertex: all of SU(2), its diagonal torus, or the
// trivial subgroup.
enum class GaugeGroupKind { Full, Torus, Trivial };

// Vertex datum: the gauge group K_v together with an irreducible K_v-module
// sigma_v.  For Full that is a spin, for Torus a weight character, for Trivial
// only the trivial line (dimension 1).
struct VertexColor {
  GaugeGroupKind gauge = GaugeGroupKind::Full;
  Spin sigma_spin;          // used when gauge == Full
  TorusWeight sigma_weight; // used when gauge == Torus

  int sigma_dim() const {
    return gauge == GaugeGroupKind::Full ? sigma_spin.dim() : 1;
  }
};

// Assignment of one spin per edge, in global edge order.
struct Sector {
  std::vector<Spin> edge_spins;
  bool operator==(const Sector&) const = default;
};

// A graph with vertex colors and a chosen sector.
struct ColoredGraph {
  OrientedGraph graph;
  std::vector<VertexColor> colors;  // one per vertex, vertex order
  Sector sector;                    // one spin per edge, edge order
};

void validate_colored_graph(const ColoredGraph& cg);

// All sectors with every edge spin <= max_spin, in lexicographic order with
// the spin on the first edge varying slowest.
std::vector<Sector> enumerate_sectors(const OrientedGraph& g, Spin max_spin);

// sigma_v(k) as a matrix: the spin matrix for Full, the 1x1 character e^{i n t}
// for Torus (k must be diagonal), 1 for Trivial.
Matrix sigma_matrix(const VertexColor& color, const GroupElement& k);

// Haar-uniform sample from K_v.
GroupElement random_gauge_element(const VertexColor& color, std::mt19937_64& rng);

}  // namespace spingraph
