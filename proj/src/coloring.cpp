#include "spingraph/coloring.hpp"

#include <cmath>
#include <numbers>

namespace spingraph {

void validate_colored_graph(const ColoredGraph& cg) {
  if (cg.colors.size() != cg.graph.vertices.size())
    throw SpecError("expected one color per vertex");
  if (cg.sector.edge_spins.size() != cg.graph.edges.size())
    throw SpecError("expected one spin per edge");
}

std::vector<Sector> enumerate_sectors(const OrientedGraph& g, Spin max_spin) {
  size_t n = g.edges.size();
  int per_edge = max_spin.twice_j + 1;
  std::vector<Sector> out;
  size_t total = 1;
  for (size_t e = 0; e < n; ++e) total *= per_edge;
  out.reserve(total);
  std::vector<int> twice(n, 0);
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rem = idx;
    // first edge varies slowest
    for (size_t e = 0; e < n; ++e) {
      size_t stride = 1;
      for (size_t f = e + 1; f < n; ++f) stride *= per_edge;
      twice[e] = int(rem / stride);
      rem %= stride;
    }
    Sector s;
    for (size_t e = 0; e < n; ++e) s.edge_spins.push_back(Spin(twice[e]));
    out.push_back(std::move(s));
  }
  return out;
}

Matrix sigma_matrix(const VertexColor& color, const GroupElement& k) {
  switch (color.gauge) {
    case GaugeGroupKind::Full:
      return evaluate(make_irrep(color.sigma_spin), k);
    case GaugeGroupKind::Torus: {
      Complex a = k.m(0, 0);
      if (std::abs(k.m(0, 1)) > 1e-12 || std::abs(k.m(1, 0)) > 1e-12)
        throw std::runtime_error("torus gauge element is not diagonal");
      double t = std::arg(a);
      Matrix out(1, 1);
      out(0, 0) = std::exp(Complex(0, color.sigma_weight.n * t));
      return out;
    }
    case GaugeGroupKind::Trivial:
      return Matrix::Identity(1, 1);
  }
  throw std::logic_error("unreachable");
}

GroupElement random_gauge_element(const VertexColor& color, std::mt19937_64& rng) {
  switch (color.gauge) {
    case GaugeGroupKind::Full:
      return random_group_element(rng);
    case GaugeGroupKind::Torus: {
      std::uniform_real_distribution<double> uni(0.0, 2 * std::numbers::pi);
      return GroupElement::torus(uni(rng));
    }
    case GaugeGroupKind::Trivial:
      return GroupElement::identity();
  }
  throw std::logic_error("unreachable");
}

}  // namespace spingraph
