#include "spingraph/chains.hpp"

namespace spingraph {

namespace {

// (step (x) id_rest) * b, with the rows of b grouped (step column index, rest).
Matrix kron_apply(const Matrix& step, long rest, const Matrix& b) {
  Matrix next(step.rows() * rest, b.cols());
  for (long r = 0; r < step.rows(); ++r)
    for (long t = 0; t < rest; ++t)
      for (long c = 0; c < b.cols(); ++c) {
        Complex acc = 0;
        for (long m = 0; m < step.cols(); ++m) acc += step(r, m) * b(m * rest + t, c);
        next(r * rest + t, c) = acc;
      }
  return next;
}

}  // namespace

Vector partial_trace(const Matrix& b, int dim_m, int dim_s) {
  if (b.rows() != long(dim_m) * dim_s || b.cols() != dim_m)
    throw std::invalid_argument("partial trace shape mismatch");
  Vector out = Vector::Zero(dim_s);
  for (int s = 0; s < dim_s; ++s)
    for (int k = 0; k < dim_m; ++k) out(s) += b(long(k) * dim_s + s, k);
  return out;
}

void validate_trace_chain(const TraceChainSpec& spec) {
  int n = spec.n();
  if (n < 1) throw SpecError("chain needs at least one site");
  if (int(spec.vertex_spins.size()) != n) throw SpecError("expected one vertex spin per site");
  if (int(spec.intertwiners.size()) != n) throw SpecError("expected one intertwiner per site");
  for (int i = 0; i < n; ++i) {
    int prev = (i + n - 1) % n;
    long rows = long(spec.edge_spins[prev].dim()) * spec.vertex_spins[i].dim();
    if (spec.intertwiners[i].rows() != rows ||
        spec.intertwiners[i].cols() != spec.edge_spins[i].dim())
      throw SpecError("intertwiner " + std::to_string(i + 1) + " has wrong shape");
  }
}

Vector trace_function(const TraceChainSpec& spec, const std::vector<GroupElement>& g) {
  validate_trace_chain(spec);
  int n = spec.n();
  if (int(g.size()) != n) throw std::invalid_argument("expected one group element per edge");

  // Composite M_n -> M_n (x) S_1 (x) ... (x) S_n built right to left.
  Matrix b = spec.intertwiners[n - 1] * evaluate(make_irrep(spec.edge_spins[n - 1]), g[n - 1]);
  long rest = spec.vertex_spins[n - 1].dim();  // accumulated S block to the right
  for (int i = n - 2; i >= 0; --i) {
    b = kron_apply(spec.intertwiners[i] * evaluate(make_irrep(spec.edge_spins[i]), g[i]),
                   rest, b);
    rest *= spec.vertex_spins[i].dim();
  }
  return partial_trace(b, spec.edge_spins[n - 1].dim(), int(rest));
}

ColoredGraph trace_chain_graph(const TraceChainSpec& spec) {
  validate_trace_chain(spec);
  int n = spec.n();
  GraphSpec gs;
  for (int i = 0; i < n; ++i) gs.vertices.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    gs.edges.push_back({"e" + std::to_string(i + 1), "v" + std::to_string(i + 1),
                        "v" + std::to_string((i + 1) % n + 1)});
  ColoredGraph cg;
  cg.graph = build_graph(gs, true);
  for (int i = 0; i < n; ++i)
    cg.colors.push_back({GaugeGroupKind::Full, spec.vertex_spins[i], {}});
  cg.sector.edge_spins = spec.edge_spins;
  return cg;
}

std::vector<Vector> trace_chain_tensors(const TraceChainSpec& spec) {
  validate_trace_chain(spec);
  int n = spec.n();
  std::vector<Vector> tensors;
  for (int i = 0; i < n; ++i) {
    // Star at v_{i+1}: dual leg e_{i+1} (domain of Phi), plain leg e_i, sigma.
    int prev = (i + n - 1) % n;
    int dk = spec.edge_spins[i].dim();        // dual leg dim
    int da = spec.edge_spins[prev].dim();     // plain leg dim
    int ds = spec.vertex_spins[i].dim();
    Vector t(long(dk) * da * ds);
    for (int k = 0; k < dk; ++k)
      for (int a = 0; a < da; ++a)
        for (int s = 0; s < ds; ++s)
          t((long(k) * da + a) * ds + s) = spec.intertwiners[i](long(a) * ds + s, k);
    tensors.push_back(std::move(t));
  }
  return tensors;
}

std::vector<Matrix> chain_intertwiner_basis(Spin domain, Spin codomain, Spin sigma) {
  // Hom_G(M^{domain}, M^{codomain} (x) S) via the invariants of the synthetic
  // star M^{domain *} (x) M^{codomain} (x) S.
  GraphSpec gs;
  gs.vertices = {"v", "w"};
  gs.edges = {{"e1", "v", "w"}, {"e2", "w", "v"}};
  ColoredGraph cg;
  cg.graph = build_graph(gs);
  cg.colors = {{GaugeGroupKind::Full, sigma, {}}, {GaugeGroupKind::Full, Spin(0), {}}};
  cg.sector.edge_spins = {domain, codomain};
  StarSpace ss = star_space(cg, 0);  // legs: dual e1 = domain, plain e2 = codomain
  InvariantBasis inv = invariant_basis(ss);
  int dk = domain.dim(), da = codomain.dim(), ds = sigma.dim();
  std::vector<Matrix> out;
  for (const auto& t : inv.vectors) {
    Matrix phi(long(da) * ds, dk);
    for (int k = 0; k < dk; ++k)
      for (int a = 0; a < da; ++a)
        for (int s = 0; s < ds; ++s) phi(long(a) * ds + s, k) = t((long(k) * da + a) * ds + s);
    out.push_back(std::move(phi));
  }
  return out;
}

Vector q_map(const Matrix& t) {
  Vector out(t.rows() * t.cols());
  for (long w = 0; w < t.rows(); ++w)
    for (long n = 0; n < t.cols(); ++n) out(w * t.cols() + n) = t(w, n);
  return out;
}

void validate_spherical_chain(const SphericalChainSpec& spec) {
  int n = spec.n();
  if (n < 1) throw SpecError("chain needs at least one edge");
  if (int(spec.bulk_spins.size()) != n - 1) throw SpecError("expected n-1 bulk vertex spins");
  if (int(spec.intertwiners.size()) != n - 1) throw SpecError("expected n-1 bulk intertwiners");
  if (spec.theta.rows() != spec.left.sigma_dim() ||
      spec.theta.cols() != spec.edge_spins[0].dim())
    throw SpecError("left boundary map has wrong shape");
  if (spec.xi.rows() != spec.edge_spins[n - 1].dim() ||
      spec.xi.cols() != spec.right.sigma_dim())
    throw SpecError("right boundary map has wrong shape");
  for (int i = 0; i < n - 1; ++i) {
    // Phi_{i+2}: M^{pi_{i+2}} -> M^{pi_{i+1}} (x) S_{i+2} (0-based: edge i+1 -> edge i).
    long rows = long(spec.edge_spins[i].dim()) * spec.bulk_spins[i].dim();
    if (spec.intertwiners[i].rows() != rows ||
        spec.intertwiners[i].cols() != spec.edge_spins[i + 1].dim())
      throw SpecError("bulk intertwiner " + std::to_string(i + 2) + " has wrong shape");
  }
}

Vector spherical_function(const SphericalChainSpec& spec, const std::vector<GroupElement>& g) {
  validate_spherical_chain(spec);
  int n = spec.n();
  if (int(g.size()) != n) throw std::invalid_argument("expected one group element per edge");

  // N* -> M^{pi_n} -> ... -> L (x) S_2 ... S_n, assembled right to left; the
  // bulk map at v_{i+2} pairs intertwiners[i] with the group element of edge
  // i+1, and the left boundary pairs Theta with edge 0.
  Matrix b = spec.xi;
  long rest = 1;  // accumulated S block to the right of the current map
  for (int i = n - 2; i >= 0; --i) {
    b = kron_apply(spec.intertwiners[i] * evaluate(make_irrep(spec.edge_spins[i + 1]), g[i + 1]),
                   rest, b);
    rest *= spec.bulk_spins[i].dim();
  }
  b = kron_apply(spec.theta * evaluate(make_irrep(spec.edge_spins[0]), g[0]), rest, b);
  return q_map(b);
}

ColoredGraph spherical_chain_graph(const SphericalChainSpec& spec) {
  validate_spherical_chain(spec);
  int n = spec.n();
  GraphSpec gs;
  for (int i = 0; i <= n; ++i) gs.vertices.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    gs.edges.push_back({"e" + std::to_string(i + 1), "v" + std::to_string(i + 1),
                        "v" + std::to_string(i + 2)});
  ColoredGraph cg;
  cg.graph = build_graph(gs, true);
  cg.colors.push_back(spec.left);
  for (int i = 0; i < n - 1; ++i)
    cg.colors.push_back({GaugeGroupKind::Full, spec.bulk_spins[i], {}});
  cg.colors.push_back(spec.right);
  cg.sector.edge_spins = spec.edge_spins;
  return cg;
}

std::vector<Vector> spherical_chain_tensors(const SphericalChainSpec& spec) {
  validate_spherical_chain(spec);
  int n = spec.n();
  std::vector<Vector> tensors;
  // v_1: dual leg e_1, sigma L: Theta~[k, t] = Theta[t, k].
  {
    int dk = spec.edge_spins[0].dim(), ds = spec.left.sigma_dim();
    Vector t(long(dk) * ds);
    for (int k = 0; k < dk; ++k)
      for (int s = 0; s < ds; ++s) t(long(k) * ds + s) = spec.theta(s, k);
    tensors.push_back(std::move(t));
  }
  // Bulk v_{i+2}: dual leg e_{i+2}, plain leg e_{i+1}, sigma S_{i+2}.
  for (int i = 0; i < n - 1; ++i) {
    int dk = spec.edge_spins[i + 1].dim();
    int da = spec.edge_spins[i].dim();
    int ds = spec.bulk_spins[i].dim();
    Vector t(long(dk) * da * ds);
    for (int k = 0; k < dk; ++k)
      for (int a = 0; a < da; ++a)
        for (int s = 0; s < ds; ++s)
          t((long(k) * da + a) * ds + s) = spec.intertwiners[i](long(a) * ds + s, k);
    tensors.push_back(std::move(t));
  }
  // v_{n+1}: plain leg e_n, sigma N: Xi~[a, t] = Xi[a, t].
  {
    int da = spec.edge_spins[n - 1].dim(), ds = spec.right.sigma_dim();
    Vector t(long(da) * ds);
    for (int a = 0; a < da; ++a)
      for (int s = 0; s < ds; ++s) t(long(a) * ds + s) = spec.xi(a, s);
    tensors.push_back(std::move(t));
  }
  return tensors;
}

std::vector<Matrix> boundary_hom_basis(Spin edge, const VertexColor& color) {
  // Hom_H(M^{pi}, sigma) from the invariants of M^{pi *} (x) sigma: the star of
  // the source vertex of a single-edge graph.
  GraphSpec gs{{"v", "w"}, {{"e", "v", "w"}}};
  ColoredGraph cg;
  cg.graph = build_graph(gs);
  cg.colors = {color, {GaugeGroupKind::Trivial, Spin(0), {}}};
  cg.sector.edge_spins = {edge};
  StarSpace ss = star_space(cg, 0);
  InvariantBasis inv = invariant_basis(ss);
  int dk = edge.dim(), ds = color.sigma_dim();
  std::vector<Matrix> out;
  for (const auto& t : inv.vectors) {
    Matrix theta(ds, dk);
    for (int k = 0; k < dk; ++k)
      for (int s = 0; s < ds; ++s) theta(s, k) = t(long(k) * ds + s);
    out.push_back(std::move(theta));
  }
  return out;
}

std::vector<Matrix> boundary_cohom_basis(Spin edge, const VertexColor& color) {
  // Hom_K(sigma*, M^{pi}) from the invariants of M^{pi} (x) sigma: the star of
  // the target vertex of a single-edge graph; this is hom_basis there.
  GraphSpec gs{{"v", "w"}, {{"e", "v", "w"}}};
  ColoredGraph cg;
  cg.graph = build_graph(gs);
  cg.colors = {{GaugeGroupKind::Trivial, Spin(0), {}}, color};
  cg.sector.edge_spins = {edge};
  StarSpace ss = star_space(cg, 1);
  return hom_basis(ss).maps;
}

}  // namespace spingraph
