#include "spingraph/spin_functions.hpp"

namespace spingraph {

long SpinGraphFunction::s_dim() const {
  long s = 1;
  for (int d : sigma_dims) s *= d;
  return s;
}

std::vector<int> SpinGraphFunction::layout_dims() const {
  std::vector<int> dims;
  dims.insert(dims.end(), edge_dims.begin(), edge_dims.end());
  dims.insert(dims.end(), edge_dims.begin(), edge_dims.end());
  dims.insert(dims.end(), sigma_dims.begin(), sigma_dims.end());
  return dims;
}

namespace {

SpinGraphFunction empty_function(const ColoredGraph& cg) {
  SpinGraphFunction f;
  f.sector = cg.sector;
  for (const auto& s : cg.sector.edge_spins) f.edge_dims.push_back(s.dim());
  for (const auto& c : cg.colors) f.sigma_dims.push_back(c.sigma_dim());
  f.coeffs = Vector::Zero(tensor_size(f.layout_dims()));
  return f;
}

}  // namespace

SpinGraphFunction assemble_psi(const ColoredGraph& cg, const std::vector<Vector>& tensors) {
  validate_colored_graph(cg);
  size_t nv = cg.graph.vertices.size(), ne = cg.graph.edges.size();
  if (tensors.size() != nv) throw std::invalid_argument("expected one tensor per vertex");

  SpinGraphFunction f = empty_function(cg);
  auto layout = f.layout_dims();
  auto strides = tensor_strides(layout);

  // Per vertex, pair each star leg (and the sigma factor) with its global
  // coefficient slot: row slot e for a dual leg, column slot n + e for a plain
  // leg, sigma slot 2n + v.  Every global slot is claimed by exactly one
  // vertex, since each edge has one source and one target.
  struct LegLink {
    long global_stride;
    int global_dim;
    long vertex_stride;
  };
  std::vector<std::vector<LegLink>> plans(nv);
  for (size_t v = 0; v < nv; ++v) {
    StarSpace ss = star_space(cg, int(v));
    if (tensors[v].size() != ss.dim)
      throw std::invalid_argument("vertex tensor has wrong length for its star space");
    auto vdims = ss.full_leg_dims();
    auto vstrides = tensor_strides(vdims);
    for (size_t k = 0; k < ss.legs.size(); ++k) {
      int slot = ss.legs[k].dual ? ss.legs[k].edge : int(ne) + ss.legs[k].edge;
      plans[v].push_back({strides[slot], layout[slot], vstrides[k]});
    }
    int sigma_slot = int(2 * ne + v);
    plans[v].push_back({strides[sigma_slot], layout[sigma_slot], vstrides.back()});
  }

  for (long flat = 0; flat < f.coeffs.size(); ++flat) {
    Complex prod = 1;
    for (size_t v = 0; v < nv; ++v) {
      long vflat = 0;
      for (const LegLink& link : plans[v])
        vflat += (flat / link.global_stride % link.global_dim) * link.vertex_stride;
      prod *= tensors[v](vflat);
      if (prod == Complex(0, 0)) break;
    }
    f.coeffs(flat) = prod;
  }
  return f;
}

SpinGraphFunction assemble_upsilon(const ColoredGraph& cg, const std::vector<Matrix>& homs) {
  validate_colored_graph(cg);
  if (homs.size() != cg.graph.vertices.size())
    throw std::invalid_argument("expected one map per vertex");
  std::vector<Vector> tensors;
  for (size_t v = 0; v < homs.size(); ++v)
    tensors.push_back(tau(star_space(cg, int(v)), homs[v]));
  return assemble_psi(cg, tensors);
}

Vector evaluate(const SpinGraphFunction& f, const std::vector<GroupElement>& g) {
  int n = f.n_edges();
  if (int(g.size()) != n) throw std::invalid_argument("expected one group element per edge");
  Vector cur = f.coeffs;
  std::vector<int> dims = f.layout_dims();
  // Contract edges front to back; after k contractions the layout is
  // [i_k..i_{n-1}, j_k..j_{n-1}, t..], so the current edge sits at slots
  // (0, n - k).
  for (int e = 0; e < n; ++e) {
    Matrix d = evaluate(make_irrep(f.sector.edge_spins[e]), g[e]);
    cur = contract_leg_pair(dims, 0, n - e, d, cur);
    dims.erase(dims.begin() + (n - e));
    dims.erase(dims.begin());
  }
  return cur;
}

std::vector<GroupElement> gauge_transform(const ColoredGraph& cg,
                                          const std::vector<GroupElement>& k,
                                          const std::vector<GroupElement>& g) {
  std::vector<GroupElement> out;
  for (size_t e = 0; e < cg.graph.edges.size(); ++e) {
    const Edge& edge = cg.graph.edges[e];
    out.push_back(k[edge.source] * g[e] * k[edge.target].inverse());
  }
  return out;
}

double equivariance_residual(const ColoredGraph& cg, const SpinGraphFunction& f,
                             int samples, uint64_t seed) {
  validate_colored_graph(cg);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    std::vector<GroupElement> k, g;
    for (const auto& color : cg.colors) k.push_back(random_gauge_element(color, rng));
    for (size_t e = 0; e < cg.graph.edges.size(); ++e) g.push_back(random_group_element(rng));

    Vector lhs = evaluate(f, gauge_transform(cg, k, g));
    Vector rhs = evaluate(f, g);
    // sigma(k) acts on the value tensor one vertex leg at a time.
    for (size_t v = 0; v < cg.colors.size(); ++v)
      rhs = apply_to_legs(f.sigma_dims, {int(v)}, sigma_matrix(cg.colors[v], k[v]), rhs);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<SpinGraphFunction> sector_basis(const ColoredGraph& cg) {
  validate_colored_graph(cg);
  size_t nv = cg.graph.vertices.size();
  std::vector<InvariantBasis> bases;
  for (size_t v = 0; v < nv; ++v) bases.push_back(invariant_basis(star_space(cg, int(v))));

  std::vector<SpinGraphFunction> out;
  long total = 1;
  for (const auto& b : bases) total *= b.dim();
  if (total == 0) return out;

  std::vector<int> pick(nv, 0);
  for (long c = 0; c < total; ++c) {
    std::vector<Vector> tensors;
    for (size_t v = 0; v < nv; ++v) tensors.push_back(bases[v].vectors[pick[v]]);
    out.push_back(assemble_psi(cg, tensors));
    for (size_t v = nv; v-- > 0;) {
      if (++pick[v] < bases[v].dim()) break;
      pick[v] = 0;
    }
  }
  return out;
}

SectorReport sector_dimension(const ColoredGraph& cg) {
  validate_colored_graph(cg);
  SectorReport rep;
  rep.sector = cg.sector;
  rep.total_dim = 1;
  for (size_t v = 0; v < cg.graph.vertices.size(); ++v) {
    int d = invariant_basis(star_space(cg, int(v))).dim();
    rep.vertex_dims.push_back(d);
    rep.total_dim *= d;
  }
  return rep;
}

HaarMoments::HaarMoments(int order) : order_(order), nodes_(haar_quadrature(order)) {}

const Matrix& HaarMoments::pair_moment(Spin a, Spin b) {
  auto key = std::make_pair(a.twice_j, b.twice_j);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  Irrep ra = make_irrep(a), rb = make_irrep(b);
  long da = a.dim(), db = b.dim();
  Matrix q = Matrix::Zero(da * da, db * db);
  for (const auto& node : nodes_) {
    Matrix ma = evaluate(ra, node.g), mb = evaluate(rb, node.g);
    for (long i = 0; i < da; ++i)
      for (long j = 0; j < da; ++j)
        for (long i2 = 0; i2 < db; ++i2)
          for (long j2 = 0; j2 < db; ++j2)
            q(i * da + j, i2 * db + j2) +=
                node.weight * std::conj(ma(i, j)) * mb(i2, j2);
  }
  return cache_.emplace(key, std::move(q)).first->second;
}

Complex l2_inner_product(const SpinGraphFunction& f, const SpinGraphFunction& h,
                         HaarMoments& moments) {
  if (f.sigma_dims != h.sigma_dims)
    throw std::invalid_argument("functions live over different vertex modules");
  if (f.n_edges() != h.n_edges())
    throw std::invalid_argument("functions live over different edge sets");
  int n = f.n_edges();

  // Pair the (i_e, j_e) slots of conj(f) against the (i'_e, j'_e) slots of h
  // through the per-edge quadrature moments, then trace the sigma legs.
  auto fdims = f.layout_dims();
  auto hdims = h.layout_dims();
  auto fstr = tensor_strides(fdims);
  auto hstr = tensor_strides(hdims);

  long sdim = f.s_dim();
  Complex acc = 0;
  // Odometer over (i, j) of f and (i', j') of h.
  std::vector<int> fi(2 * n, 0), hi(2 * n, 0);
  auto advance = [](std::vector<int>& idx, const std::vector<int>& dims) {
    for (size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < dims[k]) return true;
      idx[k] = 0;
    }
    return false;
  };
  std::vector<int> fedge(fdims.begin(), fdims.begin() + 2 * n);
  std::vector<int> hedge(hdims.begin(), hdims.begin() + 2 * n);
  do {
    std::fill(hi.begin(), hi.end(), 0);
    do {
      Complex mom = 1;
      for (int e = 0; e < n && mom != Complex(0, 0); ++e) {
        const Matrix& q = moments.pair_moment(f.sector.edge_spins[e], h.sector.edge_spins[e]);
        mom *= q(long(fi[e]) * f.edge_dims[e] + fi[n + e],
                 long(hi[e]) * h.edge_dims[e] + hi[n + e]);
      }
      if (mom == Complex(0, 0)) continue;
      long fbase = 0, hbase = 0;
      for (int k = 0; k < 2 * n; ++k) {
        fbase += fi[k] * fstr[k];
        hbase += hi[k] * hstr[k];
      }
      Complex dot = 0;
      for (long t = 0; t < sdim; ++t)
        dot += std::conj(f.coeffs(fbase + t)) * h.coeffs(hbase + t);
      acc += mom * dot;
    } while (advance(hi, hedge));
  } while (advance(fi, fedge));
  return acc;
}

Matrix gram_matrix(const std::vector<SpinGraphFunction>& fs, HaarMoments& moments) {
  long n = long(fs.size());
  Matrix g(n, n);
  for (long a = 0; a < n; ++a)
    for (long b = a; b < n; ++b) {
      g(a, b) = l2_inner_product(fs[a], fs[b], moments);
      g(b, a) = std::conj(g(a, b));
    }
  return g;
}

}  // namespace spingraph
