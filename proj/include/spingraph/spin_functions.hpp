#pragma once

#include <map>

#include "spingraph/invariants.hpp"

namespace spingraph {

// A function G^E -> (x)_v S_v of the form
//   f(g)_t = sum_{i,j} c[i, j, t] * prod_e  D^{pi_e}(g_e)[i_e, j_e],
// i.e. a sum of products of matrix coefficients c^{pi}_{phi, m}(g) = phi(pi(g) m)
// with phi, m running over dual/plain basis vectors.  The coefficient tensor is
// flattened row-major over [i_1..i_n, j_1..j_n, t_1..t_r]: first all row (dual
// side) indices in edge order, then all column indices, then the sigma indices
// in vertex order.
struct SpinGraphFunction {
  Sector sector;
  std::vector<int> edge_dims;   // dim of pi_e per edge
  std::vector<int> sigma_dims;  // dim of S_v per vertex
  Vector coeffs;

  int n_edges() const { return int(edge_dims.size()); }
  long s_dim() const;
  std::vector<int> layout_dims() const;
};

// Psi: one tensor per vertex (coordinates of M^{pi_S(v)} (x) S_v) multiplies
// into the global coefficient tensor; each edge meets exactly one out-star and
// one in-star, so every coefficient slot is filled exactly once.  Inputs need
// not be invariant — equivariance of the result is exactly invariance of the
// inputs.
SpinGraphFunction assemble_psi(const ColoredGraph& cg, const std::vector<Vector>& tensors);

// Upsilon = Psi after reinterpreting Hom(S_v*, M^{pi_S(v)}) maps through tau:
//   f = sum c^{pi}_{m_i*, m_j} (x) (sum_t hom_v[t; i,j] u_t).
SpinGraphFunction assemble_upsilon(const ColoredGraph& cg, const std::vector<Matrix>& homs);

// Value of f at a connection (one group element per edge, edge order).
Vector evaluate(const SpinGraphFunction& f, const std::vector<GroupElement>& g);

// Gauge transform (k.g)_e = k_{s(e)} g_e k_{t(e)}^{-1}.
std::vector<GroupElement> gauge_transform(const ColoredGraph& cg,
                                          const std::vector<GroupElement>& k,
                                          const std::vector<GroupElement>& g);

// max over `samples` seeded random (k, g) of || f(k.g) - sigma(k) f(g) ||_inf.
double equivariance_residual(const ColoredGraph& cg, const SpinGraphFunction& f,
                             int samples, uint64_t seed);

// Orthonormal product basis of the invariant sector: one function per choice
// of per-vertex invariant basis vector.
std::vector<SpinGraphFunction> sector_basis(const ColoredGraph& cg);

struct SectorReport {
  Sector sector;
  std::vector<int> vertex_dims;  // invariant dimension per vertex
  long total_dim = 0;            // product of the factors = dim of the sector
};

SectorReport sector_dimension(const ColoredGraph& cg);

// L^2(G^E) inner products under the product Haar rule, factored per edge:
// the quadrature only ever sees single-edge moment tensors
//   Q_e[(i,j),(i',j')] = sum_nodes w * conj(D^{a}[i,j]) D^{b}[i',j'],
// so a rule exact on pairs of single-edge coefficients is exact here too.
class HaarMoments {
 public:
  explicit HaarMoments(int order);
  const Matrix& pair_moment(Spin a, Spin b);
  int order() const { return order_; }

 private:
  int order_;
  std::vector<HaarNode> nodes_;
  std::map<std::pair<int, int>, Matrix> cache_;
};

// <f, h> conjugate-linear in f; both functions must share sigma_dims.
Complex l2_inner_product(const SpinGraphFunction& f, const SpinGraphFunction& h,
                         HaarMoments& moments);

Matrix gram_matrix(const std::vector<SpinGraphFunction>& fs, HaarMoments& moments);

}  // namespace spingraph
