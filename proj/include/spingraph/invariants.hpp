#pragma once

#include "spingraph/coloring.hpp"
#include "spingraph/tensor.hpp"

namespace spingraph {

// One tensor factor of a star space: the edge module M^{pi_e} (plain) or its
// dual M^{pi_e *} (dual), depending on how the edge meets the vertex.
struct StarLeg {
  int edge = 0;
  bool dual = false;
  Spin spin;
  int dim() const { return spin.dim(); }
};

// The local space at a vertex:
//   M^{pi_S(v)} (x) S_v,  M^{pi_S(v)} = ((x)_{e out} M^{pi_e *}) (x) ((x)_{e in} M^{pi_e}),
// dual factors first, each block in global edge order, S_v last.  A loop
// contributes one dual and one plain factor.  Coordinates are flattened
// row-major (first leg slowest), so index = m_index * sigma_dim + t.
struct StarSpace {
  int vertex = 0;
  VertexColor color;
  std::vector<StarLeg> legs;
  int m_dim = 1;              // product of leg dims
  int dim = 1;                // m_dim * sigma dim
  std::vector<int> weights;   // per flattened index: total torus weight incl. sigma

  int sigma_dim() const { return color.sigma_dim(); }
  std::vector<int> m_leg_dims() const;     // leg dims
  std::vector<int> full_leg_dims() const;  // leg dims + sigma dim
};

StarSpace star_space(const ColoredGraph& cg, int vertex);

// Diagonal K_v generator actions.  Full: jz, j+, j- acting on every leg (dual
// legs through x -> -x^T) and on sigma; Torus: the single integer weight
// operator; Trivial: none.
std::vector<Matrix> gauge_generators(const StarSpace& ss);

// Same generators restricted to M^{pi_S(v)} (no sigma factor); for Torus this
// is the M-weight diagonal (sigma weight NOT included).
std::vector<Matrix> gauge_generators_m(const StarSpace& ss);

// sigma_v generator matrices matching gauge_generators order (spin matrices
// for Full, the 1x1 weight for Torus, none for Trivial).
std::vector<Matrix> sigma_generators(const VertexColor& color);

// Orthonormal basis of (M^{pi_S(v)} (x) S_v)^{K_v}.  Full gauge solves the
// SVD nullspace of the stacked generator actions (singular values below
// 1e-10 * largest count as zero); Torus keeps exactly the integer-weight-0
// coordinate vectors; Trivial keeps everything.
struct InvariantBasis {
  int vertex = 0;
  std::vector<Vector> vectors;
  int dim() const { return int(vectors.size()); }
};

InvariantBasis invariant_basis(const StarSpace& ss);

// Invariant dimension recomputed from character theory alone: quadrature of
// the product of factor characters (duals conjugated) times the sigma
// character, over K_v.  Exact integer up to roundoff; cross-checks the SVD.
int dimension_oracle(const StarSpace& ss);

// Hom(S_v*, M^{pi_S(v)}) elements are (m_dim x sigma_dim) matrices: column t
// is the image of the dual basis vector u_t^*.  tau sends such a map to
// sum_t hom(u_t^*) (x) u_t, which in coordinates is the identity reshape;
// its content is K_v-equivariance, so non-intertwining inputs (residual
// above 1e-8 relative) are rejected.
Vector tau(const StarSpace& ss, const Matrix& hom);
Matrix tau_inverse(const StarSpace& ss, const Vector& tensor);

// Intertwining residual of a Hom(S_v*, M) candidate: max over generators x of
// || dpi_S(x) T + T sigma(x)^T || / ||T||.
double hom_intertwining_residual(const StarSpace& ss, const Matrix& hom);

// Embedding of Hom_{K_v}((M^{pi_S(v)})^*, S_v) into the invariants of
// M^{pi_S(v)} (x) S_v:  Phi -> sum_{i,j} m_i* (x) m_j (x) Phi(m_i (x) m_j*).
// Phi is passed as a (sigma_dim x m_dim) matrix over the dual-star
// coordinates; non-intertwining inputs are rejected like tau.
Vector kiso(const StarSpace& ss, const Matrix& phi);

// Hom basis matching invariant_basis through tau (bijective correspondence).
struct HomBasis {
  int vertex = 0;
  std::vector<Matrix> maps;  // each m_dim x sigma_dim, orthonormal in Frobenius
  int dim() const { return int(maps.size()); }
};

HomBasis hom_basis(const StarSpace& ss);

}  // namespace spingraph
