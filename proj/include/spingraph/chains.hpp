#pragma once

#include "spingraph/spin_functions.hpp"

namespace spingraph {

// Partial trace over M of B: M -> M (x) S (rows grouped (k, s), k slowest):
//   Tr_M(B)[s] = sum_k B[(k, s), k].
// This is the unique vector with phi(Tr_M(B)) = Tr((id (x) phi) o B).
Vector partial_trace(const Matrix& b, int dim_m, int dim_s);

// Closed chain: cycle graph v_1..v_n, edge e_i from v_i to v_{i+1 mod n}.
// Data per site i (0-based): edge spin pi_i, vertex module spin sigma_i, and
// an intertwiner Phi_i in Hom_G(M^{pi_i}, M^{pi_{i-1}} (x) S_i), given as a
// (dim_{i-1} * s_i) x dim_i matrix.  The chain function is
//   f(g) = Tr_M( (Phi_1 pi_1(g_1) (x) id) ... (Phi_{n-1} pi_{n-1}(g_{n-1}) (x) id) Phi_n pi_n(g_n) )
// with values in S_1 (x) ... (x) S_n.
struct TraceChainSpec {
  std::vector<Spin> edge_spins;
  std::vector<Spin> vertex_spins;
  std::vector<Matrix> intertwiners;

  int n() const { return int(edge_spins.size()); }
};

void validate_trace_chain(const TraceChainSpec& spec);

Vector trace_function(const TraceChainSpec& spec, const std::vector<GroupElement>& g);

// The same chain as a colored cycle graph plus per-vertex tensors
//   Phi~_i = sum_k m*_{e_i,k} (x) Phi_i(m_{e_i,k}),
// whose assembly reproduces trace_function exactly.
ColoredGraph trace_chain_graph(const TraceChainSpec& spec);
std::vector<Vector> trace_chain_tensors(const TraceChainSpec& spec);

// Orthonormal basis of Hom_G(M^{domain}, M^{codomain} (x) S_sigma) as
// (codomain_dim * sigma_dim) x domain_dim matrices.
std::vector<Matrix> chain_intertwiner_basis(Spin domain, Spin codomain, Spin sigma);

// Q_{W,N}: Hom(N*, W) -> W (x) N, T -> sum_t T(n_t*) (x) n_t; coordinates are
// the identity reshape (W index slowest).
Vector q_map(const Matrix& t);

// Open chain: linear graph v_1 .. v_{n+1} with edge e_i from v_i to v_{i+1}.
// Boundary gauge groups H at v_1 (module L) and K at v_{n+1} (module N); bulk
// vertices carry G with modules S_2..S_n.  Data: Theta in Hom_H(M^{pi_1}, L)
// (dim_L x dim_1), bulk Phi_i as in the closed chain, Xi in Hom_K(N*, M^{pi_n})
// (dim_n x dim_N).  The chain function is
//   f(g) = Q( (Theta pi_1(g_1) (x) id) (Phi_2 pi_2(g_2) (x) id) ... Phi_n pi_n(g_n) Xi )
// with values in L (x) S_2 (x) ... (x) S_n (x) N.
struct SphericalChainSpec {
  std::vector<Spin> edge_spins;        // pi_1 .. pi_n
  std::vector<Spin> bulk_spins;        // sigma at v_2 .. v_n (size n-1)
  VertexColor left;                    // H and L at v_1
  VertexColor right;                   // K and N at v_{n+1}
  Matrix theta;                        // dim_L x dim_1
  std::vector<Matrix> intertwiners;    // Phi_2 .. Phi_n (size n-1)
  Matrix xi;                           // dim_n x dim_N

  int n() const { return int(edge_spins.size()); }
};

void validate_spherical_chain(const SphericalChainSpec& spec);

Vector spherical_function(const SphericalChainSpec& spec, const std::vector<GroupElement>& g);

// The same chain as a colored linear graph plus vertex tensors
//   Theta~ = sum_k m*_k (x) Theta(m_k),  Phi~_i,  Xi~ = sum_t Xi(n_t*) (x) n_t.
ColoredGraph spherical_chain_graph(const SphericalChainSpec& spec);
std::vector<Vector> spherical_chain_tensors(const SphericalChainSpec& spec);

// Orthonormal basis of Hom_H(M^{pi}, sigma_H) for a boundary color, returned
// as (sigma_dim x pi_dim) matrices.
std::vector<Matrix> boundary_hom_basis(Spin edge, const VertexColor& color);

// Orthonormal basis of Hom_K(sigma_K*, M^{pi}) as (pi_dim x sigma_dim).
std::vector<Matrix> boundary_cohom_basis(Spin edge, const VertexColor& color);

}  // namespace spingraph
