#pragma once

#include "spingraph/spin_functions.hpp"

namespace spingraph {

// Casimir matrix jz^2 + (j+ j- + j- j+)/2 in the spin-j irrep; equals
// j(j+1) * I exactly (checked to 1e-12 by central_character).
Matrix casimir_matrix(const Irrep& rep);

// The scalar j(j+1) by which the Casimir acts, verified against the matrix.
double central_character(Spin s);

// Edge Hamiltonian H_e: the Casimir acting through right translations on the
// e-th copy of G.  On matrix coefficients this is exact linear algebra: the
// Casimir matrix hits the M^{pi_e} (column) index block of the coefficient
// tensor, so the result is central_character(pi_e) times the input.
SpinGraphFunction apply_edge_casimir(const SpinGraphFunction& f, int edge);

// Independent check of the same operator by central second differences along
// the right translations g_e -> g_e exp(s x_a) over an orthonormal su(2)
// basis x_a = -i sigma_a / 2:
//   (H_e f)(g) ~ -sum_a [f(g e^{h x_a}) - 2 f(g) + f(g e^{-h x_a})] / h^2.
Vector finite_difference_casimir(const SpinGraphFunction& f, int edge,
                                 const std::vector<GroupElement>& g, double step);

// Joint spectrum table over all sectors up to max_spin: per-edge Casimir
// eigenvalues j_e(j_e+1) plus the sector dimension.
struct EigenvalueRow {
  Sector sector;
  std::vector<double> casimir_values;
  long dim = 0;
};

std::vector<EigenvalueRow> eigenvalue_table(const OrientedGraph& graph,
                                            const std::vector<VertexColor>& colors,
                                            Spin max_spin);

}  // namespace spingraph
