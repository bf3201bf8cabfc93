#include "spingraph/hamiltonians.hpp"

#include <cmath>

namespace spingraph {

Matrix casimir_matrix(const Irrep& rep) {
  return rep.jz * rep.jz + 0.5 * (rep.jplus * rep.jminus + rep.jminus * rep.jplus);
}

double central_character(Spin s) {
  Irrep rep = make_irrep(s);
  Matrix c = casimir_matrix(rep);
  double j = s.j();
  double expected = j * (j + 1);
  if ((c - expected * Matrix::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff() > 1e-12)
    throw std::runtime_error("Casimir matrix is not scalar");
  return expected;
}

SpinGraphFunction apply_edge_casimir(const SpinGraphFunction& f, int edge) {
  if (edge < 0 || edge >= f.n_edges()) throw std::invalid_argument("edge index out of range");
  SpinGraphFunction out = f;
  Matrix omega = casimir_matrix(make_irrep(f.sector.edge_spins[edge]));
  // Column block of the chosen edge: layout slot n + edge.
  out.coeffs = apply_to_legs(f.layout_dims(), {f.n_edges() + edge}, omega, f.coeffs);
  return out;
}

Vector finite_difference_casimir(const SpinGraphFunction& f, int edge,
                                 const std::vector<GroupElement>& g, double step) {
  if (edge < 0 || edge >= f.n_edges()) throw std::invalid_argument("edge index out of range");
  if (step <= 0) throw std::invalid_argument("step must be positive");

  // exp(s * (-i sigma_a / 2)) for the three Pauli directions.
  auto direction = [&](int a, double s) {
    double c = std::cos(s / 2), sn = std::sin(s / 2);
    Matrix2 m;
    Complex i(0, 1);
    switch (a) {
      case 0: m << c, -i * sn, -i * sn, c; break;          // sigma_x
      case 1: m << c, -sn, sn, c; break;                   // sigma_y
      default: m << c - i * sn, 0, 0, c + i * sn; break;   // sigma_z
    }
    return GroupElement::from_matrix(m);
  };

  Vector center = evaluate(f, g);
  Vector acc = Vector::Zero(center.size());
  for (int a = 0; a < 3; ++a) {
    for (double sgn : {1.0, -1.0}) {
      std::vector<GroupElement> shifted = g;
      shifted[edge] = shifted[edge] * direction(a, sgn * step);
      acc += evaluate(f, shifted);
    }
    acc -= 2 * center;
  }
  // The complexified Casimir is -(sum of squares over the real basis).
  return -acc / (step * step);
}

std::vector<EigenvalueRow> eigenvalue_table(const OrientedGraph& graph,
                                            const std::vector<VertexColor>& colors,
                                            Spin max_spin) {
  std::vector<EigenvalueRow> rows;
  for (const auto& sector : enumerate_sectors(graph, max_spin)) {
    ColoredGraph cg{graph, colors, sector};
    EigenvalueRow row;
    row.sector = sector;
    for (const auto& s : sector.edge_spins) row.casimir_values.push_back(central_character(s));
    row.dim = sector_dimension(cg).total_dim;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace spingraph
