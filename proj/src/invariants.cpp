#include "spingraph/invariants.hpp"

#include <cmath>
#include <numbers>

namespace spingraph {

std::vector<int> StarSpace::m_leg_dims() const {
  std::vector<int> d;
  for (const auto& l : legs) d.push_back(l.dim());
  return d;
}

std::vector<int> StarSpace::full_leg_dims() const {
  auto d = m_leg_dims();
  d.push_back(sigma_dim());
  return d;
}

StarSpace star_space(const ColoredGraph& cg, int vertex) {
  validate_colored_graph(cg);
  Star st = star(cg.graph, vertex);
  StarSpace ss;
  ss.vertex = vertex;
  ss.color = cg.colors[vertex];
  for (int e : st.out_edges) ss.legs.push_back({e, true, cg.sector.edge_spins[e]});
  for (int e : st.in_edges) ss.legs.push_back({e, false, cg.sector.edge_spins[e]});
  ss.m_dim = 1;
  for (const auto& l : ss.legs) ss.m_dim *= l.dim();
  ss.dim = ss.m_dim * ss.sigma_dim();

  // Torus weight of every flattened basis vector.  Leg index a means m = j - a,
  // weight 2m on a plain leg and -2m on a dual leg; sigma contributes its own
  // weight (2m for a Full spin, n for a Torus character, 0 for Trivial).
  ss.weights.assign(ss.dim, 0);
  auto dims = ss.full_leg_dims();
  auto strides = tensor_strides(dims);
  for (long idx = 0; idx < ss.dim; ++idx) {
    long rem = idx;
    int w = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
      int a = int(rem / strides[k]);
      rem %= strides[k];
      if (k < ss.legs.size()) {
        int leg_w = ss.legs[k].spin.twice_j - 2 * a;
        w += ss.legs[k].dual ? -leg_w : leg_w;
      } else {
        switch (ss.color.gauge) {
          case GaugeGroupKind::Full: w += ss.color.sigma_spin.twice_j - 2 * a; break;
          case GaugeGroupKind::Torus: w += ss.color.sigma_weight.n; break;
          case GaugeGroupKind::Trivial: break;
        }
      }
    }
    ss.weights[idx] = w;
  }
  return ss;
}

std::vector<Matrix> sigma_generators(const VertexColor& color) {
  switch (color.gauge) {
    case GaugeGroupKind::Full: {
      Irrep rep = make_irrep(color.sigma_spin);
      return {rep.jz, rep.jplus, rep.jminus};
    }
    case GaugeGroupKind::Torus: {
      Matrix w(1, 1);
      w(0, 0) = color.sigma_weight.n;
      return {w};
    }
    case GaugeGroupKind::Trivial:
      return {};
  }
  throw std::logic_error("unreachable");
}

namespace {

// Generator matrices per leg for one abstract generator.  For Full gauge the
// generator slot is 0,1,2 = jz, j+, j-; a dual leg carries x -> -x^T.  For
// Torus the single generator is the integer weight operator.
Matrix leg_generator(const StarLeg& leg, GaugeGroupKind gauge, int slot) {
  Irrep rep = make_irrep(leg.spin);
  Matrix x;
  if (gauge == GaugeGroupKind::Full) {
    x = slot == 0 ? rep.jz : (slot == 1 ? rep.jplus : rep.jminus);
  } else {
    x = 2.0 * rep.jz;  // weights n = 2m
  }
  return leg.dual ? Matrix(-x.transpose()) : x;
}

std::vector<Matrix> diagonal_generators(const StarSpace& ss, bool include_sigma) {
  auto dims = include_sigma ? ss.full_leg_dims() : ss.m_leg_dims();
  long n = tensor_size(dims);
  int slots = ss.color.gauge == GaugeGroupKind::Full ? 3
              : ss.color.gauge == GaugeGroupKind::Torus ? 1 : 0;
  std::vector<Matrix> out;
  for (int slot = 0; slot < slots; ++slot) {
    Matrix acc = Matrix::Zero(n, n);
    for (size_t k = 0; k < ss.legs.size(); ++k)
      acc += leg_operator(dims, int(k), leg_generator(ss.legs[k], ss.color.gauge, slot));
    if (include_sigma)
      acc += leg_operator(dims, int(ss.legs.size()), sigma_generators(ss.color)[slot]);
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

std::vector<Matrix> gauge_generators(const StarSpace& ss) {
  return diagonal_generators(ss, true);
}

std::vector<Matrix> gauge_generators_m(const StarSpace& ss) {
  return diagonal_generators(ss, false);
}

InvariantBasis invariant_basis(const StarSpace& ss) {
  InvariantBasis basis;
  basis.vertex = ss.vertex;
  switch (ss.color.gauge) {
    case GaugeGroupKind::Trivial: {
      for (int k = 0; k < ss.dim; ++k) {
        Vector v = Vector::Zero(ss.dim);
        v(k) = 1;
        basis.vectors.push_back(std::move(v));
      }
      return basis;
    }
    case GaugeGroupKind::Torus: {
      for (int k = 0; k < ss.dim; ++k) {
        if (ss.weights[k] == 0) {
          Vector v = Vector::Zero(ss.dim);
          v(k) = 1;
          basis.vectors.push_back(std::move(v));
        }
      }
      return basis;
    }
    case GaugeGroupKind::Full: {
      auto gens = gauge_generators(ss);
      Matrix stacked(3 * ss.dim, ss.dim);
      for (int k = 0; k < 3; ++k) stacked.middleRows(k * ss.dim, ss.dim) = gens[k];
      Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
      double largest = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
      double tol = 1e-10 * largest;
      for (int k = 0; k < ss.dim; ++k) {
        double sv = k < svd.singularValues().size() ? svd.singularValues()(k) : 0.0;
        if (sv <= tol) basis.vectors.push_back(svd.matrixV().col(k));
      }
      return basis;
    }
  }
  throw std::logic_error("unreachable");
}

int dimension_oracle(const StarSpace& ss) {
  int weight_span = 0;
  for (const auto& l : ss.legs) weight_span += l.spin.twice_j;

  double value = 0;
  switch (ss.color.gauge) {
    case GaugeGroupKind::Trivial:
      return ss.dim;
    case GaugeGroupKind::Torus: {
      weight_span += std::abs(ss.color.sigma_weight.n);
      int npts = weight_span + 1;
      Complex acc = 0;
      for (int k = 0; k < npts; ++k) {
        double t = 2 * std::numbers::pi * k / npts;
        Complex prod = std::exp(Complex(0, ss.color.sigma_weight.n * t));
        for (const auto& l : ss.legs) {
          Complex chi = 0;
          for (int a = 0; a <= l.spin.twice_j; ++a)
            chi += std::exp(Complex(0, (l.spin.twice_j - 2 * a) * t));
          prod *= l.dual ? std::conj(chi) : chi;
        }
        acc += prod;
      }
      value = (acc / double(npts)).real();
      break;
    }
    case GaugeGroupKind::Full: {
      weight_span += ss.color.sigma_spin.twice_j;
      int order = weight_span / 2 + 2;
      double acc = 0;
      for (const auto& node : haar_quadrature(order)) {
        Complex prod = character(ss.color.sigma_spin, node.g);
        for (const auto& l : ss.legs) {
          Complex chi = character(l.spin, node.g);
          prod *= l.dual ? std::conj(chi) : chi;
        }
        acc += node.weight * prod.real();
      }
      value = acc;
      break;
    }
  }
  double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6)
    throw std::runtime_error("character quadrature did not produce an integer: " +
                             std::to_string(value));
  return int(rounded);
}

double hom_intertwining_residual(const StarSpace& ss, const Matrix& hom) {
  if (hom.rows() != ss.m_dim || hom.cols() != ss.sigma_dim())
    throw std::invalid_argument("hom has wrong shape for this star space");
  auto gm = gauge_generators_m(ss);
  auto gs = sigma_generators(ss.color);
  double norm = hom.norm();
  if (norm == 0) return 0;
  double worst = 0;
  for (size_t k = 0; k < gm.size(); ++k) {
    double r = (gm[k] * hom + hom * gs[k].transpose()).norm() / norm;
    worst = std::max(worst, r);
  }
  return worst;
}

Vector tau(const StarSpace& ss, const Matrix& hom) {
  double residual = hom_intertwining_residual(ss, hom);
  if (residual > 1e-8)
    throw std::invalid_argument("map is not K_v-equivariant (residual " +
                                std::to_string(residual) + ")");
  Vector out(ss.dim);
  for (int m = 0; m < ss.m_dim; ++m)
    for (int t = 0; t < ss.sigma_dim(); ++t) out(long(m) * ss.sigma_dim() + t) = hom(m, t);
  return out;
}

Matrix tau_inverse(const StarSpace& ss, const Vector& tensor) {
  if (tensor.size() != ss.dim)
    throw std::invalid_argument("tensor has wrong length for this star space");
  Matrix hom(ss.m_dim, ss.sigma_dim());
  for (int m = 0; m < ss.m_dim; ++m)
    for (int t = 0; t < ss.sigma_dim(); ++t) hom(m, t) = tensor(long(m) * ss.sigma_dim() + t);
  return hom;
}

Vector kiso(const StarSpace& ss, const Matrix& phi) {
  if (phi.rows() != ss.sigma_dim() || phi.cols() != ss.m_dim)
    throw std::invalid_argument("map has wrong shape for this star space");
  // Phi: (M^{pi_S(v)})^* -> S_v must intertwine; the dual star action is
  // x -> -dpi_S(x)^T, so the condition reads  -Phi dpi_S(x)^T = sigma(x) Phi.
  auto gm = gauge_generators_m(ss);
  auto gs = sigma_generators(ss.color);
  double norm = phi.norm();
  if (norm > 0) {
    for (size_t k = 0; k < gm.size(); ++k) {
      double r = (phi * gm[k].transpose() + gs[k] * phi).norm() / norm;
      if (r > 1e-8)
        throw std::invalid_argument("map is not K_v-equivariant (residual " +
                                    std::to_string(r) + ")");
    }
  }
  Vector out(ss.dim);
  for (int m = 0; m < ss.m_dim; ++m)
    for (int t = 0; t < ss.sigma_dim(); ++t) out(long(m) * ss.sigma_dim() + t) = phi(t, m);
  return out;
}

HomBasis hom_basis(const StarSpace& ss) {
  InvariantBasis inv = invariant_basis(ss);
  HomBasis out;
  out.vertex = ss.vertex;
  for (const auto& v : inv.vectors) out.maps.push_back(tau_inverse(ss, v));
  return out;
}

}  // namespace spingraph
