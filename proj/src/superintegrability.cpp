#include "spingraph/superintegrability.hpp"

#include <cmath>

namespace spingraph {

namespace {

// Per-leg matrices of the complexified generators jx, jy, jz (dual legs
// through x -> -x^T, which is the derivative of pi*(g) = pi(g^{-1})^T).
std::vector<Matrix> leg_xyz(const StarLeg& leg) {
  Irrep rep = make_irrep(leg.spin);
  std::vector<Matrix> out{rep.jx(), rep.jy(), rep.jz};
  if (leg.dual)
    for (auto& x : out) x = -x.transpose().eval();
  return out;
}

// Orthonormal basis (Frobenius) of the column span of flattened matrices.
std::vector<Matrix> orthonormal_span(const std::vector<Matrix>& mats, int dim) {
  if (mats.empty()) return {};
  Matrix stacked(long(dim) * dim, long(mats.size()));
  for (size_t k = 0; k < mats.size(); ++k)
    stacked.col(long(k)) = Eigen::Map<const Vector>(mats[k].data(), long(dim) * dim);
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  double tol = 1e-10 * svd.singularValues()(0);
  std::vector<Matrix> out;
  for (long k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()(k) <= tol) break;
    out.push_back(Eigen::Map<const Matrix>(svd.matrixU().col(k).data(), dim, dim));
  }
  return out;
}

}  // namespace

LocalInvariantAlgebra leg_casimirs_only(const StarSpace& ss) {
  LocalInvariantAlgebra alg;
  alg.vertex = ss.vertex;
  alg.degree_cap = 2;
  auto mdims = ss.m_leg_dims();
  for (size_t p = 0; p < ss.legs.size(); ++p) {
    auto xs = leg_xyz(ss.legs[p]);
    Matrix acc = Matrix::Zero(ss.m_dim, ss.m_dim);
    for (const auto& x : xs) {
      Matrix lifted = leg_operator(mdims, int(p), x);
      acc += lifted * lifted;
    }
    alg.generators.push_back(std::move(acc));
  }
  alg.span_dim = int(alg.generators.size());
  return alg;
}

LocalInvariantAlgebra invariant_generators(const StarSpace& ss, int degree_cap) {
  if (degree_cap < 2) throw std::invalid_argument("degree cap must be at least 2");
  LocalInvariantAlgebra alg;
  alg.vertex = ss.vertex;
  alg.degree_cap = degree_cap;

  auto mdims = ss.m_leg_dims();
  int nlegs = int(ss.legs.size());
  // Lifted jx, jy, jz per leg, acting on M^{pi_S(v)}.
  std::vector<std::array<Matrix, 3>> lifted(nlegs);
  for (int p = 0; p < nlegs; ++p) {
    auto xs = leg_xyz(ss.legs[p]);
    for (int a = 0; a < 3; ++a) lifted[p][a] = leg_operator(mdims, p, xs[a]);
  }

  // Single-leg and split Casimirs first; both are diagonal-adjoint invariant
  // for any K_v contained in SU(2).
  for (int p = 0; p < nlegs; ++p) {
    Matrix acc = Matrix::Zero(ss.m_dim, ss.m_dim);
    for (int a = 0; a < 3; ++a) acc += lifted[p][a] * lifted[p][a];
    alg.generators.push_back(std::move(acc));
  }
  for (int p = 0; p < nlegs; ++p)
    for (int q = p + 1; q < nlegs; ++q) {
      Matrix acc = Matrix::Zero(ss.m_dim, ss.m_dim);
      for (int a = 0; a < 3; ++a) acc += lifted[p][a] * lifted[q][a];
      alg.generators.push_back(std::move(acc));
    }

  // PBW monomials: per leg an ordered product jx^a jy^b jz^c, total degree
  // over all legs <= cap.  Enumerate exponent vectors over the 3*nlegs slots.
  std::vector<Matrix> monomials;
  std::vector<int> expo(size_t(3) * nlegs, 0);
  auto emit = [&] {
    Matrix m = Matrix::Identity(ss.m_dim, ss.m_dim);
    for (int p = 0; p < nlegs; ++p)
      for (int a = 0; a < 3; ++a)
        for (int rep = 0; rep < expo[size_t(3) * p + a]; ++rep) m = lifted[p][a] * m;
    monomials.push_back(std::move(m));
  };
  // Recursive enumeration of total degree <= cap.
  auto enumerate = [&](auto&& self, size_t slot, int remaining) -> void {
    if (slot == expo.size()) {
      emit();
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      expo[slot] = d;
      self(self, slot + 1, remaining - d);
    }
    expo[slot] = 0;
  };
  enumerate(enumerate, 0, degree_cap);

  auto span = orthonormal_span(monomials, ss.m_dim);

  // Diagonal adjoint action of k_v on the span: ad X (B) = X B - B X for the
  // diagonal generators X (no sigma; U(g)^{(v)} does not touch S_v).  The
  // abstract filtration piece is ad-stable, so restricting ad to the span and
  // taking the joint kernel finds exactly the invariant subspace.
  auto kgens = gauge_generators_m(ss);
  if (kgens.empty()) {
    // Trivial K_v: the whole span is invariant.
    for (const auto& b : span) alg.generators.push_back(b);
    alg.span_dim = int(span.size());
    return alg;
  }

  long sdim = long(span.size());
  Matrix stacked(long(kgens.size()) * sdim, sdim);
  for (size_t kx = 0; kx < kgens.size(); ++kx) {
    for (long b = 0; b < sdim; ++b) {
      Matrix ad = kgens[kx] * span[b] - span[b] * kgens[kx];
      Eigen::Map<const Vector> ad_flat(ad.data(), long(ss.m_dim) * ss.m_dim);
      for (long c = 0; c < sdim; ++c) {
        Eigen::Map<const Vector> basis_flat(span[c].data(), long(ss.m_dim) * ss.m_dim);
        stacked(long(kx) * sdim + c, b) = basis_flat.dot(ad_flat);
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  double largest = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double tol = std::max(1e-10 * largest, 1e-12);
  int inv_count = 0;
  for (long k = 0; k < sdim; ++k) {
    double sv = k < svd.singularValues().size() ? svd.singularValues()(k) : 0.0;
    if (sv > tol) continue;
    Matrix gen = Matrix::Zero(ss.m_dim, ss.m_dim);
    for (long b = 0; b < sdim; ++b) gen += svd.matrixV()(b, k) * span[b];
    alg.generators.push_back(std::move(gen));
    ++inv_count;
  }
  alg.span_dim = inv_count;

  // Contract: every returned generator commutes with the diagonal action.
  for (const auto& gen : alg.generators) {
    double scale = std::max(1.0, gen.norm());
    for (const auto& x : kgens) {
      double c = (x * gen - gen * x).norm() / scale;
      if (c > 1e-10)
        throw std::runtime_error("invariant generator fails to commute: " + std::to_string(c));
    }
  }
  return alg;
}

MultiplicityModule module_action(const StarSpace& ss, const HomBasis& homs,
                                 const LocalInvariantAlgebra& alg) {
  MultiplicityModule mod;
  mod.vertex = ss.vertex;
  mod.dim = homs.dim();
  for (const auto& gen : alg.generators) {
    Matrix action(mod.dim, mod.dim);
    double residual = 0;
    for (int c = 0; c < mod.dim; ++c) {
      Matrix image = gen * homs.maps[c];  // codomain action (A . T)(xi) = A(T(xi))
      Matrix remainder = image;
      for (int r = 0; r < mod.dim; ++r) {
        Complex coeff = (homs.maps[r].conjugate().cwiseProduct(image)).sum();
        action(r, c) = coeff;
        remainder -= coeff * homs.maps[r];
      }
      residual = std::max(residual, remainder.norm() / std::max(1.0, image.norm()));
    }
    mod.closure_residual = std::max(mod.closure_residual, residual);
    mod.actions.push_back(std::move(action));
  }
  if (mod.closure_residual > 1e-9)
    throw std::runtime_error("module action does not close on the Hom basis (residual " +
                             std::to_string(mod.closure_residual) + ")");
  return mod;
}

int commutant_dimension(const MultiplicityModule& mod) {
  if (mod.dim < 1) throw std::invalid_argument("module must have dimension >= 1");
  long r = mod.dim;
  if (mod.actions.empty()) return int(r * r);
  Matrix stacked(long(mod.actions.size()) * r * r, r * r);
  for (size_t k = 0; k < mod.actions.size(); ++k) {
    const Matrix& a = mod.actions[k];
    // [X, A] flattened: (A^T (x) I - I (x) A) acting on vec(X) row-major:
    // build by columns instead, entrywise.
    for (long xc = 0; xc < r * r; ++xc) {
      Matrix x = Matrix::Zero(r, r);
      x(xc / r, xc % r) = 1;
      Matrix comm = x * a - a * x;
      for (long e = 0; e < r * r; ++e)
        stacked(long(k) * r * r + e, xc) = comm(e / r, e % r);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  double largest = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double tol = std::max(1e-10 * largest, 1e-12);
  int null_dim = 0;
  for (long k = 0; k < r * r; ++k) {
    double sv = k < svd.singularValues().size() ? svd.singularValues()(k) : 0.0;
    if (sv <= tol) ++null_dim;
  }
  return null_dim;
}

int generated_algebra_dimension(const MultiplicityModule& mod) {
  if (mod.dim < 1) throw std::invalid_argument("module must have dimension >= 1");
  std::vector<Matrix> basis{Matrix::Identity(mod.dim, mod.dim)};
  for (const auto& a : mod.actions) basis.push_back(a);
  basis = orthonormal_span(basis, mod.dim);
  // Close under left multiplication by the generators.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Matrix> products = basis;
    for (const auto& a : mod.actions)
      for (const auto& b : basis) products.push_back(a * b);
    auto closed = orthonormal_span(products, mod.dim);
    if (closed.size() > basis.size()) {
      basis = std::move(closed);
      grew = true;
    }
  }
  return int(basis.size());
}

std::string verdict_text(Verdict v, int degree_cap) {
  switch (v) {
    case Verdict::Certified:
      return "certified-irreducible (degree <= " + std::to_string(degree_cap) + ")";
    case Verdict::Inconclusive:
      return "inconclusive at cap " + std::to_string(degree_cap);
    case Verdict::Empty:
      return "vacuous (empty sector)";
  }
  throw std::logic_error("unreachable");
}

SuperintCertificate certify(const ColoredGraph& cg, int degree_cap,
                            bool leg_casimirs_only_mode) {
  validate_colored_graph(cg);
  if (!cg.graph.connected)
    throw SpecError("certification requires a connected graph");
  SuperintCertificate cert;
  cert.sector = cg.sector;
  cert.degree_cap = degree_cap;

  size_t nv = cg.graph.vertices.size();
  std::vector<StarSpace> spaces;
  std::vector<HomBasis> homs;
  for (size_t v = 0; v < nv; ++v) {
    spaces.push_back(star_space(cg, int(v)));
    homs.push_back(hom_basis(spaces.back()));
    if (homs.back().dim() == 0) {
      cert.verdict = Verdict::Empty;
      return cert;
    }
  }

  bool all_one = true;
  for (size_t v = 0; v < nv; ++v) {
    LocalInvariantAlgebra alg = leg_casimirs_only_mode
                                    ? leg_casimirs_only(spaces[v])
                                    : invariant_generators(spaces[v], degree_cap);
    MultiplicityModule mod = module_action(spaces[v], homs[v], alg);
    VertexCertificate vc;
    vc.vertex = int(v);
    vc.module_dim = mod.dim;
    vc.algebra_dim = generated_algebra_dimension(mod);
    vc.commutant_dim = commutant_dimension(mod);
    all_one = all_one && vc.commutant_dim == 1;
    cert.vertices.push_back(vc);
  }
  cert.verdict = all_one ? Verdict::Certified : Verdict::Inconclusive;
  return cert;
}

}  // namespace spingraph
