#pragma once

#include <optional>
#include <random>
#include <vector>

#include "spingraph/types.hpp"

namespace spingraph {

// Irreducible representation of spin j on C^{2j+1}.
//
// Basis is |j, m> with m descending: index 0 is m = j, index 2j is m = -j.
// jz is diagonal, jplus/jminus are the ladder operators with the standard
// matrix elements sqrt(j(j+1) - m(m +- 1)).  These are the complexified
// (Hermitian jz, jplus = jminus^dagger) generators; the real form su(2) is
// spanned by -i*jx, -i*jy, -i*jz.
struct Irrep {
  Spin spin;
  Matrix jz, jplus, jminus;

  Matrix jx() const { return 0.5 * (jplus + jminus); }
  Matrix jy() const { return Complex(0, -0.5) * (jplus - jminus); }
  int dim() const { return spin.dim(); }
};

Irrep make_irrep(Spin s);

// z-y-z Euler angles with alpha in [0, 2pi), beta in [0, pi], gamma in [0, 4pi).
// This chart covers SU(2) once (up to measure zero) and gives the Wigner matrix
//   D^j_{m m'}(alpha, beta, gamma) = e^{-i m alpha} d^j_{m m'}(beta) e^{-i m' gamma}.
struct EulerAngles {
  double alpha = 0, beta = 0, gamma = 0;
};

// Group element of SU(2) held as its defining 2x2 matrix, with the Euler chart
// cached when known.  Construction validates unitarity and det = 1.
struct GroupElement {
  Matrix2 m = Matrix2::Identity();
  std::optional<EulerAngles> euler;

  static GroupElement identity();
  static GroupElement from_euler(double alpha, double beta, double gamma);
  static GroupElement from_matrix(const Matrix2& m);
  // Torus element diag(e^{i t}, e^{-i t}).
  static GroupElement torus(double t);

  GroupElement inverse() const;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

// Recovers the Euler chart of an SU(2) matrix (alpha in [0,2pi), beta in [0,pi],
// gamma in [0,4pi)); the reconstruction reproduces the matrix, not just +-it.
EulerAngles euler_from_matrix(const Matrix2& m);

// Wigner little-d matrix d^j_{m m'}(beta), indexed like Irrep (m descending).
Matrix wigner_d(Spin s, double beta);

// Evaluates the spin-s representation matrix at g.  Two independent paths are
// used: the Euler-chart Wigner matrix, and exp of the lifted su(2) logarithm.
// Their disagreement beyond 1e-10 throws; elements within ~1e-3 of rotation
// angle pi (trace near -2) skip the log path, whose axis extraction is
// ill-conditioned there, and use the Euler chart alone.
Matrix evaluate(const Irrep& rep, const GroupElement& g);

// trace of evaluate(spin s, g); real for SU(2).
Complex character(Spin s, const GroupElement& g);

// Multiplicity of spin j3 inside j1 (x) j2: 1 iff |j1-j2| <= j3 <= j1+j2 and
// j1+j2+j3 is an integer, else 0.
int cg_multiplicity(Spin j1, Spin j2, Spin j3);

// Node of a Haar quadrature rule on SU(2).
struct HaarNode {
  GroupElement g;
  double weight;
};

// Product rule on the Euler chart: `order` uniform points in alpha, `order`
// Gauss-Legendre points in cos(beta), 2*`order` uniform points in gamma,
// density sin(beta)/(16 pi^2).  Exact (to roundoff) on products of two matrix
// coefficients whenever the spins sum to at most order - 1.
std::vector<HaarNode> haar_quadrature(int order);

// Haar-uniform SU(2) sample via a normalized Gaussian quaternion.
GroupElement random_group_element(std::mt19937_64& rng);

}  // namespace spingraph
