#pragma once

// Independent cross-checks for the test suites.  Everything here is computed
// from first principles (closed forms, counting arguments, dense linear
// algebra on explicit matrices) without reusing the library code paths under
// test, so agreement is evidence rather than tautology.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Angular momentum matrices in the m-descending basis, from the ladder
// formula sqrt(j(j+1) - m(m+1)).
struct AngularMomentum {
  Matrix jz, jp, jm;
};

inline AngularMomentum angular_momentum(int twice_j) {
  int d = twice_j + 1;
  AngularMomentum out{Matrix::Zero(d, d), Matrix::Zero(d, d), Matrix::Zero(d, d)};
  double j = 0.5 * twice_j;
  for (int a = 0; a < d; ++a) {
    double m = j - a;
    out.jz(a, a) = m;
    if (a > 0) out.jp(a - 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
    if (a + 1 < d) out.jm(a + 1, a) = std::sqrt(j * (j + 1) - m * (m - 1));
  }
  return out;
}

// Closed-form rotation matrices about the y-axis for spins 1/2 and 1.
inline Eigen::MatrixXd d_half(double beta) {
  Eigen::MatrixXd d(2, 2);
  double c = std::cos(beta / 2), s = std::sin(beta / 2);
  d << c, -s, s, c;
  return d;
}

inline Eigen::MatrixXd d_one(double beta) {
  Eigen::MatrixXd d(3, 3);
  double c = std::cos(beta), s = std::sin(beta);
  double r2 = std::numbers::sqrt2;
  d << 0.5 * (1 + c), -s / r2, 0.5 * (1 - c),
       s / r2,        c,       -s / r2,
       0.5 * (1 - c), s / r2,  0.5 * (1 + c);
  return d;
}

// Rotation angle of a 2x2 special unitary (conjugacy class label in [0, 2pi]).
inline double rotation_angle(const Eigen::Matrix2cd& u) {
  double half = 0.5 * u.trace().real();
  half = std::clamp(half, -1.0, 1.0);
  return 2.0 * std::acos(half);
}

// Character of the spin-j class with rotation angle theta:
// sum_{m=-j..j} e^{i m theta} = sin((2j+1)theta/2) / sin(theta/2).
inline double su2_character(int twice_j, double theta) {
  double acc = 0;
  for (int k = 0; k <= twice_j; ++k) acc += std::cos((0.5 * twice_j - k) * theta);
  return acc;
}

// Legendre polynomial by the three-term recurrence.
inline double legendre(int n, double x) {
  if (n == 0) return 1.0;
  double pm = 1.0, p = x;
  for (int k = 1; k < n; ++k) {
    double next = ((2 * k + 1) * x * p - k * pm) / (k + 1);
    pm = p;
    p = next;
  }
  return p;
}

// Multiplicity of spin c inside a (x) b: the triangle rule with parity.
inline int triangle_multiplicity(int ta, int tb, int tc) {
  if ((ta + tb + tc) % 2 != 0) return 0;
  return (tc >= std::abs(ta - tb) && tc <= ta + tb) ? 1 : 0;
}

// Dimension of the SU(2)-invariant subspace of a tensor product of irreps
// (one entry of `twice_js` per factor; self-duality makes orientation moot),
// via the Weyl integration formula evaluated on a uniform angle grid.  The
// integrand is a trigonometric polynomial, so a fine enough grid is exact.
inline long su2_invariant_count(const std::vector<int>& twice_js) {
  int span = 4;
  for (int t : twice_js) span += t;
  int npts = span + 1;
  double acc = 0;
  for (int k = 0; k < npts; ++k) {
    double phi = 2.0 * std::numbers::pi * k / npts;
    double s = std::sin(0.5 * phi);
    double term = s * s;
    for (int t : twice_js) term *= su2_character(t, phi);
    acc += term;
  }
  acc *= 2.0 / npts;
  long rounded = std::lround(acc);
  if (std::abs(acc - double(rounded)) > 1e-6) return -1;
  return rounded;
}

// Dimension of the torus-invariant subspace of a tensor product: the number
// of weight tuples summing (with orientation signs) to the opposite of the
// character weight.  Weight multisets of irreps are symmetric, so the count
// does not depend on sign conventions.
inline long torus_invariant_count(const std::vector<std::pair<int, bool>>& legs,
                                  int sigma_weight) {
  long count = 0;
  std::vector<int> idx(legs.size(), 0);
  while (true) {
    int total = sigma_weight;
    for (std::size_t l = 0; l < legs.size(); ++l) {
      int w = legs[l].first - 2 * idx[l];
      total += legs[l].second ? -w : w;
    }
    if (total == 0) ++count;
    std::size_t l = legs.size();
    while (l-- > 0) {
      if (++idx[l] <= legs[l].first) break;
      idx[l] = 0;
      if (l == 0) return count;
    }
    if (legs.empty()) return count;
  }
}

// Dimension of the joint commutant of a set of k x k matrices, by stacking
// the commutator equations and counting the kernel.
inline int commutant_dim_brute(const std::vector<Matrix>& mats, int k) {
  if (mats.empty()) return k * k;
  Matrix stacked(long(mats.size()) * k * k, long(k) * k);
  for (std::size_t a = 0; a < mats.size(); ++a) {
    const Matrix& m = mats[a];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int p = 0; p < k; ++p)
          for (int q = 0; q < k; ++q) {
            // row (i,j): coefficient of X(p,q) in (X m - m X)(i,j)
            Complex c = 0;
            if (p == i) c += m(q, j);
            if (q == j) c -= m(i, p);
            stacked(long(a) * k * k + long(i) * k + j, long(p) * k + q) = c;
          }
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  int kernel = k * k;
  for (long i = 0; i < sv.size(); ++i) {
    if (sv(i) > std::max(1e-10 * top, 1e-12)) --kernel;
  }
  return kernel;
}

// Kronecker product helper for building explicit joint actions in tests.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace oracles
