#include "spingraph/su2.hpp"

#include <cmath>
#include <numbers>

namespace spingraph {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  // Spins are desk scale; 2j up to 40 keeps every factorial below 170!.
  if (n < 0) throw std::runtime_error("factorial of negative integer");
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  return r;
}

void check_special_unitary(const Matrix2& m) {
  if ((m.adjoint() * m - Matrix2::Identity()).norm() > 1e-12)
    throw std::runtime_error("matrix is not unitary");
  if (std::abs(m.determinant() - Complex(1, 0)) > 1e-12)
    throw std::runtime_error("matrix does not have determinant 1");
}

}  // namespace

Spin parse_spin(const std::string& text) {
  auto bad = [&] { return SpecError("cannot parse spin '" + text + "'"); };
  if (text.empty()) throw bad();
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      int whole = std::stoi(text, &used);
      if (used != text.size() || whole < 0) throw bad();
      return Spin(2 * whole);
    }
    size_t used_num = 0, used_den = 0;
    int num = std::stoi(text.substr(0, slash), &used_num);
    std::string den_text = text.substr(slash + 1);
    int den = std::stoi(den_text, &used_den);
    if (used_num != slash || used_den != den_text.size()) throw bad();
    if (num < 0 || (den != 1 && den != 2)) throw bad();
    return Spin(den == 1 ? 2 * num : num);
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string format_spin(Spin s) {
  if (s.twice_j % 2 == 0) return std::to_string(s.twice_j / 2);
  return std::to_string(s.twice_j) + "/2";
}

Irrep make_irrep(Spin s) {
  int d = s.dim();
  Irrep rep{s, Matrix::Zero(d, d), Matrix::Zero(d, d), Matrix::Zero(d, d)};
  double j = s.j();
  for (int a = 0; a < d; ++a) {
    double m = j - a;  // index 0 <-> m = j
    rep.jz(a, a) = m;
    // j+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>; m+1 sits at index a-1.
    if (a > 0) rep.jplus(a - 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
    if (a < d - 1) rep.jminus(a + 1, a) = std::sqrt(j * (j + 1) - m * (m - 1));
  }
  return rep;
}

GroupElement GroupElement::identity() {
  GroupElement g;
  g.euler = EulerAngles{0, 0, 0};
  return g;
}

GroupElement GroupElement::from_euler(double alpha, double beta, double gamma) {
  Complex i(0, 1);
  double c = std::cos(beta / 2), s = std::sin(beta / 2);
  GroupElement g;
  g.m << std::exp(-i * ((alpha + gamma) / 2)) * c, -std::exp(-i * ((alpha - gamma) / 2)) * s,
      std::exp(i * ((alpha - gamma) / 2)) * s, std::exp(i * ((alpha + gamma) / 2)) * c;
  g.euler = EulerAngles{alpha, beta, gamma};
  return g;
}

GroupElement GroupElement::from_matrix(const Matrix2& m) {
  check_special_unitary(m);
  GroupElement g;
  g.m = m;
  return g;
}

GroupElement GroupElement::torus(double t) {
  Complex i(0, 1);
  GroupElement g;
  g.m << std::exp(i * t), 0, 0, std::exp(-i * t);
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  g.m = m.adjoint();
  return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement g;
  g.m = a.m * b.m;
  return g;
}

EulerAngles euler_from_matrix(const Matrix2& m) {
  check_special_unitary(m);
  Complex a = m(0, 0), b = m(0, 1);
  double beta = 2 * std::atan2(std::abs(b), std::abs(a));
  // a = cos(beta/2) e^{-i(alpha+gamma)/2},  b = -sin(beta/2) e^{-i(alpha-gamma)/2}.
  if (std::abs(a) < 1e-12) {
    // beta = pi; only alpha - gamma matters.  Fix alpha = 0; then arg(b) = pi + gamma/2
    // determines gamma modulo 4pi — uniquely in the chart.
    return EulerAngles{0, kPi, wrap(2 * (std::arg(b) - kPi), 4 * kPi)};
  }
  if (std::abs(b) < 1e-12) {
    // beta = 0; fix alpha = 0, gamma = -2 arg(a) modulo 4pi.
    return EulerAngles{0, 0, wrap(-2 * std::arg(a), 4 * kPi)};
  }
  double u = -std::arg(a);      // (alpha + gamma)/2 mod 2pi
  double v = kPi - std::arg(b); // (alpha - gamma)/2 mod 2pi
  double alpha = wrap(u + v, 2 * kPi);
  double gamma = wrap(u - v, 2 * kPi);
  // gamma is only fixed mod 2pi by the args; the 2pi shift flips the sign of the
  // reconstructed matrix, so test against the actual entry.
  Complex a_rec = std::cos(beta / 2) * std::exp(Complex(0, -(alpha + gamma) / 2));
  if ((a_rec * std::conj(a)).real() < 0) gamma += 2 * kPi;
  return EulerAngles{alpha, beta, gamma};
}

Matrix wigner_d(Spin s, double beta) {
  // Factorial-sum formula for d^j_{m m'}(beta) in the convention where
  // D^j(alpha,beta,gamma) = e^{-i m alpha} d^j_{m m'}(beta) e^{-i m' gamma}
  // and d^{1/2} = [[cos(b/2), -sin(b/2)], [sin(b/2), cos(b/2)]].
  int tj = s.twice_j, d = s.dim();
  double c = std::cos(beta / 2), sn = std::sin(beta / 2);
  Matrix out = Matrix::Zero(d, d);
  for (int ra = 0; ra < d; ++ra) {
    int tm1 = tj - 2 * ra;  // 2*m (row)
    for (int ca = 0; ca < d; ++ca) {
      int tm2 = tj - 2 * ca;  // 2*m' (column)
      double pref = std::sqrt(factorial((tj + tm1) / 2) * factorial((tj - tm1) / 2) *
                              factorial((tj + tm2) / 2) * factorial((tj - tm2) / 2));
      int k_lo = std::max(0, (tm2 - tm1) / 2);
      int k_hi = std::min((tj - tm1) / 2, (tj + tm2) / 2);
      double sum = 0;
      for (int k = k_lo; k <= k_hi; ++k) {
        // exponents: cos^(2j + m2 - m1 - 2k), sin^(m1 - m2 + 2k)
        int e_cos = (2 * tj + tm2 - tm1) / 2 - 2 * k;
        int e_sin = (tm1 - tm2) / 2 + 2 * k;
        double denom = factorial(k) * factorial((tj - tm1) / 2 - k) *
                       factorial((tj + tm2) / 2 - k) * factorial((tm1 - tm2) / 2 + k);
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(c, e_cos) * std::pow(sn, e_sin) / denom;
      }
      double sign = (((tm1 - tm2) / 2) % 2 == 0) ? 1.0 : -1.0;
      out(ra, ca) = sign * pref * sum;
    }
  }
  return out;
}

namespace {

// Wigner-matrix path: D^j from the cached or recovered Euler chart.
Matrix evaluate_euler(const Irrep& rep, const EulerAngles& e) {
  int d = rep.dim(), tj = rep.spin.twice_j;
  Matrix out = wigner_d(rep.spin, e.beta);
  Complex i(0, 1);
  for (int ra = 0; ra < d; ++ra) {
    double m1 = 0.5 * (tj - 2 * ra);
    for (int ca = 0; ca < d; ++ca) {
      double m2 = 0.5 * (tj - 2 * ca);
      out(ra, ca) *= std::exp(-i * (m1 * e.alpha)) * std::exp(-i * (m2 * e.gamma));
    }
  }
  return out;
}

// Logarithm path: write g = exp(-i theta n.sigma/2) and exponentiate
// -i theta n.J in spin j via a self-adjoint eigendecomposition of n.J.
Matrix evaluate_exp(const Irrep& rep, const Matrix2& m) {
  double cos_half = 0.5 * m.trace().real();
  cos_half = std::clamp(cos_half, -1.0, 1.0);
  double half = std::acos(cos_half), sin_half = std::sin(half);
  double theta = 2 * half;
  Eigen::Vector3d n(0, 0, 1);
  if (sin_half > 1e-14) {
    // m - cos(theta/2) I = -i sin(theta/2) (n_x sx + n_y sy + n_z sz)
    Complex i(0, 1);
    Matrix2 t = (m - cos_half * Matrix2::Identity()) * (i / sin_half);
    // n.sigma = [[n_z, n_x - i n_y], [n_x + i n_y, -n_z]]
    n(0) = t(0, 1).real();
    n(1) = -t(0, 1).imag();
    n(2) = t(0, 0).real();
  }
  Matrix h = n(0) * rep.jx() + n(1) * rep.jy() + n(2) * rep.jz;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(rep.dim());
  for (int k = 0; k < rep.dim(); ++k)
    phases(k) = std::exp(Complex(0, -theta * es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Matrix evaluate(const Irrep& rep, const GroupElement& g) {
  EulerAngles e = g.euler ? *g.euler : euler_from_matrix(g.m);
  Matrix via_euler = evaluate_euler(rep, e);
  // Near rotation angle pi (trace -> -2) the axis extraction divides by
  // sin(theta/2) ~ 0 and loses the digits the agreement check needs, so that
  // region is served by the Euler chart alone.
  double cos_half = std::clamp(0.5 * g.m.trace().real(), -1.0, 1.0);
  bool near_angle_pi = cos_half < 0 && std::sqrt(1 - cos_half * cos_half) < 1e-3;
  if (!near_angle_pi) {
    Matrix via_exp = evaluate_exp(rep, g.m);
    double gap = (via_euler - via_exp).cwiseAbs().maxCoeff();
    if (gap > 1e-10)
      throw std::runtime_error("representation evaluation paths disagree by " +
                               std::to_string(gap));
  }
  return via_euler;
}

Complex character(Spin s, const GroupElement& g) {
  return evaluate(make_irrep(s), g).trace();
}

int cg_multiplicity(Spin j1, Spin j2, Spin j3) {
  int a = j1.twice_j, b = j2.twice_j, c = j3.twice_j;
  if ((a + b + c) % 2 != 0) return 0;
  return (std::abs(a - b) <= c && c <= a + b) ? 1 : 0;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] via Newton on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < n; ++k) {
    double t = std::cos(kPi * (k + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = t;
      for (int m = 2; m <= n; ++m) {
        double p2 = ((2 * m - 1) * t * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1);
      double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1, p1 = t;
    for (int m = 2; m <= n; ++m) {
      double p2 = ((2 * m - 1) * t * p1 - (m - 1) * p0) / m;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1);
    x[k] = t;
    w[k] = 2 / ((1 - t * t) * dp * dp);
  }
}

}  // namespace

std::vector<HaarNode> haar_quadrature(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  int na = order, nb = order, ng = 2 * order;
  std::vector<double> xb, wb;
  gauss_legendre(nb, xb, wb);
  std::vector<HaarNode> nodes;
  nodes.reserve(static_cast<size_t>(na) * nb * ng);
  for (int ia = 0; ia < na; ++ia) {
    double alpha = 2 * kPi * ia / na;
    for (int ib = 0; ib < nb; ++ib) {
      double beta = std::acos(xb[ib]);
      for (int ig = 0; ig < ng; ++ig) {
        double gamma = 4 * kPi * ig / ng;
        // (1/16pi^2) * (2pi/na) * wb * (4pi/ng), with wb already carrying sin(beta) d(beta).
        nodes.push_back({GroupElement::from_euler(alpha, beta, gamma),
                         wb[ib] / (2.0 * na * ng)});
      }
    }
  }
  return nodes;
}

GroupElement random_group_element(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  double q0, q1, q2, q3, norm2;
  do {
    q0 = gauss(rng);
    q1 = gauss(rng);
    q2 = gauss(rng);
    q3 = gauss(rng);
    norm2 = q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3;
  } while (norm2 < 1e-12);
  double inv = 1 / std::sqrt(norm2);
  q0 *= inv;
  q1 *= inv;
  q2 *= inv;
  q3 *= inv;
  GroupElement g;
  g.m << Complex(q0, q3), Complex(q2, q1), Complex(-q2, q1), Complex(q0, -q3);
  return g;
}

}  // namespace spingraph
