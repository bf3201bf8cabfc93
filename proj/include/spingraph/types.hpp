#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spingraph {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

// Thrown when an input document (graph spec, run spec, chain spec) is malformed.
// The CLI maps this to exit code 2; numerical check failures map to exit code 1.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-integer spin stored exactly as twice its value, so j = 1/2 is twice_j = 1.
// All spin arithmetic in the library happens on twice_j; doubles appear only when
// a formula genuinely needs j itself.
struct Spin {
  int twice_j = 0;

  constexpr Spin() = default;
  constexpr explicit Spin(int twice) : twice_j(twice) {
    if (twice < 0) throw SpecError("spin must be non-negative");
  }

  double j() const { return 0.5 * twice_j; }
  int dim() const { return twice_j + 1; }
  bool is_integer() const { return twice_j % 2 == 0; }
  bool operator==(const Spin&) const = default;
  auto operator<=>(const Spin&) const = default;
};

// Parses "0", "1/2", "1", "3/2", ... (also tolerates "2/2" style) into a Spin.
Spin parse_spin(const std::string& text);

// Formats a Spin back as "0", "1/2", "1", "3/2", ...
std::string format_spin(Spin s);

// Character of the diagonal torus {diag(e^{i t}, e^{-i t})}: t -> e^{i n t}.
// The basis vector |j, m> carries weight n = 2m.
struct TorusWeight {
  int n = 0;
  bool operator==(const TorusWeight&) const = default;
};

}  // namespace spingraph
