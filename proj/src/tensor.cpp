#include "spingraph/tensor.hpp"

#include <algorithm>

namespace spingraph {

long tensor_size(const std::vector<int>& dims) {
  long n = 1;
  for (int d : dims) n *= d;
  return n;
}

std::vector<long> tensor_strides(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int k = int(dims.size()) - 2; k >= 0; --k) s[k] = s[k + 1] * dims[k + 1];
  return s;
}

long flatten_index(const std::vector<int>& dims, const std::vector<int>& idx) {
  auto s = tensor_strides(dims);
  long out = 0;
  for (size_t k = 0; k < dims.size(); ++k) out += s[k] * idx[k];
  return out;
}

namespace {

// Flat offsets (w.r.t. the full tensor) of every multi-index over the chosen
// legs, enumerated row-major in the order the legs are listed.
std::vector<long> group_offsets(const std::vector<int>& dims,
                                const std::vector<long>& strides,
                                const std::vector<int>& legs) {
  long total = 1;
  for (int l : legs) total *= dims[l];
  std::vector<long> out(total, 0);
  long repeat = 1;  // elements sharing the current prefix
  for (size_t k = legs.size(); k-- > 0;) {
    int d = dims[legs[k]];
    long stride = strides[legs[k]];
    long block = repeat * d;
    for (long base = 0; base < total; base += block)
      for (int a = 0; a < d; ++a)
        for (long r = 0; r < repeat; ++r) out[base + a * repeat + r] += a * stride;
    repeat = block;
  }
  return out;
}

}  // namespace

Matrix leg_operator(const std::vector<int>& dims, int leg, const Matrix& x) {
  long pre = 1, post = 1;
  for (int k = 0; k < leg; ++k) pre *= dims[k];
  for (size_t k = leg + 1; k < dims.size(); ++k) post *= dims[k];
  int d = dims[leg];
  long n = pre * d * post;
  Matrix out = Matrix::Zero(n, n);
  for (long o = 0; o < pre; ++o)
    for (int a2 = 0; a2 < d; ++a2)
      for (int a1 = 0; a1 < d; ++a1) {
        if (x(a2, a1) == Complex(0, 0)) continue;
        for (long i = 0; i < post; ++i)
          out((o * d + a2) * post + i, (o * d + a1) * post + i) = x(a2, a1);
      }
  return out;
}

Vector apply_to_legs(const std::vector<int>& dims, const std::vector<int>& legs,
                     const Matrix& m, const Vector& v) {
  auto strides = tensor_strides(dims);
  auto goff = group_offsets(dims, strides, legs);
  long gdim = long(goff.size());
  if (m.rows() != gdim || m.cols() != gdim)
    throw std::invalid_argument("operator size does not match chosen legs");

  std::vector<int> rest;
  for (int k = 0; k < int(dims.size()); ++k)
    if (std::find(legs.begin(), legs.end(), k) == legs.end()) rest.push_back(k);
  auto roff = group_offsets(dims, strides, rest);

  Vector out = Vector::Zero(v.size());
  for (long r : roff)
    for (long g2 = 0; g2 < gdim; ++g2) {
      Complex acc = 0;
      for (long g1 = 0; g1 < gdim; ++g1) acc += m(g2, g1) * v(r + goff[g1]);
      out(r + goff[g2]) = acc;
    }
  return out;
}

Vector contract_leg_pair(const std::vector<int>& dims, int leg_a, int leg_b,
                         const Matrix& m, const Vector& v) {
  if (m.rows() != dims[leg_a] || m.cols() != dims[leg_b])
    throw std::invalid_argument("contraction matrix size mismatch");
  auto strides = tensor_strides(dims);
  std::vector<int> rest;
  std::vector<int> rest_dims;
  for (int k = 0; k < int(dims.size()); ++k)
    if (k != leg_a && k != leg_b) {
      rest.push_back(k);
      rest_dims.push_back(dims[k]);
    }
  auto roff = group_offsets(dims, strides, rest);
  Vector out = Vector::Zero(std::max<long>(1, tensor_size(rest_dims)));
  for (size_t r = 0; r < roff.size(); ++r) {
    Complex acc = 0;
    for (int a = 0; a < dims[leg_a]; ++a)
      for (int b = 0; b < dims[leg_b]; ++b)
        acc += m(a, b) * v(roff[r] + a * strides[leg_a] + b * strides[leg_b]);
    out(long(r)) = acc;
  }
  return out;
}

}  // namespace spingraph
