#pragma once

#include <vector>

#include "spingraph/types.hpp"

namespace spingraph {

// Multi-index tensors are stored flattened with the FIRST leg varying slowest
// (row-major).  `dims` lists the leg dimensions in order.

long tensor_size(const std::vector<int>& dims);

// Row-major strides; strides[k] is the flat step of leg k.
std::vector<long> tensor_strides(const std::vector<int>& dims);

long flatten_index(const std::vector<int>& dims, const std::vector<int>& idx);

// Dense matrix of (identity (x) ... (x) x at `leg` (x) ... (x) identity).
Matrix leg_operator(const std::vector<int>& dims, int leg, const Matrix& x);

// Applies a square matrix to the indicated legs jointly.  The matrix indices
// are the flattened multi-index over `legs` in the order given (first listed
// leg slowest), matching leg order in tensor products.
Vector apply_to_legs(const std::vector<int>& dims, const std::vector<int>& legs,
                     const Matrix& m, const Vector& v);

// Contracts two legs of v against a rectangular matrix:
//   out[rest] = sum_{a,b} m(a, b) * v[..a at leg_a.., ..b at leg_b.., rest],
// removing both legs.  Used to pair a representation matrix against the
// (row, column) coefficient slots of one edge.
Vector contract_leg_pair(const std::vector<int>& dims, int leg_a, int leg_b,
                         const Matrix& m, const Vector& v);

}  // namespace spingraph
