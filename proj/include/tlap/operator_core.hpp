#pragma once

#include <cstddef>
#include <vector>

#include "tlap/symmetric_matrix.hpp"

namespace tlap {

// Eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

struct EigenDecomposition {
  Spectrum spectrum;
  // Column-major N x N; column j is the unit eigenvector of spectrum.values[j].
  std::vector<double> vectors;
  std::size_t sweeps = 0;

  double vector_entry(std::size_t row, std::size_t col) const {
    return vectors[col * spectrum.size() + row];
  }
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
// 1e-13 * ||M||_F. Deterministic; no external linear algebra.
EigenDecomposition eigen_decompose(const SymmetricMatrix& m);
Spectrum eigenvalues_sym(const SymmetricMatrix& m);

// Truncated Laplacian symbol: sum of the k smallest eigenvalues, 1 <= k <= N.
double pminus_k(const SymmetricMatrix& m, std::size_t k);
double pminus_k(const Spectrum& s, std::size_t k);

// M + t v v^T with v a unit eigenvector of the largest eigenvalue. Among tied
// largest eigenvalues the lowest Jacobi column wins.
SymmetricMatrix add_rank_one_top(const SymmetricMatrix& m, double t);

}  // namespace tlap
