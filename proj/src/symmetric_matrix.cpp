#include "tlap/symmetric_matrix.hpp"

#include <cmath>
#include <string>

#include "tlap/errors.hpp"

namespace tlap {

namespace {

std::size_t upper_size(std::size_t dim) { return dim * (dim + 1) / 2; }

void require_finite(double v) {
  if (!std::isfinite(v)) throw InputError("symmetric matrix entry is not finite");
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t dim) : dim_(dim), upper_(upper_size(dim), 0.0) {
  if (dim == 0) throw InputError("symmetric matrix dimension must be at least 1");
}

SymmetricMatrix::SymmetricMatrix(std::size_t dim, std::vector<double> upper)
    : dim_(dim), upper_(std::move(upper)) {
  if (dim == 0) throw InputError("symmetric matrix dimension must be at least 1");
  if (upper_.size() != upper_size(dim)) {
    throw InputError("upper triangle of a " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " matrix needs " + std::to_string(upper_size(dim)) + " entries, got " +
                     std::to_string(upper_.size()));
  }
  for (double v : upper_) require_finite(v);
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t dim) {
  SymmetricMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag) {
  SymmetricMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                           double sym_tol) {
  const std::size_t n = rows.size();
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InputError("matrix rows must be square");
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > sym_tol) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  require_finite(value);
  upper_[index(i, j)] = value;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const double v = (*this)(i, j);
      sum += (i == j ? 1.0 : 2.0) * v * v;
    }
  }
  return std::sqrt(sum);
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.dim_ != dim_) throw InputError("matrix dimensions differ");
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] += other.upper_[i];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::add_scaled_identity(double c) {
  for (std::size_t i = 0; i < dim_; ++i) upper_[index(i, i)] += c;
  return *this;
}

SymmetricMatrix& SymmetricMatrix::add_outer(std::span<const double> v, double t) {
  if (v.size() != dim_) throw InputError("vector length differs from matrix dimension");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) upper_[index(i, j)] += t * v[i] * v[j];
  }
  return *this;
}

}  // namespace tlap
