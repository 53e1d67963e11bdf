#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tlap {

// Dense symmetric matrix; only the upper triangle (row-major) is stored.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim);
  // Throws InputError on a wrong length or a non-finite entry.
  SymmetricMatrix(std::size_t dim, std::vector<double> upper);

  static SymmetricMatrix identity(std::size_t dim);
  static SymmetricMatrix diagonal(std::span<const double> diag);
  static SymmetricMatrix diagonal(std::initializer_list<double> diag);
  // Rows of a full square matrix; must be symmetric to within `sym_tol`.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                   double sym_tol = 0.0);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> upper() const noexcept { return upper_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return upper_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value);

  double frobenius_norm() const noexcept;
  // 1e-10 * (1 + ||M||_F), the comparison scale used throughout the operator tests.
  double tolerance_scale(double base = 1e-10) const noexcept { return base * (1.0 + frobenius_norm()); }

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& add_scaled_identity(double c);
  // this += t * v v^T
  SymmetricMatrix& add_outer(std::span<const double> v, double t);

  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) {
      const std::size_t t = i;
      i = j;
      j = t;
    }
    return i * dim_ - i * (i + 1) / 2 + j;
  }

  std::size_t dim_ = 0;
  std::vector<double> upper_;
};

}  // namespace tlap
