#include "tlap/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tlap/errors.hpp"

namespace tlap {

namespace {

constexpr double kRelativeOffTolerance = 1e-13;
constexpr std::size_t kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) sum += 2.0 * a[p * n + q] * a[p * n + q];
  }
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the symmetric Schur rotation, updating a and the
// accumulated eigenvectors v (both row-major, full storage).
void rotate(std::vector<double>& a, std::vector<double>& v, std::size_t n, std::size_t p,
            std::size_t q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t r = 0; r < n; ++r) {
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    a[r * n + p] = c * arp - s * arq;
    a[r * n + q] = s * arp + c * arq;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double apr = a[p * n + r];
    const double aqr = a[q * n + r];
    a[p * n + r] = c * apr - s * aqr;
    a[q * n + r] = s * apr + c * aqr;
  }
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;

  for (std::size_t r = 0; r < n; ++r) {
    const double vrp = v[r * n + p];
    const double vrq = v[r * n + q];
    v[r * n + p] = c * vrp - s * vrq;
    v[r * n + q] = s * vrp + c * vrq;
  }
}

struct JacobiResult {
  std::vector<double> diag;     // unsorted eigenvalues, Jacobi column order
  std::vector<double> vectors;  // row-major, column j pairs with diag[j]
  std::size_t sweeps = 0;
};

JacobiResult cyclic_jacobi(const SymmetricMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }

  const double target = kRelativeOffTolerance * m.frobenius_norm();
  std::size_t sweeps = 0;
  while (off_diagonal_norm(a, n) > target) {
    if (sweeps == kMaxSweeps) {
      throw VerificationError("Jacobi eigensolver did not converge in " +
                              std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, n, p, q);
    }
    ++sweeps;
  }

  JacobiResult out;
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = a[i * n + i];
  out.vectors = std::move(v);
  out.sweeps = sweeps;
  return out;
}

}  // namespace

EigenDecomposition eigen_decompose(const SymmetricMatrix& m) {
  const JacobiResult jr = cyclic_jacobi(m);
  const std::size_t n = m.dim();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return jr.diag[l] < jr.diag[r]; });

  EigenDecomposition out;
  out.sweeps = jr.sweeps;
  out.spectrum.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.spectrum.values[j] = jr.diag[src];
    for (std::size_t r = 0; r < n; ++r) out.vectors[j * n + r] = jr.vectors[r * n + src];
  }
  return out;
}

Spectrum eigenvalues_sym(const SymmetricMatrix& m) {
  if (m.dim() == 1) return Spectrum{{m(0, 0)}};
  std::vector<double> diag = cyclic_jacobi(m).diag;
  std::sort(diag.begin(), diag.end());
  return Spectrum{std::move(diag)};
}

double pminus_k(const Spectrum& s, std::size_t k) {
  if (k < 1 || k > s.size()) {
    throw InputError("operator index k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(s.size()) + "]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += s.values[i];
  return sum;
}

double pminus_k(const SymmetricMatrix& m, std::size_t k) {
  if (k < 1 || k > m.dim()) {
    throw InputError("operator index k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(m.dim()) + "]");
  }
  return pminus_k(eigenvalues_sym(m), k);
}

SymmetricMatrix add_rank_one_top(const SymmetricMatrix& m, double t) {
  if (!(t >= 0.0)) throw InputError("rank-one weight t must be nonnegative");
  if (t == 0.0) return m;

  const JacobiResult jr = cyclic_jacobi(m);
  const std::size_t n = m.dim();
  std::size_t top = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (jr.diag[j] > jr.diag[top]) top = j;
  }
  std::vector<double> v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = jr.vectors[r * n + top];

  SymmetricMatrix out = m;
  out.add_outer(v, t);
  return out;
}

}  // namespace tlap
