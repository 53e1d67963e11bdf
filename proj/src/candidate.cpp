#include "tlap/candidate.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tlap/errors.hpp"

namespace tlap {

namespace {

constexpr double kLocusEps = 1e-12;

}  // namespace

const char* to_string(CandidateKind kind) {
  return kind == CandidateKind::radial ? "radial" : "one_dimensional";
}

Candidate::Candidate(std::string name, CandidateKind kind, Profile1D profile,
                     std::size_t ambient_dim, std::size_t op_index, Nonlinearity nonlinearity)
    : name_(std::move(name)),
      kind_(kind),
      profile_(std::move(profile)),
      dim_(ambient_dim),
      k_(op_index),
      nl_(std::move(nonlinearity)) {
  if (dim_ < 2) throw InputError("ambient dimension N must be at least 2");
  if (k_ < 1 || k_ > dim_ - 1) {
    throw InputError("operator index k=" + std::to_string(k_) + " outside [1, N-1] for N=" +
                     std::to_string(dim_));
  }
  if (kind_ == CandidateKind::radial && !profile_.corners().empty()) {
    throw InputError("radial candidates with corners on spheres are not supported");
  }
}

double Candidate::value_at(std::span<const double> x) const {
  if (x.size() != dim_) throw InputError("point dimension differs from N");
  if (kind_ == CandidateKind::one_dimensional) return profile_.value(x[dim_ - 1]);
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return profile_.value(std::sqrt(r2));
}

std::vector<double> embed_scan_point(const Candidate& c, double t) {
  std::vector<double> x(c.ambient_dim(), 0.0);
  if (c.kind() == CandidateKind::one_dimensional) {
    x.back() = t;
  } else {
    x.front() = t;
  }
  return x;
}

SymmetricMatrix hessian_of_candidate(const Candidate& c, std::span<const double> x) {
  const std::size_t n = c.ambient_dim();
  if (x.size() != n) throw InputError("point dimension differs from N");
  const Profile1D& v = c.profile();

  if (c.kind() == CandidateKind::one_dimensional) {
    const double t = x[n - 1];
    if (auto j = v.junction_near(t, kLocusEps)) {
      throw SingularPointError("Hessian requested on the junction locus x_N = " + std::to_string(j->t0),
                               j->t0);
    }
    SymmetricMatrix h(n);
    h.set(n - 1, n - 1, v.d2(t));
    return h;
  }

  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double r = std::sqrt(r2);
  if (r == 0.0) {
    if (std::abs(v.d1(0.0)) > 1e-14) {
      throw SingularPointError("radial profile has v'(0) != 0; the origin is singular", 0.0);
    }
    SymmetricMatrix h = SymmetricMatrix::identity(n);
    const double curvature = v.d2(0.0);
    for (std::size_t i = 0; i < n; ++i) h.set(i, i, curvature);
    return h;
  }

  const double radial = v.d2(r);
  const double tangential = v.d1(r) / r;
  SymmetricMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double proj = (x[i] / r) * (x[j] / r);
      h.set(i, j, radial * proj + tangential * ((i == j ? 1.0 : 0.0) - proj));
    }
  }
  return h;
}

}  // namespace tlap
