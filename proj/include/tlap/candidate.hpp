#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "tlap/nonlinearity.hpp"
#include "tlap/profile.hpp"
#include "tlap/symmetric_matrix.hpp"

namespace tlap {

enum class CandidateKind { one_dimensional, radial };

const char* to_string(CandidateKind kind);

// u(x) = v(x_N) (one_dimensional) or u(x) = v(|x|) (radial) in R^N, tested
// against P-_k(D^2 u) + f(u) = 0 with 1 <= k <= N-1.
class Candidate {
 public:
  Candidate(std::string name, CandidateKind kind, Profile1D profile, std::size_t ambient_dim,
            std::size_t op_index, Nonlinearity nonlinearity);

  const std::string& name() const noexcept { return name_; }
  CandidateKind kind() const noexcept { return kind_; }
  const Profile1D& profile() const noexcept { return profile_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t op_index() const noexcept { return k_; }
  const Nonlinearity& nonlinearity() const noexcept { return nl_; }

  double value_at(std::span<const double> x) const;

 private:
  std::string name_;
  CandidateKind kind_;
  Profile1D profile_;
  std::size_t dim_;
  std::size_t k_;
  Nonlinearity nl_;
};

// Hessian of the embedded candidate at x (length N).
// One-dimensional: diag(0, ..., 0, v''(x_N)).
// Radial: v'' along x/|x| and v'/r on the orthogonal complement; at the origin
// v''(0) I when v'(0) = 0.
// Throws SingularPointError on a junction locus, or at the origin when v'(0) != 0.
SymmetricMatrix hessian_of_candidate(const Candidate& c, std::span<const double> x);

// Point (0, ..., 0, t) for one-dimensional candidates, (t, 0, ..., 0) for radial ones.
std::vector<double> embed_scan_point(const Candidate& c, double t);

}  // namespace tlap
