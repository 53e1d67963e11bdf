#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tlap/candidate.hpp"
#include "tlap/catalog.hpp"
#include "tlap/errors.hpp"
#include "tlap/nonlinearity.hpp"
#include "tlap/operator_core.hpp"
#include "tlap/profile.hpp"

using namespace tlap;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kTanhHalfSqrt2 = std::tanh(kInvSqrt2);  // v(1) of the tanh profiles

std::vector<Profile1D> one_d_catalog() {
  return {make_halfline_tanh(), make_plain_tanh(), make_tanh_profile(0.0), make_tanh_profile(0.5),
          make_tanh_profile(1.0), make_tanh_profile(2.0), make_zero_profile()};
}

}  // namespace

TEST_CASE("allen-cahn nonlinearity") {
  const Nonlinearity ac = make_allen_cahn();
  CHECK(ac.f(0.0) == 0.0);
  CHECK(ac.f(0.5) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(ac.delta == doctest::Approx(0.5773502691896258).epsilon(1e-15));
  CHECK(check_assumptions(ac).ok());
}

TEST_CASE("power family") {
  const Nonlinearity ac = make_allen_cahn();
  const Nonlinearity p = make_power_family(1.0, -1.0, 3.0);
  for (double u = -0.9; u <= 0.9; u += 0.05) {
    CHECK(p.f(u) == doctest::Approx(ac.f(u)).epsilon(1e-14));
    CHECK(p.fprime(u) == doctest::Approx(ac.fprime(u)).epsilon(1e-13));
  }
  // Bisection on the closed sample converges to 1/sqrt3 from below.
  CHECK(p.delta <= ac.delta);
  CHECK(p.delta == doctest::Approx(ac.delta).epsilon(1e-12));
  CHECK(check_assumptions(p).ok());

  const Nonlinearity id = make_power_family(1.0, 0.0, 2.0);
  CHECK(id.delta == 1.0);
  CHECK(id.f(0.3) == doctest::Approx(0.3));

  CHECK(make_power_family(2.0, 1.0, 2.0).f(0.1) == doctest::Approx(0.21).epsilon(1e-14));

  // gamma in (1, 2) with b < 0: window (a / (-b gamma))^(1/(gamma-1)).
  const Nonlinearity frac = make_power_family(1.0, -2.0, 1.5);
  CHECK(frac.delta == doctest::Approx(std::pow(1.0 / 3.0, 2.0)).epsilon(1e-9));
  CHECK(check_assumptions(frac).ok());

  CHECK_THROWS_AS(make_power_family(0.0, 1.0, 2.0), ConstructionError);
  CHECK_THROWS_AS(make_power_family(-1.0, 1.0, 2.0), ConstructionError);
  CHECK_THROWS_AS(make_power_family(1.0, 1.0, 1.0), ConstructionError);
}

TEST_CASE("experimental reactions fail the structural assumptions") {
  CHECK_FALSE(check_assumptions(make_zero_reaction()).ok());
  CHECK_FALSE(check_assumptions(make_linear_reaction(-1.0)).ok());
  CHECK(check_assumptions(make_linear_reaction(1.0)).ok());
}

TEST_CASE("tanh-shifted profile corners") {
  const Profile1D p = make_tanh_profile(1.0);
  REQUIRE(p.corners().size() == 2);
  const Corner& left = p.corners()[0];
  const Corner& right = p.corners()[1];
  CHECK(left.t0 == -1.0);
  CHECK(left.slope_left == doctest::Approx(-kInvSqrt2));
  CHECK(left.slope_right == 0.0);
  CHECK(right.t0 == 1.0);
  CHECK(right.slope_left == 0.0);
  CHECK(right.slope_right == doctest::Approx(0.7071067811865476));
  CHECK(left.is_convex());
  CHECK(right.is_convex());

  CHECK(p.value(40.0) == doctest::Approx(1.0));
  CHECK(p.value(-40.0) == doctest::Approx(1.0));
  CHECK(p.value(0.3) == 0.0);
  for (double t = 0.0; t < 6.0; t += 0.37) CHECK(p.value(t) == p.value(-t));

  CHECK_THROWS_AS(make_tanh_profile(-0.1), InputError);
}

TEST_CASE("tanh-shifted with c = 0 has one convex corner") {
  const Profile1D p = make_tanh_profile(0.0);
  REQUIRE(p.corners().size() == 1);
  const Corner& c = p.corners()[0];
  CHECK(c.value == 0.0);
  CHECK(c.slope_left == doctest::Approx(-kInvSqrt2));
  CHECK(c.slope_right == doctest::Approx(kInvSqrt2));
  CHECK(c.is_true_corner());
  CHECK(p.value(1.0) == doctest::Approx(kTanhHalfSqrt2));
  CHECK(p.value(-1.0) == doctest::Approx(kTanhHalfSqrt2));
}

TEST_CASE("halfline and plain tanh") {
  const Profile1D h = make_halfline_tanh();
  CHECK(h.value(0.0) == 0.0);
  CHECK(h.value(1.0) == doctest::Approx(0.6088593650139138).epsilon(1e-14));
  CHECK(h.value(-3.0) == 0.0);
  REQUIRE(h.corners().size() == 1);
  CHECK(h.corners()[0].jump() == doctest::Approx(kInvSqrt2));
  CHECK(h.value(-1e6) == 0.0);
  CHECK(h.value(1e6) == doctest::Approx(1.0));

  const Profile1D p = make_plain_tanh();
  CHECK(p.corners().empty());
  CHECK(p.value(-1.0) == doctest::Approx(-0.6088593650139138).epsilon(1e-14));
  for (double t = -4.0; t <= 4.0; t += 0.25) {
    const double v = p.value(t);
    CHECK(p.d1(t) == doctest::Approx((1 - v * v) * kInvSqrt2).epsilon(1e-13));
    CHECK(p.d1(t) > 0.0);
    CHECK(p.d2(t) == doctest::Approx(v * v * v - v).epsilon(1e-13));
  }
}

TEST_CASE("catalog profile invariants") {
  for (const Profile1D& p : one_d_catalog()) {
    CAPTURE(p.name());
    for (double t = -25.0; t <= 25.0; t += 0.01) CHECK(std::abs(p.value(t)) < 1.0);
    for (const Corner& c : p.corners()) {
      auto f = [&p](double t) { return p.value(t); };
      CHECK(std::abs(oracle::right_slope(f, c.t0) - c.slope_right) <= 1e-8);
      CHECK(std::abs(oracle::left_slope(f, c.t0) - c.slope_left) <= 1e-8);
    }
    // Derivatives of every piece agree with centred differences away from junctions.
    for (double t = -6.0; t <= 6.0; t += 0.173) {
      if (p.junction_near(t, 1e-3)) continue;
      auto f = [&p](double s) { return p.value(s); };
      CHECK(std::abs(oracle::central_d1(f, t) - p.d1(t)) <= 1e-8);
      CHECK(std::abs(oracle::central_d2(f, t) - p.d2(t)) <= 1e-6);
    }
  }
  const Profile1D h = make_halfline_tanh();
  for (double t = -5.0; t < 5.0; t += 0.01) CHECK(h.value(t + 0.01) >= h.value(t));
}

TEST_CASE("radial closed form") {
  for (double alpha : {0.1, 0.3, 0.5, 1.0 / std::sqrt(3.0)}) {
    for (int k : {1, 2, 3}) {
      const Profile1D v = make_radial_closed_form(alpha, k);
      CHECK(v.value(0.0) == doctest::Approx(alpha).epsilon(1e-14));
      CHECK(v.d1(0.0) == 0.0);
      const Nonlinearity ac = make_allen_cahn();
      CHECK(v.d2(0.0) == doctest::Approx(-ac.f(alpha) / k).epsilon(1e-13));
      double prev = v.value(0.0);
      for (double r = 0.01; r <= 30.0; r += 0.01) {
        const double cur = v.value(r);
        CHECK(cur >= 0.0);
        CHECK(cur <= prev);
        prev = cur;
        // v'' >= v'/r on the validity window.
        CHECK(v.d2(r) >= v.d1(r) / r - 1e-12);
      }
      for (double r = 0.05; r <= 5.0; r += 0.3) {
        auto f = [&v](double s) { return v.value(s); };
        CHECK(std::abs(oracle::central_d1(f, r) - v.d1(r)) <= 1e-9);
        CHECK(std::abs(oracle::central_d2(f, r) - v.d2(r)) <= 1e-6);
      }
    }
  }
  CHECK(make_radial_closed_form(0.5, 1).value(1.0) ==
        doctest::Approx(1.0 / std::sqrt(1.0 + 3.0 * std::exp(1.0))).epsilon(1e-14));
  CHECK(std::isfinite(make_radial_closed_form(0.5, 1).d2(100.0)));

  CHECK_THROWS_AS(make_radial_closed_form(0.0, 1), InputError);
  CHECK_THROWS_AS(make_radial_closed_form(0.6, 1), InputError);
  CHECK_THROWS_AS(make_radial_closed_form(0.3, 0), InputError);
}

TEST_CASE("candidate Hessians") {
  const Nonlinearity ac = make_allen_cahn();
  SUBCASE("one-dimensional plain tanh") {
    const Candidate c("plain-tanh", CandidateKind::one_dimensional, make_plain_tanh(), 4, 2, ac);
    const std::vector<double> x{0.3, -2.0, 7.0, 1.0};
    const Spectrum s = eigenvalues_sym(hessian_of_candidate(c, x));
    const double v = kTanhHalfSqrt2;
    CHECK(s[0] == doctest::Approx(v * v * v - v));
    for (std::size_t i = 1; i < 4; ++i) CHECK(s[i] == 0.0);
  }
  SUBCASE("one-dimensional Hessians have N-1 zero eigenvalues") {
    for (const Profile1D& p : one_d_catalog()) {
      const Candidate c(p.name(), CandidateKind::one_dimensional, p, 5, 2, ac);
      for (double t = -3.05; t < 3.0; t += 0.5) {
        const Spectrum s = eigenvalues_sym(hessian_of_candidate(c, embed_scan_point(c, t)));
        int zeros = 0;
        for (double l : s.values) zeros += l == 0.0 ? 1 : 0;
        CHECK(zeros >= 4);
      }
    }
  }
  SUBCASE("junction locus is singular") {
    const Candidate c("halfline", CandidateKind::one_dimensional, make_halfline_tanh(), 3, 1, ac);
    CHECK_THROWS_AS(hessian_of_candidate(c, std::vector<double>{1.0, 2.0, 0.0}), SingularPointError);
  }
  SUBCASE("radial frame") {
    const Profile1D p = make_radial_closed_form(0.4, 1);
    const Candidate c("radial", CandidateKind::radial, p, 2, 1, ac);
    const Spectrum s = eigenvalues_sym(hessian_of_candidate(c, std::vector<double>{1.5, 0.0}));
    const double a = p.d2(1.5), b = p.d1(1.5) / 1.5;
    CHECK(s[0] == doctest::Approx(std::min(a, b)));
    CHECK(s[1] == doctest::Approx(std::max(a, b)));

    // Off-axis point: same spectrum.
    const double r = 1.5, th = 0.7;
    const Spectrum s2 =
        eigenvalues_sym(hessian_of_candidate(c, std::vector<double>{r * std::cos(th), r * std::sin(th)}));
    CHECK(s2[0] == doctest::Approx(s[0]).epsilon(1e-12));
    CHECK(s2[1] == doctest::Approx(s[1]).epsilon(1e-12));

    const SymmetricMatrix origin = hessian_of_candidate(c, std::vector<double>{0.0, 0.0});
    CHECK(origin(0, 0) == doctest::Approx(p.d2(0.0)));
    CHECK(origin(0, 1) == 0.0);
  }
  SUBCASE("radial closed form, N = 3, r = 1") {
    const Profile1D p = make_radial_closed_form(0.5, 1);
    const Candidate c("radial", CandidateKind::radial, p, 3, 1, ac);
    const SymmetricMatrix h = hessian_of_candidate(c, std::vector<double>{1.0, 0.0, 0.0});
    CHECK(p.d2(1.0) >= p.d1(1.0));
    CHECK(pminus_k(h, 1) == doctest::Approx(p.d1(1.0)).epsilon(1e-14));
  }
  SUBCASE("standing assumption k <= N-1") {
    CHECK_THROWS_AS(Candidate("x", CandidateKind::one_dimensional, make_zero_profile(), 3, 3, ac), InputError);
    CHECK_THROWS_AS(Candidate("x", CandidateKind::one_dimensional, make_zero_profile(), 3, 0, ac), InputError);
    CHECK_THROWS_AS(Candidate("x", CandidateKind::radial, make_halfline_tanh(), 3, 1, ac), InputError);
  }
}

TEST_CASE("catalog lookup") {
  CHECK(parse_nonlinearity("allen-cahn").name == "allen-cahn");
  CHECK(parse_nonlinearity("power:1,0,2").f(0.25) == doctest::Approx(0.25));
  CHECK_THROWS_AS(parse_nonlinearity("nosuch"), CatalogLookupError);
  CHECK_THROWS_AS(parse_nonlinearity("power:1,x,2"), CatalogLookupError);

  CHECK(parse_profile("tanh-shifted:1").profile.corners().size() == 2);
  CHECK(parse_profile("radial-closed:0.5,2").kind == CandidateKind::radial);
  CHECK(parse_profile("radial-closed:0.5,2").profile_k == 2u);
  CHECK_THROWS_AS(parse_profile("nosuch"), CatalogLookupError);
  CHECK_THROWS_AS(parse_profile("halfline-tanh:3"), CatalogLookupError);

  const Candidate c = make_candidate("radial-closed:0.5", 3, 2);
  CHECK(c.op_index() == 2);
  CHECK_THROWS_AS(make_candidate("radial-closed:0.5,1", 3, 2), InputError);
  CHECK(candidate_catalog().size() >= 6);
}
