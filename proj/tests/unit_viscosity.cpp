#include <doctest.h>

#include <cmath>
#include <limits>

#include "tlap/catalog.hpp"
#include "tlap/errors.hpp"
#include "tlap/nonlinearity.hpp"
#include "tlap/profile.hpp"
#include "tlap/viscosity.hpp"

using namespace tlap;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Candidate synthetic(const std::string& name, Profile1D p, std::size_t n = 3, std::size_t k = 1) {
  return Candidate(name, CandidateKind::one_dimensional, std::move(p), n, k, make_allen_cahn());
}

// Piecewise linear tent: a concave corner at 0 with value 0.
Profile1D tent() {
  std::vector<Piece> pieces{
      {-kInf, 0.0, [](double t) { return 0.5 * std::tanh(t); }, [](double t) {
         const double s = 1.0 / std::cosh(t);
         return 0.5 * s * s;
       },
       [](double t) {
         const double s = 1.0 / std::cosh(t);
         return -s * s * std::tanh(t);
       }},
      {0.0, kInf, [](double t) { return -0.5 * std::tanh(t); }, [](double t) {
         const double s = 1.0 / std::cosh(t);
         return -0.5 * s * s;
       },
       [](double t) {
         const double s = 1.0 / std::cosh(t);
         return s * s * std::tanh(t);
       }},
  };
  return Profile1D("tent", std::move(pieces), {Corner{0.0, 0.0, 0.5, -0.5}});
}

}  // namespace

TEST_CASE("smooth residual examples") {
  const Candidate h = make_candidate("halfline-tanh", 3, 2);
  for (double t : {0.5, 1.0, 2.0}) {
    const auto r = scan_smooth_residuals(h, std::vector<double>{t}, Exec::serial);
    CHECK(std::abs(r[0].residual) <= 1e-14);
  }
  const Candidate p = make_candidate("plain-tanh", 2, 1);
  const auto r = scan_smooth_residuals(p, std::vector<double>{-1.0}, Exec::serial);
  CHECK(r[0].residual == doctest::Approx(-0.38314927641474905).epsilon(1e-12));

  const Candidate rad = make_candidate("radial-closed:0.5,1", 2, 1);
  for (double t : uniform_grid(1e-3, 20.0, 2001)) {
    const auto s = scan_smooth_residuals(rad, std::vector<double>{t}, Exec::serial);
    CHECK(std::abs(s[0].residual) <= 1e-8);
  }
}

TEST_CASE("scan points on a junction are rejected") {
  const Candidate h = make_candidate("halfline-tanh", 3, 1);
  try {
    (void)scan_smooth_residuals(h, std::vector<double>{0.5, 0.0}, Exec::serial);
    FAIL("expected SingularPointError");
  } catch (const SingularPointError& e) {
    CHECK(e.location() == 0.0);
  }
  CHECK_THROWS_AS(scan_smooth_residuals(h, std::vector<double>{5e-8}, Exec::serial), SingularPointError);
}

TEST_CASE("corner rules") {
  SUBCASE("convex corner with f(value) = 0") {
    const Candidate c = make_candidate("tanh-shifted:1", 3, 1);
    const CornerOutcome o = check_corner(c, c.profile().corners()[1]);
    CHECK(o.subsolution == Outcome::pass);
    CHECK(o.supersolution == Outcome::pass);
    CHECK(o.subsolution_rule == "convex-corner/no-upper-test");
    CHECK(o.supersolution_rule == "convex-corner/tangential-courant-fischer");
    CHECK_FALSE(o.derived_rule);
  }
  SUBCASE("convex corner with f(value) > 0") {
    // constant 0.5 glued to a rising branch: the flat lower test fails.
    std::vector<Piece> pieces{
        {-kInf, 0.0, [](double) { return 0.5; }, [](double) { return 0.0; }, [](double) { return 0.0; }},
        {0.0, kInf, [](double t) { return 0.5 + 0.25 * std::tanh(t); },
         [](double t) {
           const double s = 1.0 / std::cosh(t);
           return 0.25 * s * s;
         },
         [](double t) {
           const double s = 1.0 / std::cosh(t);
           return -0.5 * s * s * std::tanh(t);
         }},
    };
    const Candidate c = synthetic("kink", Profile1D("kink", std::move(pieces), {Corner{0.0, 0.5, 0.0, 0.25}}));
    const CornerOutcome o = check_corner(c, c.profile().corners()[0]);
    CHECK(o.subsolution == Outcome::pass);
    CHECK(o.supersolution == Outcome::fail);
    CHECK(o.derived_rule);
    CHECK(o.f_value == doctest::Approx(0.375));
  }
  SUBCASE("concave corner") {
    const Candidate c = synthetic("tent", tent());
    const CornerOutcome o = check_corner(c, c.profile().corners()[0]);
    CHECK(o.supersolution == Outcome::pass);
    CHECK(o.subsolution == Outcome::fail);
    CHECK(o.subsolution_rule == "concave-corner/steep-upper-test");
    const Verdict v = verify(c, default_grid(CandidateKind::one_dimensional), {.exec = Exec::serial});
    CHECK(v.subsolution == Outcome::fail);
    bool found = false;
    for (const Witness& w : v.witnesses) found |= w.rule == "concave-corner/steep-upper-test" && w.t == 0.0;
    CHECK(found);
  }
  SUBCASE("weak junction") {
    // Smooth plain tanh split into two pieces at 0.
    const Profile1D base = make_plain_tanh();
    std::vector<Piece> pieces{
        {-kInf, 0.0, [base](double t) { return base.value(t); }, [base](double t) { return base.d1(t); },
         [base](double t) { return base.d2(t); }},
        {0.0, kInf, [base](double t) { return base.value(t); }, [base](double t) { return base.d1(t); },
         [base](double t) { return base.d2(t); }},
    };
    const double s = 1.0 / std::sqrt(2.0);
    const Candidate c = synthetic("split", Profile1D("split", std::move(pieces), {Corner{0.0, 0.0, s, s}}));
    const CornerOutcome o = check_corner(c, c.profile().corners()[0]);
    CHECK(o.weak);
    REQUIRE(o.two_sided.size() == 2);
    CHECK(std::abs(o.two_sided[0].residual) <= 1e-14);
    CHECK(o.subsolution == Outcome::pass);
    CHECK(o.supersolution == Outcome::pass);
  }
}

TEST_CASE("catalog verdicts") {
  const auto grid = default_grid(CandidateKind::one_dimensional);
  for (std::size_t n : {2u, 3u, 5u}) {
    for (std::size_t k = 1; k < n; ++k) {
      for (const char* spec : {"halfline-tanh", "tanh-shifted:0.5", "tanh-shifted:1", "tanh-shifted:2", "zero"}) {
        CAPTURE(spec);
        CAPTURE(n);
        CAPTURE(k);
        const Verdict v = verify(make_candidate(spec, n, k), grid);
        CHECK(v.solution == Outcome::pass);
      }
      const Verdict p = verify(make_candidate("plain-tanh", n, k), grid);
      CHECK(p.subsolution == Outcome::fail);
      CHECK(p.supersolution == Outcome::pass);
      REQUIRE_FALSE(p.witnesses.empty());
      for (const Witness& w : p.witnesses) {
        CHECK(w.t < 0.0);
        CHECK(w.check == "subsolution");
      }
    }
  }
  // Witness cap plus the worst sample.
  const Verdict p = verify(make_candidate("plain-tanh", 3, 1), grid, {.max_witnesses = 5});
  REQUIRE(p.witnesses.size() == 6);
  CHECK(p.witnesses.back().rule == "classical-residual/worst");
  CHECK(*p.witnesses.back().residual == doctest::Approx(p.min_residual));
}

TEST_CASE("structure report") {
  const auto grid = default_grid(CandidateKind::one_dimensional);
  SUBCASE("halfline") {
    const Candidate c = make_candidate("halfline-tanh", 3, 1);
    const StructureReport s = analyze_profile_structure(c, verify(c, grid), grid);
    CHECK(s.sign_pattern == "nonnegative");
    CHECK(s.monotonicity == Monotonicity::nondecreasing);
    REQUIRE(s.plateau);
    CHECK(s.plateau->left_unbounded);
    CHECK(s.plateau->hi == 0.0);
    CHECK(s.monotone_supersolution_plateau.status == FlagStatus::ok);
    CHECK(s.consistent());
  }
  SUBCASE("tanh-shifted plateau") {
    const Candidate c = make_candidate("tanh-shifted:1", 3, 1);
    const StructureReport s = analyze_profile_structure(c, verify(c, grid), grid);
    REQUIRE(s.plateau);
    CHECK(s.plateau->lo == -1.0);
    CHECK(s.plateau->hi == 1.0);
    CHECK(s.monotonicity == Monotonicity::non_monotone);
    CHECK(s.monotone_supersolution_plateau.status == FlagStatus::not_applicable);
  }
  SUBCASE("plain tanh") {
    const Candidate c = make_candidate("plain-tanh", 3, 1);
    const StructureReport s = analyze_profile_structure(c, verify(c, grid), grid);
    CHECK(s.sign_pattern == "sign-changing");
    CHECK(s.nonnegative_subsolution.status == FlagStatus::not_applicable);
    CHECK(s.no_positive_supersolution.status == FlagStatus::ok);
    CHECK_FALSE(s.plateau);
  }
  SUBCASE("positive constant is no supersolution") {
    const Candidate c = make_candidate("constant:0.5", 3, 1);
    const Verdict v = verify(c, grid);
    CHECK(v.supersolution == Outcome::fail);
    CHECK(v.subsolution == Outcome::pass);
    CHECK(analyze_profile_structure(c, v, grid).consistent());
  }
  SUBCASE("radial flags (b) and (c) do not apply") {
    const Candidate c = make_candidate("radial-closed:0.3,1", 3, 1);
    const auto rg = default_grid(CandidateKind::radial);
    const StructureReport s = analyze_profile_structure(c, verify(c, rg), rg);
    CHECK(s.min_value > 0.0);  // decays below the zero tolerance near r = 20
    CHECK(s.no_positive_supersolution.status == FlagStatus::not_applicable);
    CHECK(s.monotone_supersolution_plateau.status == FlagStatus::not_applicable);
    CHECK(s.nonnegative_subsolution.status == FlagStatus::ok);
  }
}

TEST_CASE("serial and parallel scans agree") {
  const auto grid = default_grid(CandidateKind::one_dimensional);
  for (const char* spec : {"plain-tanh", "halfline-tanh", "tanh-shifted:0.5"}) {
    const Candidate c = make_candidate(spec, 4, 2);
    std::vector<double> smooth;
    for (double t : grid)
      if (!c.profile().junction_near(t, kCornerExclusion)) smooth.push_back(t);
    const auto a = scan_smooth_residuals(c, smooth, Exec::serial);
    const auto b = scan_smooth_residuals(c, smooth, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].residual == b[i].residual);
  }
}
