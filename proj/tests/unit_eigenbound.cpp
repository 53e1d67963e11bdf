#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tlap/eigenbound.hpp"
#include "tlap/errors.hpp"
#include "tlap/operator_core.hpp"

using namespace tlap;

namespace {

constexpr double kPi = std::numbers::pi;

// Strip-coordinate description, written out independently of DomainQn.
bool in_parallelogram(int n, double x, double y) {
  const double s = 0.5 * (n * x + y);
  const double t = 0.5 * (n * x - y);
  return s > 0 && s < kPi && t > -kPi / 2 && t < kPi / 2;
}

}  // namespace

TEST_CASE("w_n values and Hessian") {
  CHECK(w_n(2, kPi / 4, kPi / 2) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(w_n(1, kPi / 2, kPi / 2) == doctest::Approx(-2.0).epsilon(1e-15));
  const SymmetricMatrix h = hessian_w_n(2, kPi / 4, kPi / 2);
  CHECK(h(0, 0) == doctest::Approx(4.0));
  CHECK(h(1, 1) == doctest::Approx(1.0));
  CHECK(h(0, 1) == 0.0);
  // Both representations of w_n agree.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 7;
    const double x = u(rng), y = u(rng);
    const double product = -2.0 * std::sin(0.5 * (n * x + y)) * std::cos(0.5 * (n * x - y));
    CHECK(w_n(n, x, y) == doctest::Approx(product).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("domain geometry") {
  for (int n : {1, 2, 5, 10}) {
    const DomainQn q(n);
    CHECK(q.exact_area() == doctest::Approx(2 * kPi * kPi / n));
    CHECK(q.x_min() == doctest::Approx(-kPi / (2 * n)));
    CHECK(q.x_max() == doctest::Approx(3 * kPi / (2 * n)));
    CHECK(q.y_min() == doctest::Approx(-kPi / 2));
    CHECK(q.y_max() == doctest::Approx(3 * kPi / 2));
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> ux(q.x_min(), q.x_max()), uy(q.y_min(), q.y_max());
    for (int i = 0; i < 2000; ++i) {
      const double x = ux(rng), y = uy(rng);
      CHECK(q.contains(x, y, 0.0) == in_parallelogram(n, x, y));
    }
    // w_n vanishes on the four edges.
    for (double s : {0.0, kPi}) {
      for (double t = -kPi / 2; t <= kPi / 2; t += 0.1) {
        const double x = (s + t) / n, y = s - t;
        CHECK(std::abs(w_n(n, x, y)) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(DomainQn(0), InputError);
}

TEST_CASE("interior residual oracle") {
  // P-_1 of diag(a, b) is min(a, b); checked at random interior points.
  for (int n : {1, 3, 10}) {
    const DomainQn q(n);
    std::mt19937_64 rng(100 + n);
    std::uniform_real_distribution<double> us(0.0, kPi), ut(-kPi / 2, kPi / 2);
    for (int i = 0; i < 500; ++i) {
      const double s = us(rng), t = ut(rng);
      const double x = (s + t) / n, y = s - t;
      const double expected = std::min(n * n * std::sin(n * x), std::sin(y)) - std::sin(n * x) - std::sin(y);
      const double got = pminus_k(hessian_w_n(n, x, y), 1) + w_n(n, x, y);
      CHECK(got == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
      CHECK(got <= 1e-12);
    }
  }
}

TEST_CASE("scan certifies the inequality") {
  for (int n : {1, 2, 5, 10}) {
    CAPTURE(n);
    const EigenScanReport r = scan_inequality(n, 200);
    CHECK(r.passed());
    CHECK(r.all_regions_exercised());
    CHECK(r.max_residual <= kEigenScanTol);
    CHECK(r.max_w < 0.0);
    CHECK(r.max_boundary_abs_w <= kBoundaryTol);
    CHECK(r.chain_failures == 0);
    CHECK(r.failures.empty());
    CHECK(r.interior_points > 0);
    CHECK(r.interior_points < 200u * 200u);
    CHECK(r.count_a + r.count_b + r.count_c + r.count_both == r.interior_points);
    CHECK(r.estimated_area == doctest::Approx(2 * kPi * kPi / n).epsilon(0.02));
  }
  CHECK_THROWS_AS(scan_inequality(1, 10), InputError);
}

TEST_CASE("area estimate") {
  double scaled_first = 0.0;
  for (int n : {1, 2, 5, 10, 20}) {
    const double a = area_estimate(n, 100000);
    CHECK(std::abs(a - 2 * kPi * kPi / n) <= 0.01 * 2 * kPi * kPi / n);
    if (n == 1) scaled_first = a;
    CHECK(a * n == doctest::Approx(scaled_first).epsilon(0.02));
  }
  CHECK_THROWS_AS(area_estimate(1, 10), InputError);
}

TEST_CASE("serial and parallel scans agree") {
  for (int n : {1, 7}) {
    const EigenScanReport a = scan_inequality(n, 150, Exec::serial);
    const EigenScanReport b = scan_inequality(n, 150, Exec::parallel);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.max_w == b.max_w);
    CHECK(a.max_boundary_abs_w == b.max_boundary_abs_w);
    CHECK(a.count_a == b.count_a);
    CHECK(a.count_b == b.count_b);
    CHECK(a.count_c == b.count_c);
    CHECK(a.count_both == b.count_both);
    CHECK(a.estimated_area == b.estimated_area);
    CHECK(area_estimate(n, 100000, Exec::serial) == area_estimate(n, 100000, Exec::parallel));
  }
}

TEST_CASE("certificate") {
  const MuCertificate c = mu_upper_bound_report(5, 200);
  CHECK(c.bound == 1.0);
  CHECK(c.kind == "grid-evidence certificate");
  CHECK(c.statement.find("<= 1") != std::string::npos);
  CHECK(c.scan.passed());

  const auto pts = scan_points(3, 60);
  CHECK_FALSE(pts.empty());
  for (const ScanPoint& p : pts) {
    CHECK(p.region != Region::none);
    CHECK(p.residual <= kEigenScanTol);
  }
}
