#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cpshell/quadrature.hpp"

using namespace cpshell;

TEST_CASE("finite interval integrals") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

  const auto p = integrate([](double x) { return std::pow(x, 7); }, 0.0, 1.0);
  CHECK(p.value == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(p.panels == 1);  // Kronrod 15 is exact for degree 7

  // integrable endpoint singularity needs bisection
  const auto s = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-10, 0.0, 4000});
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.panels > 1);
}

TEST_CASE("half line through the rational map") {
  auto exp_decay = [](std::span<const double> k, std::span<double> y) {
    for (std::size_t i = 0; i < k.size(); ++i) y[i] = std::exp(-k[i]);
  };
  const auto r = integrate_half_line(exp_decay, 1.0, {});
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));

  auto lorentz = [](std::span<const double> k, std::span<double> y) {
    for (std::size_t i = 0; i < k.size(); ++i) y[i] = 1.0 / (1.0 + k[i] * k[i]);
  };
  const auto breaks = geometric_breaks(1e-3, 1e3, 8.0);
  const auto l = integrate_half_line(lorentz, 0.01, breaks);
  CHECK(l.converged);
  CHECK(l.value == doctest::Approx(M_PI / 2).epsilon(1e-10));
}

TEST_CASE("tighter tolerance does not lose accuracy") {
  auto f = [](std::span<const double> k, std::span<double> y) {
    for (std::size_t i = 0; i < k.size(); ++i) y[i] = k[i] * k[i] * std::exp(-3.0 * k[i]);
  };
  const double exact = 2.0 / 27.0;
  double prev_err = 1.0;
  for (double tol : {1e-4, 1e-7, 1e-10, 1e-13}) {
    const auto r = integrate_half_line(f, 0.3, {}, {tol, 0.0, 4000});
    CAPTURE(tol);
    CHECK(r.converged);
    const double err = std::abs(r.value - exact) / exact;
    CHECK(err <= std::max(tol, 1e-14));
    CHECK(err <= prev_err * 1.0001 + 1e-15);
    prev_err = err;
  }
}

TEST_CASE("panel budget exhaustion reports non-convergence") {
  const auto r = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, {1e-14, 0.0, 10});
  CHECK_FALSE(r.converged);
  CHECK(r.panels <= 11);
}

TEST_CASE("geometric breakpoints") {
  const auto b = geometric_breaks(1.0, 1000.0, 10.0);
  REQUIRE(b.size() == 4);
  CHECK(b.front() == 1.0);
  CHECK(b[1] == doctest::Approx(10.0));
  CHECK(b.back() == doctest::Approx(1000.0));
  CHECK(geometric_breaks(2.0, 1.0, 8.0).empty());
}
