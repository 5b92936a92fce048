#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "bernstein/numerics.hpp"

using namespace bernstein;

namespace {
constexpr double kPi = std::numbers::pi;

QuadratureSpec tight() {
  QuadratureSpec s;
  s.rel_tol = 1e-11;
  s.abs_tol = 1e-13;
  return s;
}
}  // namespace

TEST_CASE("adaptive quadrature reproduces closed forms") {
  const QuadratureSpec spec = tight();

  auto lorentz = [](double x) -> cplx { return 1.0 / (1.0 + x * x); };
  const double central = integrate(lorentz, Interval(-1e3, 1e3), spec).real();
  const double tail = integrate_tail(lorentz, 1e3, spec).real();
  CHECK(std::abs(central + tail - kPi) < 1e-9);

  auto gauss = [](double x) -> cplx { return std::exp(-x * x); };
  CHECK(std::abs(integrate(gauss, Interval(-10.0, 10.0), spec).real() - std::sqrt(kPi)) < 1e-10);

  // Oscillatory with a panel-width cap: int_0^pi e^{ix} dx = 2i.
  QuadratureSpec osc = tight();
  osc.max_panel_width = 0.5;
  const cplx e = integrate([](double x) -> cplx { return std::exp(cplx(0.0, x)); },
                           Interval(0.0, kPi), osc);
  CHECK(std::abs(e - cplx(0.0, 2.0)) < 1e-10);
}

TEST_CASE("interior breakpoints are honored") {
  const QuadratureSpec spec = tight();
  // |x| has a kink at 0; splitting there keeps the rule exact.
  const double split[] = {0.0};
  const double v =
      integrate([](double x) -> cplx { return std::abs(x); }, Interval(-1.0, 2.0), spec, split)
          .real();
  CHECK(std::abs(v - 2.5) < 1e-12);
}

TEST_CASE("tail substitution integrates certified quadratic decay") {
  const QuadratureSpec spec = tight();
  // int_{|t|>1} t^-2 dt = 2.
  const double v =
      integrate_tail([](double t) -> cplx { return 1.0 / (t * t); }, 1.0, spec).real();
  CHECK(std::abs(v - 2.0) < 1e-11);
  CHECK_THROWS_AS(integrate_tail([](double) -> cplx { return 0.0; }, -1.0, spec), InputError);
}

TEST_CASE("principal value cancels simple poles") {
  const QuadratureSpec spec = tight();
  auto inv = [](double x) -> cplx { return 1.0 / x; };
  CHECK(std::abs(principal_value(inv, 0.0, Interval(-1.0, 1.0), spec)) < 1e-11);
  CHECK(std::abs(principal_value(inv, 0.0, Interval(-1.0, 2.0), spec).real() - std::log(2.0)) <
        1e-10);
  auto shifted = [](double x) -> cplx { return 1.0 / (x - 0.5); };
  CHECK(std::abs(principal_value(shifted, 0.5, Interval(0.0, 2.0), spec).real() -
                 std::log(3.0)) < 1e-10);
  CHECK_THROWS_AS(principal_value(inv, 5.0, Interval(-1.0, 1.0), spec), InputError);
}

TEST_CASE("fixed 7-point Gauss panel is exact on low-degree polynomials") {
  // Degree 13 and below is exact for a 7-point rule.
  auto poly = [](double x) -> cplx { return 1.0 + x - 3.0 * x * x + 0.5 * x * x * x; };
  const double got = fixed_gauss7(poly, -1.0, 2.0).real();
  // Antiderivative x + x^2/2 - x^3 + x^4/8 evaluated at the endpoints.
  auto F = [](double x) { return x + x * x / 2.0 - x * x * x + x * x * x * x / 8.0; };
  CHECK(std::abs(got - (F(2.0) - F(-1.0))) < 1e-13);
}

TEST_CASE("top singular value agrees with a one-sided Jacobi oracle") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 20;
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = cplx(u(rng), u(rng));
    const double top = top_singular_value(M);
    const std::vector<double> all = singular_values(M);
    CHECK(std::abs(top - all.front()) < 1e-8 * std::max(1.0, all.front()));
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i] <= all[i - 1] + 1e-12);
  }
}

TEST_CASE("top singular value resolves a degenerate leading pair") {
  // diag(2, 2, 1) conjugated by a rotation: the top eigenvalue has
  // multiplicity two, which stalls plain single-vector power iteration.
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(3, 3);
  D(0, 0) = 2.0;
  D(1, 1) = 2.0;
  D(2, 2) = 1.0;
  Eigen::MatrixXcd G(3, 3);
  G << cplx(1, 1), cplx(0, 2), cplx(-1, 0), cplx(2, 0), cplx(1, -1), cplx(0, 1), cplx(0, -1),
      cplx(1, 0), cplx(1, 1);
  const Eigen::MatrixXcd Q =
      Eigen::HouseholderQR<Eigen::MatrixXcd>(G).householderQ() * Eigen::MatrixXcd::Identity(3, 3);
  const Eigen::MatrixXcd M = Q * D * Q.adjoint();
  CHECK(std::abs(top_singular_value(M) - 2.0) < 1e-10);
}

TEST_CASE("singular value helpers reject non-square input") {
  Eigen::MatrixXcd M(2, 3);
  M.setZero();
  CHECK_THROWS_AS(top_singular_value(M), InputError);
  CHECK_THROWS_AS(singular_values(M), InputError);
  CHECK(top_singular_value(Eigen::MatrixXcd(0, 0)) == 0.0);
}

TEST_CASE("interval and quadrature spec validation") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), InputError);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), InputError);
  QuadratureSpec bad;
  bad.rel_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), InputError);
}
