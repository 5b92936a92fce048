#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bernstein/bandlimited.hpp"

using namespace bernstein;

namespace {
constexpr double kPi = std::numbers::pi;

SampledBandlimited random_fn(Band b, LatticeOffset o, int N, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SampledBandlimited s = SampledBandlimited::zero(b, o, N);
  for (int n = -N; n <= N; ++n) s.coeff(n) = cplx(u(rng), u(rng));
  return s;
}
}  // namespace

TEST_CASE("sinc special values and Taylor branch") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(std::abs(sinc(1.0)) < 1e-15);
  CHECK(std::abs(sinc(0.5) - 2.0 / kPi) < 1e-15);
  // Continuity across the small-argument switch.
  const double eps = 1e-4;
  CHECK(std::abs(sinc(eps * (1 - 1e-9)) - sinc(eps * (1 + 1e-9))) < 1e-14);
  CHECK(std::abs(sinc(cplx(0.0, 1.0)) - std::sinh(kPi) / kPi) < 1e-13);
}

TEST_CASE("basic validation of Band, LatticeOffset and sample windows") {
  CHECK_THROWS_AS(Band(0.0), InputError);
  CHECK_THROWS_AS(Band(-1.0), InputError);
  CHECK_THROWS_AS(LatticeOffset(1.0), InputError);
  CHECK_THROWS_AS(LatticeOffset(-0.1), InputError);
  CHECK_THROWS_AS(SampledBandlimited(Band(kPi), LatticeOffset(0.0), 2, {1.0, 2.0}), InputError);
}

TEST_CASE("interpolation reproduces lattice values at kappa = pi") {
  const SampledBandlimited s = random_fn(Band(kPi), LatticeOffset(0.25), 12, 7);
  for (int n = -12; n <= 12; ++n) {
    const cplx v = interpolate(s, cplx(s.lattice_point(n), 0.0));
    CHECK(std::abs(v - s.coeff(n)) < 1e-12);
  }
}

TEST_CASE("a single coefficient synthesizes a shifted sinc") {
  // kappa = pi, alpha = 0, delta at 0: f(z) = sinc(z).
  SampledBandlimited s = SampledBandlimited::zero(Band(kPi), LatticeOffset(0.0), 4);
  s.coeff(0) = 1.0;
  CHECK(std::abs(interpolate(s, cplx(0.5, 0.0)) - cplx(2.0 / kPi, 0.0)) < 1e-14);
  CHECK(std::abs(interpolate(s, cplx(3.0, 0.0))) < 1e-14);
}

TEST_CASE("dilation covariance of the orthonormal basis") {
  // With the same coefficients, f_{2kappa}(z) = sqrt(2) f_kappa(2z).
  const int N = 10;
  const SampledBandlimited f1 = random_fn(Band(kPi / 2.0), LatticeOffset(0.0), N, 11);
  SampledBandlimited f2 = SampledBandlimited::zero(Band(kPi), LatticeOffset(0.0), N);
  for (int n = -N; n <= N; ++n) f2.coeff(n) = f1.coeff(n);
  for (double x : {-2.3, 0.4, 1.7}) {
    const cplx lhs = interpolate(f2, cplx(x, 0.0));
    const cplx rhs = std::sqrt(2.0) * interpolate(f1, cplx(2.0 * x, 0.0));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("pw_norm is the coefficient l2 norm") {
  const SampledBandlimited s = random_fn(Band(2.0), LatticeOffset(0.5), 6, 3);
  double acc = 0.0;
  for (const cplx& c : s.samples) acc += std::norm(c);
  CHECK(std::abs(pw_norm(s) - std::sqrt(acc)) < 1e-14);
}

TEST_CASE("involution conjugates the function across the real axis") {
  const SampledBandlimited s = random_fn(Band(kPi), LatticeOffset(0.0), 8, 5);
  const SampledBandlimited sh = involution(s);
  for (cplx z : {cplx(0.3, 0.7), cplx(-1.2, -0.4)}) {
    const cplx lhs = interpolate(sh, z);
    const cplx rhs = std::conj(interpolate(s, std::conj(z)));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("log-scale evaluation matches direct evaluation at moderate height") {
  const SampledBandlimited s = random_fn(Band(kPi), LatticeOffset(0.0), 8, 9);
  const cplx z(0.7, 5.0);
  CHECK(std::abs(log_abs_interpolate(s, z) - std::log(std::abs(interpolate(s, z)))) < 1e-10);
}

TEST_CASE("direct evaluation overflows far from the axis, log form survives") {
  const SampledBandlimited s = random_fn(Band(kPi), LatticeOffset(0.0), 4, 13);
  CHECK_THROWS_AS(interpolate(s, cplx(0.0, 500.0)), OverflowError);
  const double lv = log_abs_interpolate(s, cplx(0.0, 500.0));
  CHECK(std::isfinite(lv));
  // Type-pi growth: log|f(iy)| ~ pi y + O(log y).
  CHECK(lv > 0.9 * kPi * 500.0);
  CHECK(lv < 1.1 * kPi * 500.0);
}

TEST_CASE("growth ratios decrease for a truncated expansion") {
  const SampledBandlimited s = random_fn(Band(kPi), LatticeOffset(0.0), 8, 17);
  const double ys[] = {2.0, 4.0, 8.0, 16.0};
  const std::vector<double> r = growth_ratio_Y(s, ys);
  REQUIRE(r.size() == 4);
  for (size_t i = 1; i < r.size(); ++i) CHECK(r[i] < r[i - 1]);
}

TEST_CASE("tail bound is a nonnegative decreasing function of the window") {
  const cplx z(0.3, 1.0);
  const double b1 = interpolation_tail_bound(random_fn(Band(kPi), LatticeOffset(0.0), 8, 19), z);
  const double b2 =
      interpolation_tail_bound(random_fn(Band(kPi), LatticeOffset(0.0), 32, 19), z);
  CHECK(b1 >= 0.0);
  CHECK(b2 >= 0.0);
  CHECK(b2 <= b1 * 1.5);  // same coefficient scale, wider window: no growth
}
