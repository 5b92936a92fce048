#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "bernstein/errors.hpp"
#include "bernstein/numerics.hpp"

namespace bernstein {

/// Exponential type bound kappa (radians).
struct Band {
  double kappa;
  explicit Band(double k) : kappa(k) {
    if (!(k > 0) || !std::isfinite(k)) throw InputError("Band: kappa must be positive and finite");
  }
};

struct LatticeOffset {
  double alpha;
  explicit LatticeOffset(double a) : alpha(a) {
    if (!(a >= 0.0 && a < 1.0)) throw InputError("LatticeOffset: alpha must lie in [0,1)");
  }
};

/// A bandlimited function held as orthonormal-basis coefficients c_n on the
/// shifted lattice (pi/kappa)(n+alpha), |n| <= N.  At kappa = pi the
/// coefficients coincide with the sample values.
struct SampledBandlimited {
  Band band;
  LatticeOffset offset;
  int window;                   // N
  std::vector<cplx> samples;    // size 2N+1, index n+N

  SampledBandlimited(Band b, LatticeOffset o, int N, std::vector<cplx> s)
      : band(b), offset(o), window(N), samples(std::move(s)) {
    if (N < 0 || samples.size() != size_t(2 * N + 1))
      throw InputError("SampledBandlimited: samples must hold 2N+1 values");
    for (const cplx& c : samples)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw InputError("SampledBandlimited: samples must be finite");
  }

  static SampledBandlimited zero(Band b, LatticeOffset o, int N) {
    return SampledBandlimited(b, o, N, std::vector<cplx>(2 * N + 1, cplx(0.0)));
  }

  double lattice_point(int n) const {
    return std::numbers::pi / band.kappa * (n + offset.alpha);
  }
  const cplx& coeff(int n) const { return samples[size_t(n + window)]; }
  cplx& coeff(int n) { return samples[size_t(n + window)]; }
};

/// sin(pi z)/(pi z) with a Taylor branch near the removable singularity.
cplx sinc(cplx z);
double sinc(double x);

/// Truncated orthonormal expansion sqrt(kappa/pi) sum c_n sinc((kappa/pi)z - n - alpha).
/// Throws OverflowError when kappa|Im z| exceeds the double exponent range;
/// use log_abs_interpolate there.
cplx interpolate(const SampledBandlimited& s, cplx z);

/// log|f(z)| evaluated with the exponential factor e^{kappa|Im z|} split off,
/// stable arbitrarily far from the real axis.
double log_abs_interpolate(const SampledBandlimited& s, cplx z);

/// Crude bound on the truncation tail |f(z) - f_N(z)| for |Im z| = y.
double interpolation_tail_bound(const SampledBandlimited& s, cplx z);

/// sqrt(sum |c_n|^2): the B^2_kappa norm of the truncated series.
double pw_norm(const SampledBandlimited& s);

/// f -> f^#, i.e. conjugated coefficients (lattice points are real).
SampledBandlimited involution(const SampledBandlimited& s);

/// log-scale growth ratios log|f(iy)| - log|y| - kappa|y| for each y.
/// Decreasing toward -inf along |y| increasing means condition (Y) holds
/// empirically.
std::vector<double> growth_ratio_Y(const SampledBandlimited& s, std::span<const double> ys);

}  // namespace bernstein
