#include "bernstein/bandlimited.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bernstein {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSincTaylorThreshold = 1e-4;
}  // namespace

cplx sinc(cplx z) {
  if (std::abs(z) < kSincTaylorThreshold) {
    const cplx p = kPi * z, p2 = p * p;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(kPi * z) / (kPi * z);
}

double sinc(double x) {
  if (std::abs(x) < kSincTaylorThreshold) {
    const double p = kPi * x, p2 = p * p;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(kPi * x) / (kPi * x);
}

cplx interpolate(const SampledBandlimited& s, cplx z) {
  if (s.band.kappa * std::abs(z.imag()) > 700.0)
    throw OverflowError("interpolate: kappa*|Im z| beyond exponent range, use log_abs_interpolate");
  const double scale = std::sqrt(s.band.kappa / kPi);
  const cplx w = (s.band.kappa / kPi) * z - s.offset.alpha;
  cplx sum = 0.0;
  // Increasing |n|, n<0 before n>0 at ties.
  sum += s.coeff(0) * sinc(w);
  for (int n = 1; n <= s.window; ++n) {
    sum += s.coeff(-n) * sinc(w + double(n));
    sum += s.coeff(n) * sinc(w - double(n));
  }
  return scale * sum;
}

double log_abs_interpolate(const SampledBandlimited& s, cplx z) {
  const cplx w = (s.band.kappa / kPi) * z - s.offset.alpha;
  const double B = kPi * w.imag();
  const double absB = std::abs(B), e2 = std::exp(-2.0 * absB);
  const double sgnB = (B >= 0 ? 1.0 : -1.0);
  cplx sum = 0.0;
  for (int n = -s.window; n <= s.window; ++n) {
    const cplx v = w - double(n);
    const double A = kPi * v.real();
    // sin(A + iB) e^{-|B|}, computed without overflow.
    const cplx scaled_sin(std::sin(A) * 0.5 * (1.0 + e2),
                          std::cos(A) * sgnB * 0.5 * (1.0 - e2));
    sum += s.coeff(n) * scaled_sin / (kPi * v);
  }
  return 0.5 * std::log(s.band.kappa / kPi) + absB + std::log(std::abs(sum));
}

double interpolation_tail_bound(const SampledBandlimited& s, cplx z) {
  double sup = 0.0;
  for (const cplx& c : s.samples) sup = std::max(sup, std::abs(c));
  const double y = std::abs(z.imag());
  if (s.band.kappa * y > 700.0) return std::numeric_limits<double>::infinity();
  return sup * std::exp(s.band.kappa * y) / std::max(1, s.window);
}

double pw_norm(const SampledBandlimited& s) {
  double acc = 0.0;
  for (const cplx& c : s.samples) acc += std::norm(c);
  return std::sqrt(acc);
}

SampledBandlimited involution(const SampledBandlimited& s) {
  SampledBandlimited out = s;
  for (cplx& c : out.samples) c = std::conj(c);
  return out;
}

std::vector<double> growth_ratio_Y(const SampledBandlimited& s, std::span<const double> ys) {
  std::vector<double> out;
  out.reserve(ys.size());
  for (double y : ys) {
    if (y == 0.0) throw InputError("growth_ratio_Y: y values must be nonzero");
    out.push_back(log_abs_interpolate(s, cplx(0.0, y)) - std::log(std::abs(y)) -
                  s.band.kappa * std::abs(y));
  }
  return out;
}

}  // namespace bernstein
