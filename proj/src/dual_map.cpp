#include "bernstein/dual_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bernstein {

namespace {
constexpr double kPi = std::numbers::pi;
}

XAlphaElement::XAlphaElement(SampledBandlimited fn, std::function<cplx(cplx)> cf)
    : f(std::move(fn)), closed_form(std::move(cf)) {
  if (std::abs(f.band.kappa - kPi) > 1e-12)
    throw InputError("XAlphaElement: requires kappa = pi");
}

cplx XAlphaElement::lattice_value(int n) const {
  const double x = n + f.offset.alpha;
  if (closed_form) return closed_form(cplx(x, 0.0));
  if (std::abs(n) <= f.window) return f.coeff(n);  // kappa = pi: coefficient = sample
  return 0.0;
}

cplx t_alpha(const FiniteSequence& a, LatticeOffset alpha, cplx z) {
  const cplx w = z - alpha.alpha;
  cplx sum = a.at(0) * sinc(w);
  for (int n = 1; n <= a.window; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    sum += a.at(-n) * sign * (w / double(-n)) * sinc(w + double(n));
    sum += a.at(n) * sign * (w / double(n)) * sinc(w - double(n));
  }
  return std::exp(cplx(0.0, -kPi * alpha.alpha)) * sum;
}

XAlphaElement t_alpha_element(const FiniteSequence& a, LatticeOffset alpha, int N) {
  SampledBandlimited s = SampledBandlimited::zero(Band(kPi), alpha, N);
  auto eval = [a, alpha](cplx z) { return t_alpha(a, alpha, z); };
  for (int n = -N; n <= N; ++n) s.coeff(n) = eval(cplx(n + alpha.alpha, 0.0));
  return XAlphaElement(std::move(s), eval);
}

double x_alpha_norm(const XAlphaElement& f) {
  const int N = f.window();
  FiniteSequence b = FiniteSequence::zero(N);
  for (int n = -N; n <= N; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    b.at(n) = sign * f.lattice_value(n);
  }
  return bmo_z_norm(b);
}

PairingResult pairing_discrete(const SampledBandlimited& h, const XAlphaElement& f,
                               LatticeOffset alpha) {
  const int N = h.window;
  const bool matched = std::abs(h.offset.alpha - alpha.alpha) < 1e-15 &&
                       std::abs(h.band.kappa - kPi) < 1e-12;
  cplx value = 0.0;
  double octave = 0.0;
  for (int n = -N; n <= N; ++n) {
    const double x = n + alpha.alpha;
    const cplx hv = matched ? h.coeff(n) : interpolate(h, cplx(x, 0.0));
    const cplx term = hv * f.eval(cplx(x, 0.0));
    value += term;
    if (std::abs(n) > N / 2) octave += std::abs(term);
  }
  return {value, octave};
}

double r_alpha_check(const XAlphaElement& f, LatticeOffset alpha) {
  if (!(alpha.alpha > 0.0 && alpha.alpha < 1.0))
    throw InputError("r_alpha_check: requires 0 < alpha < 1");
  const int N = f.window();
  // a_k = (-1)^k f(k), with the a_0 sinc component removed.
  const cplx a0 = f.eval(cplx(0.0, 0.0));
  auto reduced = [&f, a0](cplx z) { return f.eval(z) - a0 * sinc(z); };
  FiniteSequence a = FiniteSequence::zero(N);
  for (int k = -N; k <= N; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    a.at(k) = sign * reduced(cplx(double(k), 0.0));
  }
  if (std::abs(a.at(0)) > 1e-10)
    throw PrecondViolated("r_alpha_check: center entry nonzero after sinc reduction");
  cplx c = 0.0;
  for (int k = 1; k <= N; ++k) c += a.at(k) / double(k) + a.at(-k) / double(-k);
  const int M = N / 2;
  const FiniteSequence Ha = discrete_hilbert(a, alpha, M);
  const double factor = std::sin(kPi * alpha.alpha) / kPi;
  double sup = 0.0;
  for (int n = -M; n <= M; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const cplx lhs = sign * reduced(cplx(n + alpha.alpha, 0.0));
    const cplx rhs = factor * (Ha.at(n) + c);
    sup = std::max(sup, std::abs(lhs - rhs));
  }
  return sup;
}

ClarkMeasure clark_measure(LatticeOffset alpha, int N) {
  if (N < 0) throw InputError("clark_measure: window must be >= 0");
  return {alpha, N, std::vector<double>(size_t(2 * N + 1), 1.0 / kPi)};
}

double ClarkMeasure::total_mass() const {
  double m = 0.0;
  for (double w : weights) m += w;
  return m;
}

double bmo_clark_norm(const XAlphaElement& f, LatticeOffset alpha) {
  const int N = f.window();
  const ClarkMeasure mu = clark_measure(alpha, N);
  std::vector<cplx> b(size_t(2 * N + 1));
  for (int n = -N; n <= N; ++n)
    b[size_t(n + N)] =
        std::exp(cplx(0.0, kPi * (n + alpha.alpha))) * f.lattice_value(n);
  const int L = 2 * N + 1;
  double sup = 0.0;
  for (int i = 0; i < L; ++i) {
    for (int j = i; j < L; ++j) {
      double mass = 0.0;
      cplx wsum = 0.0;
      for (int k = i; k <= j; ++k) {
        mass += mu.weights[size_t(k)];
        wsum += mu.weights[size_t(k)] * b[size_t(k)];
      }
      const cplx mean = wsum / mass;
      double osc = 0.0;
      for (int k = i; k <= j; ++k) osc += mu.weights[size_t(k)] * std::abs(b[size_t(k)] - mean);
      // Intervals normalized by point count; the leading pi compensates the
      // 1/pi point masses.
      sup = std::max(sup, kPi * osc / double(j - i + 1));
    }
  }
  return sup;
}

}  // namespace bernstein
