#include "bernstein/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bernstein {

namespace {
constexpr double kPi = std::numbers::pi;

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters,
                  double* out_fmin) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b), fm = f(xm);
  if (out_fmin) *out_fmin = fm;
  return xm;
}

}  // namespace

GridFunction::GridFunction(double h_, double T_, std::vector<cplx> v, TailModel tail_)
    : h(h_), T(T_), values(std::move(v)), tail(tail_) {
  if (!(h > 0) || !std::isfinite(h)) throw InputError("GridFunction: h must be > 0");
  if (!(T >= 1) || !std::isfinite(T)) throw InputError("GridFunction: T must be >= 1");
  const long K = std::lround(T / h);
  if (long(values.size()) != 2 * K + 1)
    throw InputError("GridFunction: values must hold 2*round(T/h)+1 entries");
  for (const cplx& c : values)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InputError("GridFunction: values must be finite");
}

GridFunction GridFunction::tabulate(double h, double T, const std::function<cplx(double)>& f,
                                    TailModel tail) {
  const long K = std::lround(T / h);
  std::vector<cplx> v(size_t(2 * K + 1));
  for (long k = -K; k <= K; ++k) v[size_t(k + K)] = f(k * h);
  return GridFunction(h, T, std::move(v), tail);
}

double GridFunction::sup_abs() const {
  double s = 0.0;
  for (const cplx& c : values) s = std::max(s, std::abs(c));
  return s;
}

cplx GridFunction::eval(double x) const {
  const int K = half_points();
  if (std::abs(x) > T + 0.5 * h) return 0.0;
  double u = x / h + K;
  int i0 = int(std::floor(u));
  i0 = std::clamp(i0, 0, 2 * K - 1);
  const double t = u - i0;
  const cplx p0 = values[size_t(std::max(i0 - 1, 0))];
  const cplx p1 = values[size_t(i0)];
  const cplx p2 = values[size_t(i0 + 1)];
  const cplx p3 = values[size_t(std::min(i0 + 2, 2 * K))];
  // Catmull-Rom.
  return 0.5 * (2.0 * p1 + (p2 - p0) * t + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * (t * t) +
                (3.0 * p1 - p0 - 3.0 * p2 + p3) * (t * t * t));
}

cplx grid_integrate(const GridFunction& g, const std::function<cplx(double)>& F, double lo,
                    double hi) {
  lo = std::max(lo, -g.T);
  hi = std::min(hi, g.T);
  if (!(lo < hi)) return 0.0;
  const int K = g.half_points();
  auto f = [&g, &F](double t) { return g.eval(t) * F(t); };
  // March cell by cell so each panel sees a single cubic piece.
  const long i_lo = std::lround(std::floor(lo / g.h)) + K;
  const long i_hi = std::lround(std::ceil(hi / g.h)) + K;
  cplx sum = 0.0;
  for (long i = i_lo; i < i_hi; ++i) {
    const double a = std::max(lo, (i - K) * g.h);
    const double b = std::min(hi, (i + 1 - K) * g.h);
    if (b > a) sum += fixed_gauss7(f, a, b);
  }
  return sum;
}

SampledBandlimited project_l2(const GridFunction& g, Band band, int window) {
  const double scale = std::sqrt(band.kappa / kPi);
  if (window < 0) window = std::max(0, int(std::floor(g.T * band.kappa / kPi)) - 1);
  SampledBandlimited out = SampledBandlimited::zero(band, LatticeOffset(0.0), window);
  for (int n = -window; n <= window; ++n) {
    auto e_n = [&](double t) -> cplx { return scale * sinc(band.kappa / kPi * t - n); };
    out.coeff(n) = grid_integrate(g, e_n, -g.T, g.T);
  }
  return out;
}

std::vector<cplx> project_linf(const GridFunction& g, const std::vector<cplx>& zs, double R) {
  if (g.tail.kind == TailModel::Kind::None)
    throw MissingTailModel("project_linf: symbol needs a declared tail model");
  if (!(R > 0)) throw InputError("project_linf: R must be > 0");
  std::vector<cplx> out;
  out.reserve(zs.size());
  for (const cplx& z : zs) {
    if (std::abs(z.real()) > R)
      throw InputError("project_linf: evaluation point outside |Re z| <= R");
    const double S = 3.0 * R;
    cplx near = grid_integrate(
        g, [&z](double t) { return sinc(t - z); }, -S, S);
    cplx far = 0.0;
    if (g.T > S) {
      auto comp = [&z](double t) -> cplx {
        return std::sin(kPi * (t - z)) / kPi * (1.0 / (t - z) - 1.0 / t);
      };
      far = grid_integrate(g, comp, -g.T, -S) + grid_integrate(g, comp, S, g.T);
    }
    out.push_back(near + far);
  }
  return out;
}

GridFunction analytic_project(const GridFunction& g, int side, double out_h, double out_T) {
  if (side != 1 && side != -1) throw InputError("analytic_project: side must be +1 or -1");
  if (g.tail.kind == TailModel::Kind::None)
    throw MissingTailModel("analytic_project: symbol needs a declared tail model");
  if (out_T <= 0) out_T = std::min(g.T / 4.0, 16.0);
  if (out_h <= 0) out_h = std::max(g.h, out_T / 200.0);
  const long Ko = std::lround(out_T / out_h);
  out_T = Ko * out_h;
  if (!(out_T >= 1)) throw InputError("analytic_project: output extent too small");

  std::vector<cplx> vals(size_t(2 * Ko + 1));
  for (long k = -Ko; k <= Ko; ++k) {
    const double x = k * out_h;
    const double delta = std::min(1.0, 0.5 * (g.T - std::abs(x)));
    auto kern = [x](double t) -> cplx { return 1.0 / (t - x); };
    cplx hil = grid_integrate(g, kern, -g.T, x - delta) + grid_integrate(g, kern, x + delta, g.T);
    // Symmetric excision: the pole cancels in the odd difference quotient.
    auto q = [&g, x](double u) -> cplx { return (g.eval(x + u) - g.eval(x - u)) / u; };
    const long m = std::lround(std::ceil(delta / g.h));
    for (long s = 0; s < m; ++s)
      hil += fixed_gauss7(q, s * delta / m, (s + 1) * delta / m);
    // P_+ = phi/2 - (i/2pi) Hil, P_- = phi/2 + (i/2pi) Hil.
    vals[size_t(k + Ko)] =
        0.5 * g.eval(x) + double(-side) * cplx(0.0, 1.0 / (2.0 * kPi)) * hil;
  }
  // Representative: zero mean on the central unit interval.
  cplx mean = 0.0;
  long count = 0;
  for (long k = -Ko; k <= Ko; ++k)
    if (std::abs(k * out_h) <= 0.5) {
      mean += vals[size_t(k + Ko)];
      ++count;
    }
  if (count > 0) mean /= double(count);
  for (cplx& v : vals) v -= mean;
  GridFunction out(out_h, out_T, std::move(vals), TailModel::bounded_by(0.0));
  out.tail = TailModel::bounded_by(out.sup_abs());
  return out;
}

namespace {

// Per-scale sup of mean oscillation; scales are index-lengths m = 2,4,8,...
std::vector<std::pair<int, double>> oscillation_by_scale(const GridFunction& g) {
  const int L = int(g.values.size());
  std::vector<cplx> pre(size_t(L) + 1, 0.0);
  for (int i = 0; i < L; ++i) pre[size_t(i) + 1] = pre[size_t(i)] + g.values[size_t(i)];
  std::vector<std::pair<int, double>> out;
  for (int m = 2; m <= L - 1 && m * g.h <= 2.0 * g.T + 1e-12; m *= 2) {
    double sup = 0.0;
    for (int i = 0; i + m < L; ++i) {
      const cplx meanv = (pre[size_t(i + m + 1)] - pre[size_t(i)]) / double(m + 1);
      double osc = 0.0;
      for (int k = i; k <= i + m; ++k) osc += std::abs(g.values[size_t(k)] - meanv);
      sup = std::max(sup, osc / (m + 1));
    }
    out.emplace_back(m, sup);
  }
  return out;
}

}  // namespace

BmoEstimate bmo_r_norm(const GridFunction& g) {
  const auto scales = oscillation_by_scale(g);
  BmoEstimate est{0.0, 2.0 * g.h, 2.0 * g.h};
  for (const auto& [m, sup] : scales) {
    est.value = std::max(est.value, sup);
    est.coarsest_scale = m * g.h;
  }
  return est;
}

std::vector<double> vmo_profile(const GridFunction& g, const std::vector<double>& deltas) {
  const auto scales = oscillation_by_scale(g);
  std::vector<double> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    if (d < 2.0 * g.h || d > 2.0 * g.T)
      throw InputError("vmo_profile: delta outside the resolvable scale range");
    double sup = 0.0;
    for (const auto& [m, s] : scales)
      if (m * g.h <= d) sup = std::max(sup, s);
    out.push_back(sup);
  }
  return out;
}

double bmoe_norm(const GridFunction& f0) {
  const int K = f0.half_points();
  double total = 0.0;
  for (int sign : {+1, -1}) {
    auto bmo_at = [&](cplx c) -> double {
      std::vector<cplx> v(f0.values.size());
      for (int k = -K; k <= K; ++k) {
        const double x = k * f0.h;
        v[size_t(k + K)] = std::exp(cplx(0.0, sign * kPi * x)) * f0.at(k) +
                           c * std::exp(cplx(0.0, sign * 2.0 * kPi * x));
      }
      return bmo_r_norm(GridFunction(f0.h, f0.T, std::move(v), f0.tail)).value;
    };
    const double b0 = bmo_at(0.0);
    if (b0 == 0.0) continue;
    const double r = 2.0 * b0;
    cplx c = 0.0;
    double best = b0;
    for (int sweep = 0; sweep < 4; ++sweep) {
      double fmin = best;
      const double re = golden_min(
          [&](double t) { return bmo_at(cplx(t, c.imag())); }, c.real() - r, c.real() + r, 36,
          &fmin);
      c = cplx(re, c.imag());
      best = std::min(best, fmin);
      const double im = golden_min(
          [&](double t) { return bmo_at(cplx(c.real(), t)); }, c.imag() - r, c.imag() + r, 36,
          &fmin);
      c = cplx(c.real(), im);
      best = std::min(best, fmin);
    }
    total += std::min(best, bmo_at(c));
  }
  return total;
}

double bmoe_norm(const SampledBandlimited& f, double grid_h, double grid_T) {
  GridFunction f0 = GridFunction::tabulate(
      grid_h, grid_T, [&f](double x) { return interpolate(f, cplx(x, 0.0)); },
      TailModel::bounded_by(0.0));
  f0.tail = TailModel::bounded_by(f0.sup_abs());
  return bmoe_norm(f0);
}

}  // namespace bernstein
