#include "bernstein/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace bernstein {

namespace {
constexpr double kPi = std::numbers::pi;

int thread_budget() {
  const char* env = std::getenv("BERNSTEIN_LAB_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return std::max(1, n);
}

// Cubic smoothstep rising 0 -> 1 on [0,1].
double smoothstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// Left cutoff: support [-4k, -k/2], identically 1 on [-3k, -k].
double eta_L(double omega, double k) {
  if (omega <= -4.0 * k || omega >= -0.5 * k) return 0.0;
  if (omega >= -3.0 * k && omega <= -k) return 1.0;
  if (omega < -3.0 * k) return smoothstep((omega + 4.0 * k) / k);
  return smoothstep((-0.5 * k - omega) / (0.5 * k));
}

double chi_band(double omega, double k) { return std::abs(omega) <= 2.0 * k ? 1.0 : 0.0; }

cplx trig_entry(double omega, Band band, int j, int k) {
  const double kap = band.kappa;
  const double a = std::max(-kap, omega - kap);
  const double b = std::min(kap, omega + kap);
  if (b <= a) return 0.0;
  const double mu = kPi * double(k - j) / kap;
  cplx osc;
  if (mu == 0.0) {
    osc = b - a;
  } else {
    osc = (std::exp(cplx(0.0, mu * b)) - std::exp(cplx(0.0, mu * a))) / cplx(0.0, mu);
  }
  return std::exp(cplx(0.0, kPi * double(j) * omega / kap)) * osc / (2.0 * kap);
}

}  // namespace

SymbolSpec SymbolSpec::trig(std::vector<std::pair<double, cplx>> terms) {
  SymbolSpec s;
  s.kind = Kind::Trig;
  s.terms = std::move(terms);
  for (const auto& [w, c] : s.terms)
    if (!std::isfinite(w) || !std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InputError("SymbolSpec: frequencies and coefficients must be finite");
  s.has_spectrum = true;
  s.spectrum_lo = 0.0;
  s.spectrum_hi = 0.0;
  for (const auto& [w, c] : s.terms) {
    s.spectrum_lo = std::min(s.spectrum_lo, w);
    s.spectrum_hi = std::max(s.spectrum_hi, w);
  }
  return s;
}

SymbolSpec SymbolSpec::from_grid(GridFunction g) {
  SymbolSpec s;
  s.kind = Kind::Grid;
  s.grid = std::make_shared<const GridFunction>(std::move(g));
  return s;
}

SymbolSpec SymbolSpec::from_grid(GridFunction g, double spec_lo, double spec_hi) {
  SymbolSpec s = from_grid(std::move(g));
  s.has_spectrum = true;
  s.spectrum_lo = spec_lo;
  s.spectrum_hi = spec_hi;
  return s;
}

cplx SymbolSpec::eval(double x) const {
  if (kind == Kind::Grid) return grid->eval(x);
  cplx v = 0.0;
  for (const auto& [w, c] : terms) v += c * std::exp(cplx(0.0, w * x));
  return v;
}

double SymbolSpec::sup_abs() const {
  if (kind == Kind::Grid) return grid->sup_abs();
  double sup = 0.0;
  for (long i = -20000; i <= 20000; ++i) sup = std::max(sup, std::abs(eval(i * 0.01)));
  return sup;
}

SymbolSpec band_reduce(const SymbolSpec& phi, Band band) {
  const double lim = 2.0 * band.kappa * (1.0 + 1e-12);
  if (phi.kind == SymbolSpec::Kind::Trig) {
    std::vector<std::pair<double, cplx>> kept;
    for (const auto& [w, c] : phi.terms)
      if (std::abs(w) <= lim) kept.emplace_back(w, c);
    return SymbolSpec::trig(std::move(kept));
  }
  if (!phi.has_spectrum)
    throw UnknownSpectrum("band_reduce: grid symbol carries no spectral support declaration");
  if (phi.spectrum_lo >= -lim && phi.spectrum_hi <= lim) return phi;
  // Spectral truncation by convolution with the band's reproducing kernel.
  const GridFunction& g = *phi.grid;
  const double Om = 2.0 * band.kappa;
  const double out_T = std::max(1.0, g.T / 2.0);
  GridFunction out = GridFunction::tabulate(
      g.h, out_T,
      [&](double x) {
        return grid_integrate(
            g, [&](double t) { return Om / kPi * sinc(Om * (x - t) / kPi); }, -g.T, g.T);
      },
      TailModel::bounded_by(0.0));
  out.tail = TailModel::bounded_by(out.sup_abs());
  return SymbolSpec::from_grid(std::move(out), -2.0 * band.kappa, 2.0 * band.kappa);
}

HankelMatrix assemble(const SymbolSpec& phi, Band band, int N) {
  if (N < 0) throw InputError("assemble: window must be >= 0");
  const int L = 2 * N + 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(L, L);

  if (phi.kind == SymbolSpec::Kind::Trig) {
    for (int j = -N; j <= N; ++j)
      for (int k = -N; k <= N; ++k) {
        cplx v = 0.0;
        for (const auto& [w, c] : phi.terms) v += c * trig_entry(w, band, j, k);
        M(j + N, k + N) = v;
      }
  } else {
    const GridFunction& g = *phi.grid;
    const double scale = band.kappa / kPi;
    auto fill_rows = [&](int row_lo, int row_hi) {
      for (int j = row_lo; j < row_hi; ++j)
        for (int k = -N; k <= N; ++k) {
          const int jj = j - N;
          auto f = [&](double x) -> cplx {
            return scale * sinc(scale * x - jj) * sinc(scale * x - k);
          };
          M(j, k + N) = grid_integrate(g, f, -g.T, g.T);
        }
    };
    const int threads = std::min(thread_budget(), L);
    if (threads <= 1) {
      fill_rows(0, L);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        const int lo = L * t / threads, hi = L * (t + 1) / threads;
        pool.emplace_back(fill_rows, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
  }

  const Eigen::MatrixXcd D = 0.5 * (M - M.transpose().eval());
  const double resid = D.cwiseAbs().maxCoeff();
  HankelMatrix out{band, N, 0.5 * (M + M.transpose().eval()), resid};
  return out;
}

SampledBandlimited apply(const HankelMatrix& M, const SampledBandlimited& f) {
  if (f.window != M.window) throw WindowMismatch("apply: window sizes differ");
  if (std::abs(f.band.kappa - M.band.kappa) > 1e-12)
    throw WindowMismatch("apply: band mismatch");
  if (f.offset.alpha != 0.0)
    throw WindowMismatch("apply: operator basis uses the unshifted lattice");
  const int L = 2 * M.window + 1;
  Eigen::VectorXcd c(L);
  for (int i = 0; i < L; ++i) c(i) = std::conj(f.samples[size_t(i)]);
  const Eigen::VectorXcd out = M.entries * c;
  SampledBandlimited g = SampledBandlimited::zero(f.band, f.offset, f.window);
  for (int i = 0; i < L; ++i) g.samples[size_t(i)] = out(i);
  return g;
}

double op_norm(const HankelMatrix& M) { return top_singular_value(M.entries); }

std::vector<ProfileRow> compactness_profile(const SymbolSpec& phi, Band band,
                                            const std::vector<int>& Ns, int keep) {
  std::vector<ProfileRow> rows;
  rows.reserve(Ns.size());
  for (int N : Ns) {
    const HankelMatrix M = assemble(phi, band, N);
    std::vector<double> s = singular_values(M.entries);
    if (int(s.size()) > keep) s.resize(size_t(keep));
    rows.push_back({N, std::move(s)});
  }
  return rows;
}

RochbergSplit rochberg_split(const SymbolSpec& phi, Band band) {
  if (phi.kind != SymbolSpec::Kind::Trig)
    throw UnknownSpectrum(
        "rochberg_split: needs exact frequency content; supply a trig symbol");
  const double k = band.kappa;
  std::vector<std::pair<double, cplx>> l, c, r;
  for (const auto& [w, coef] : phi.terms) {
    const double wl = eta_L(w, k), wr = eta_L(-w, k);
    const double wc = chi_band(w, k) - wl - wr;
    if (std::abs(wl) > 1e-14) l.emplace_back(w, coef * wl);
    if (std::abs(wc) > 1e-14) c.emplace_back(w, coef * wc);
    if (std::abs(wr) > 1e-14) r.emplace_back(w, coef * wr);
  }
  return {SymbolSpec::trig(std::move(l)), SymbolSpec::trig(std::move(c)),
          SymbolSpec::trig(std::move(r))};
}

RochbergQuantities rochberg_quantities(const RochbergSplit& split, Band band) {
  const double k = band.kappa;
  auto shifted_bmo = [&](const SymbolSpec& part, double shift, int keep_sign) -> double {
    // Modulated spectrum lies entirely on the kept half-line, so the
    // half-line projection acts as the identity on these pieces.
    std::vector<std::pair<double, cplx>> terms;
    for (const auto& [w, c] : part.terms) {
      const double wm = w + shift;
      if (keep_sign > 0 ? wm < -1e-12 : wm > 1e-12)
        throw PrecondViolated("rochberg_quantities: modulated frequency on wrong half-line");
      terms.emplace_back(wm, c);
    }
    if (terms.empty()) return 0.0;
    const SymbolSpec mod = SymbolSpec::trig(std::move(terms));
    const GridFunction tab = GridFunction::tabulate(
        0.02, 32.0, [&mod](double x) { return mod.eval(x); }, TailModel::bounded_by(0.0));
    return bmo_r_norm(tab).value;
  };
  RochbergQuantities q{};
  q.q_L = shifted_bmo(split.phi_L, -2.0 * k, -1);
  q.q_C = split.phi_C.sup_abs();
  q.q_R = shifted_bmo(split.phi_R, +2.0 * k, +1);
  return q;
}

}  // namespace bernstein
