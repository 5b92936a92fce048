#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bernstein/bandlimited.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/projection.hpp"

namespace bernstein {

/// Bounded symbol: either a trigonometric polynomial (exact spectrum) or a
/// tabulated grid function with an optional declared spectral support.
struct SymbolSpec {
  enum class Kind { Trig, Grid };
  Kind kind = Kind::Trig;
  std::vector<std::pair<double, cplx>> terms;   // (frequency, coefficient)
  std::shared_ptr<const GridFunction> grid;
  bool has_spectrum = false;
  double spectrum_lo = 0.0, spectrum_hi = 0.0;

  static SymbolSpec trig(std::vector<std::pair<double, cplx>> terms);
  static SymbolSpec from_grid(GridFunction g);
  static SymbolSpec from_grid(GridFunction g, double spec_lo, double spec_hi);

  cplx eval(double x) const;
  /// Sup of |phi| estimated by dense sampling.
  double sup_abs() const;
};

struct HankelMatrix {
  Band band;
  int window;                // N
  Eigen::MatrixXcd entries;  // (2N+1)^2, index (j+N, k+N)
  double asym_residual;      // max |M - M^T|/2 before symmetrization
};

/// Clip the spectrum of phi to [-2 kappa, 2 kappa]; the induced operator is
/// unchanged.  Grid symbols require a declared spectrum already inside the
/// band (spectral truncation of raw tabulated data is not attempted).
SymbolSpec band_reduce(const SymbolSpec& phi, Band band);

/// M_jk = ∫ phi e_j e_k with e_n(x) = sqrt(kappa/pi) sinc((kappa/pi)x - n).
/// Trig symbols use the closed-form frequency-overlap formula; grid symbols
/// use cell-aligned quadrature over the grid extent.  Row assembly for grid
/// symbols parallelizes up to BERNSTEIN_LAB_THREADS; entries are independent
/// so the result does not depend on the thread count.
HankelMatrix assemble(const SymbolSpec& phi, Band band, int N);

/// Coefficients of P_kappa(phi conj(f)): out = M * conj(coeffs).  Antilinear.
SampledBandlimited apply(const HankelMatrix& M, const SampledBandlimited& f);

double op_norm(const HankelMatrix& M);

struct ProfileRow {
  int N;
  std::vector<double> sigmas;  // leading singular values, nonincreasing
};

/// Leading singular values at each window size; decay of a fixed sigma_k
/// along N separates compact from merely bounded symbols.
std::vector<ProfileRow> compactness_profile(const SymbolSpec& phi, Band band,
                                            const std::vector<int>& Ns, int keep = 8);

struct RochbergSplit {
  SymbolSpec phi_L, phi_C, phi_R;
};

/// Frequency-cutoff partition of a band-reduced trig symbol: eta_L a cubic
/// smoothstep supported in [-4k, -k/2], identically 1 on [-3k, -k];
/// eta_R = eta_L(-.); eta_C = chi_[-2k,2k] - eta_L - eta_R.
RochbergSplit rochberg_split(const SymbolSpec& phi, Band band);

struct RochbergQuantities {
  double q_L;  // BMO norm of P_-(e^{-2ik x} phi_L)
  double q_C;  // sup |phi_C|
  double q_R;  // BMO norm of P_+(e^{2ik x} phi_R)
};

RochbergQuantities rochberg_quantities(const RochbergSplit& split, Band band);

}  // namespace bernstein
