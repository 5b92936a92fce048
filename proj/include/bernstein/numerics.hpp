#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "bernstein/errors.hpp"

namespace bernstein {

using cplx = std::complex<double>;

struct Interval {
  double lo;
  double hi;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
      throw InputError("Interval requires finite lo < hi");
  }
  double length() const { return hi - lo; }
};

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-10;
  int max_panels = 200000;
  double tail_cutoff = 1e3;
  // For oscillatory integrands, set to at most half the shortest period.
  // 0 disables the cap.
  double max_panel_width = 0.0;

  void validate() const {
    if (rel_tol <= 0 || abs_tol <= 0 || tail_cutoff <= 0 || max_panels < 1)
      throw InputError("QuadratureSpec: tolerances and tail cutoff must be > 0, max_panels >= 1");
  }
};

/// Adaptive composite Gauss-Legendre quadrature of f over iv.
/// split_points lists interior singular/breakpoints for initial panel splits.
cplx integrate(const std::function<cplx(double)>& f, Interval iv, const QuadratureSpec& spec,
               std::span<const double> split_points = {});

/// Integral of f over {|t| > T} for f with certified quadratic decay,
/// via the compactifying substitution t -> 1/u.
cplx integrate_tail(const std::function<cplx(double)>& f, double T, const QuadratureSpec& spec);

/// Principal value of the integral of f over iv with a simple-pole-type
/// singularity at x0; symmetric excision with radii halved until the
/// last slice is below tolerance.
cplx principal_value(const std::function<cplx(double)>& f, double x0, Interval iv,
                     const QuadratureSpec& spec);

/// Single 7-point Gauss-Legendre panel on [lo, hi], no adaptivity.
/// Building block for grid-cell-aligned composite rules.
cplx fixed_gauss7(const std::function<cplx(double)>& f, double lo, double hi);

/// Largest singular value via deterministic block power iteration on M^H M;
/// the block resolves nearly degenerate top pairs that stall a single vector.
double top_singular_value(const Eigen::MatrixXcd& M, int max_iter = 20000);

/// Full singular value profile, nonincreasing.
std::vector<double> singular_values(const Eigen::MatrixXcd& M);

}  // namespace bernstein
