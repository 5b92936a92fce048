#pragma once

#include <functional>
#include <vector>

#include "bernstein/bandlimited.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/numerics.hpp"

namespace bernstein {

struct TailModel {
  enum class Kind { None, BoundedBy, DecayQuadratic };
  Kind kind = Kind::None;
  double constant = 0.0;

  static TailModel none() { return {Kind::None, 0.0}; }
  static TailModel bounded_by(double M) { return {Kind::BoundedBy, M}; }
  static TailModel decay_quadratic(double C) { return {Kind::DecayQuadratic, C}; }
};

/// Complex function tabulated at x = k*h, |k*h| <= T, with a declared tail.
/// Off-grid evaluation by Catmull-Rom cubic; zero outside the extent.
struct GridFunction {
  double h;
  double T;
  std::vector<cplx> values;  // size 2K+1 with K = round(T/h), index k+K
  TailModel tail;

  GridFunction(double h_, double T_, std::vector<cplx> v, TailModel tail_ = TailModel::none());

  static GridFunction tabulate(double h, double T, const std::function<cplx(double)>& f,
                               TailModel tail = TailModel::none());

  int half_points() const { return (int(values.size()) - 1) / 2; }  // K
  double x(int k) const { return k * h; }                           // |k| <= K
  const cplx& at(int k) const { return values[size_t(k + half_points())]; }
  cplx& at(int k) { return values[size_t(k + half_points())]; }

  double sup_abs() const;
  cplx eval(double x) const;
};

/// Integral of g(t)*F(t) over the grid extent, 7-point Gauss per grid cell
/// (exact for the cubic interpolant times slowly oscillating F).
cplx grid_integrate(const GridFunction& g, const std::function<cplx(double)>& F,
                    double lo, double hi);

struct BmoEstimate {
  double value;
  double finest_scale;
  double coarsest_scale;
};

/// Orthonormal-coefficient projection onto the band: c_n = ∫ g(t) e_n(t) dt
/// with e_n(t) = sqrt(kappa/pi) sinc((kappa/pi)t - n).  window < 0 picks the
/// largest window whose lattice fits inside the grid extent.
SampledBandlimited project_l2(const GridFunction& g, Band band, int window = -1);

/// Band-pi projection of a bounded symbol, defined modulo span{e^{±i pi x}}:
/// near part ∫_{|t|<=3R} g(t) sinc(t-z) dt plus the compensated far part
/// ∫_{3R<|t|<=T} g(t) (sin(pi(t-z))/pi)(1/(t-z) - 1/t) dt.  Representative
/// values only; callers compare modulo the span.
std::vector<cplx> project_linf(const GridFunction& g, const std::vector<cplx>& zs, double R);

/// Boundary values of the spectral half-line projection P_+ (side=+1) or
/// P_- (side=-1), computed by phi/2 ± Hilbert transform over the grid extent.
/// Defined up to an additive constant; the representative returned has zero
/// mean on [-1/2, 1/2].  out_h/out_T <= 0 select defaults.
GridFunction analytic_project(const GridFunction& g, int side, double out_h = 0.0,
                              double out_T = 0.0);

/// Sup of mean oscillation over a dyadic family of scales (2h·2^j up to 2T),
/// positions sliding by h.
BmoEstimate bmo_r_norm(const GridFunction& g);

/// inf_c bmo(e^{i pi x} f0 + c e^{2 i pi x}) + inf_c bmo(e^{-i pi x} f0 + c e^{-2 i pi x}),
/// each infimum by alternating golden-section on Re c and Im c.
double bmoe_norm(const GridFunction& f0);
double bmoe_norm(const SampledBandlimited& f, double grid_h, double grid_T);

/// For each delta: sup of mean oscillation over intervals of length <= delta.
std::vector<double> vmo_profile(const GridFunction& g, const std::vector<double>& deltas);

}  // namespace bernstein
