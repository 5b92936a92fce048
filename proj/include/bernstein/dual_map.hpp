#pragma once

#include <functional>
#include <vector>

#include "bernstein/bandlimited.hpp"
#include "bernstein/discrete_hardy.hpp"
#include "bernstein/errors.hpp"

namespace bernstein {

/// Element of the dual-representative class: a type-pi function tabulated on
/// the alpha-shifted integer lattice, optionally carrying a closed-form
/// evaluator (used when the function is known exactly, e.g. a synthesis
/// image, so lattice values do not suffer truncation error).
struct XAlphaElement {
  SampledBandlimited f;                     // kappa = pi, offset alpha
  std::function<cplx(cplx)> closed_form;    // may be empty

  explicit XAlphaElement(SampledBandlimited fn, std::function<cplx(cplx)> cf = {});

  double alpha() const { return f.offset.alpha; }
  int window() const { return f.window; }

  cplx eval(cplx z) const { return closed_form ? closed_form(z) : interpolate(f, z); }
  /// f(n + alpha); exact from the stored coefficients when no closed form.
  cplx lattice_value(int n) const;
};

/// Synthesis map: a BMO(Z)-type sequence to an entire function of type pi,
/// T a(z) = e^{-i pi alpha} [ a_0 sinc(w) + sum_{n != 0} a_n (-1)^n (w/n) sinc(w-n) ],
/// w = z - alpha.  The regrouped summand avoids the 1/(w-n) vs 1/n cancellation.
cplx t_alpha(const FiniteSequence& a, LatticeOffset alpha, cplx z);

/// Convenience: the synthesis image as an XAlphaElement on window N.
XAlphaElement t_alpha_element(const FiniteSequence& a, LatticeOffset alpha, int N);

/// BMO(Z) norm of the sequence ((-1)^n f(n+alpha)).
double x_alpha_norm(const XAlphaElement& f);

struct PairingResult {
  cplx value;
  double last_octave;   // sum of |term| over the outer half of the window
};

/// sum_{|n| <= N} h(n+alpha) f(n+alpha), N = h's window.
PairingResult pairing_discrete(const SampledBandlimited& h, const XAlphaElement& f,
                               LatticeOffset alpha);

/// Sup discrepancy on the central half-window of the sampled identity
/// (-1)^n f(n+alpha) = (sin(pi alpha)/pi) [ (H_{d,alpha} a)(n) + sum_{k != 0} a_k / k ],
/// where a_k = (-1)^k f(k) after removing the a_0 sinc component.
/// Requires 0 < alpha < 1.
double r_alpha_check(const XAlphaElement& f, LatticeOffset alpha);

/// Point masses of weight 1/pi on the shifted lattice {n + alpha}.
struct ClarkMeasure {
  LatticeOffset alpha;
  int window;
  std::vector<double> weights;   // all 1/pi, index n+window

  double point(int n) const { return n + alpha.alpha; }
  double total_mass() const;
};

ClarkMeasure clark_measure(LatticeOffset alpha, int N);

/// pi times the measure-weighted BMO (intervals normalized by point count)
/// of (e^{i pi (n+alpha)} f(n+alpha)); independent arithmetic path from
/// x_alpha_norm, with which it agrees identically.
double bmo_clark_norm(const XAlphaElement& f, LatticeOffset alpha);

}  // namespace bernstein
