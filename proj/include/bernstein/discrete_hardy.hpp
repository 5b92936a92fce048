#pragma once

#include <vector>

#include "bernstein/bandlimited.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/numerics.hpp"

namespace bernstein {

/// Finitely supported complex sequence on the window |n| <= N.
struct FiniteSequence {
  int window;                 // N
  std::vector<cplx> values;   // size 2N+1, index n+N

  FiniteSequence(int N, std::vector<cplx> v) : window(N), values(std::move(v)) {
    if (N < 0 || values.size() != size_t(2 * N + 1))
      throw InputError("FiniteSequence: values must hold 2N+1 entries");
    for (const cplx& c : values)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw InputError("FiniteSequence: values must be finite");
  }

  static FiniteSequence zero(int N) { return FiniteSequence(N, std::vector<cplx>(2 * N + 1)); }
  static FiniteSequence delta(int N, int at = 0) {
    FiniteSequence s = zero(N);
    s.at(at) = 1.0;
    return s;
  }

  const cplx& at(int n) const { return values[size_t(n + window)]; }
  cplx& at(int n) { return values[size_t(n + window)]; }

  double l1() const {
    double s = 0.0;
    for (const cplx& c : values) s += std::abs(c);
    return s;
  }
};

/// Validated atom: contiguous integer support, mean zero, sup bound 1/#A.
struct DiscreteAtom {
  int start;                  // leftmost support index
  std::vector<cplx> values;   // values on start, start+1, ...
};

/// Windowed scalar together with the contribution of the outermost octave
/// of the window; a non-decaying increment flags divergence.
struct WindowedValue {
  double value;
  double last_octave;
};

/// (H_{d,alpha} a)(n) = sum_k a_k / (n - k + alpha) for |n| <= out_window.
/// The k = n term is omitted only when alpha = 0.
FiniteSequence discrete_hilbert(const FiniteSequence& a, LatticeOffset alpha, int out_window);

/// ||a||_1 + ||H_{d,alpha} a||_1 truncated to a window 4x the support.
WindowedValue h1_norm(const FiniteSequence& a, LatticeOffset alpha);

/// sup over contiguous subintervals A of the window of (1/#A) sum_{n in A} |b_n - b_A|.
/// Exhaustive, exact for the windowed data.
double bmo_z_norm(const FiniteSequence& b);

/// Partial sum of |b_n| / (1 + n^2) over the window.
WindowedValue summability_check(const FiniteSequence& b);

/// Validates support contiguity, sup |values| <= 1/#A and zero mean (1e-12).
DiscreteAtom make_atom(const std::vector<int>& support, const std::vector<cplx>& values);

/// The entire function sum (-1)^n alpha_n sinc(z - n): samples (-1)^n alpha_n
/// at kappa = pi, alpha = 0.
SampledBandlimited atom_to_b1(const DiscreteAtom& atom);

}  // namespace bernstein
