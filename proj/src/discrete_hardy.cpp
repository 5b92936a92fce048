#include "bernstein/discrete_hardy.hpp"

#include <algorithm>
#include <cmath>

namespace bernstein {

FiniteSequence discrete_hilbert(const FiniteSequence& a, LatticeOffset alpha, int out_window) {
  if (out_window < 0) throw InputError("discrete_hilbert: out_window must be >= 0");
  FiniteSequence out = FiniteSequence::zero(out_window);
  const bool skip_diag = (alpha.alpha == 0.0);
  for (int n = -out_window; n <= out_window; ++n) {
    cplx s = 0.0;
    for (int k = -a.window; k <= a.window; ++k) {
      if (skip_diag && k == n) continue;
      s += a.at(k) / (double(n - k) + alpha.alpha);
    }
    out.at(n) = s;
  }
  return out;
}

WindowedValue h1_norm(const FiniteSequence& a, LatticeOffset alpha) {
  const int M = std::max(4, 4 * a.window);
  const FiniteSequence h = discrete_hilbert(a, alpha, M);
  double total = a.l1(), octave = 0.0;
  for (int n = -M; n <= M; ++n) {
    const double t = std::abs(h.at(n));
    total += t;
    if (std::abs(n) > M / 2) octave += t;
  }
  return {total, octave};
}

double bmo_z_norm(const FiniteSequence& b) {
  const int N = b.window, L = 2 * N + 1;
  // Prefix sums for interval means.
  std::vector<cplx> pre(size_t(L) + 1, 0.0);
  for (int i = 0; i < L; ++i) pre[size_t(i) + 1] = pre[size_t(i)] + b.values[size_t(i)];
  double sup = 0.0;
  for (int i = 0; i < L; ++i) {
    for (int j = i; j < L; ++j) {
      const int len = j - i + 1;
      const cplx mean = (pre[size_t(j) + 1] - pre[size_t(i)]) / double(len);
      double osc = 0.0;
      for (int k = i; k <= j; ++k) osc += std::abs(b.values[size_t(k)] - mean);
      sup = std::max(sup, osc / len);
    }
  }
  return sup;
}

WindowedValue summability_check(const FiniteSequence& b) {
  const int N = b.window;
  double total = 0.0, octave = 0.0;
  for (int n = -N; n <= N; ++n) {
    const double t = std::abs(b.at(n)) / (1.0 + double(n) * double(n));
    total += t;
    if (std::abs(n) > N / 2) octave += t;
  }
  return {total, octave};
}

DiscreteAtom make_atom(const std::vector<int>& support, const std::vector<cplx>& values) {
  if (support.empty() || support.size() != values.size())
    throw InputError("make_atom: support and values must be nonempty and match");
  for (size_t i = 1; i < support.size(); ++i)
    if (support[i] != support[i - 1] + 1)
      throw NonContiguousSupport("make_atom: support indices must be consecutive");
  const double bound = 1.0 / double(support.size());
  cplx mean_sum = 0.0;
  for (const cplx& v : values) {
    if (std::abs(v) > bound * (1.0 + 1e-12))
      throw SupTooLarge("make_atom: sup |values| exceeds 1/#A");
    mean_sum += v;
  }
  if (std::abs(mean_sum) > 1e-12) throw NotMeanZero("make_atom: values must sum to zero");
  return {support.front(), values};
}

SampledBandlimited atom_to_b1(const DiscreteAtom& atom) {
  const int lo = atom.start, hi = atom.start + int(atom.values.size()) - 1;
  const int N = std::max(std::abs(lo), std::abs(hi));
  SampledBandlimited s =
      SampledBandlimited::zero(Band(std::numbers::pi), LatticeOffset(0.0), N);
  for (size_t i = 0; i < atom.values.size(); ++i) {
    const int n = lo + int(i);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    s.coeff(n) = sign * atom.values[i];
  }
  return s;
}

}  // namespace bernstein
