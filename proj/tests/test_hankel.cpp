#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bernstein/hankel.hpp"

using namespace bernstein;

namespace {
constexpr double kPi = std::numbers::pi;
const Band kBand(kPi / 2.0);

SampledBandlimited random_fn(Band b, int N, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SampledBandlimited s = SampledBandlimited::zero(b, LatticeOffset(0.0), N);
  for (int n = -N; n <= N; ++n) s.coeff(n) = cplx(u(rng), u(rng));
  return s;
}
}  // namespace

TEST_CASE("symbol evaluation and sup") {
  const SymbolSpec phi = SymbolSpec::trig({{1.3, cplx(0.0, 2.0)}});
  CHECK(std::abs(phi.eval(0.7) - cplx(0.0, 2.0) * std::exp(cplx(0.0, 1.3 * 0.7))) < 1e-15);
  CHECK(std::abs(phi.sup_abs() - 2.0) < 1e-12);
}

TEST_CASE("unit symbol assembles to the identity") {
  const HankelMatrix M = assemble(SymbolSpec::trig({{0.0, 1.0}}), kBand, 5);
  for (int j = 0; j < 11; ++j)
    for (int k = 0; k < 11; ++k)
      CHECK(std::abs(M.entries(j, k) - (j == k ? 1.0 : 0.0)) < 1e-12);
  CHECK(M.asym_residual < 1e-14);
}

TEST_CASE("grid tabulation agrees with the closed-form trig assembly") {
  const double w = 1.3;
  const cplx coef(0.4, -0.9);
  const HankelMatrix exact = assemble(SymbolSpec::trig({{w, coef}}), kBand, 3);
  GridFunction g = GridFunction::tabulate(
      0.1, 100.5, [&](double x) -> cplx { return coef * std::exp(cplx(0.0, w * x)); },
      TailModel::bounded_by(std::abs(coef)));
  const HankelMatrix approx = assemble(SymbolSpec::from_grid(std::move(g), w, w), kBand, 3);
  double dev = 0.0;
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k) dev = std::max(dev, std::abs(exact.entries(j, k) - approx.entries(j, k)));
  CHECK(dev < 5e-3);
}

TEST_CASE("application is antilinear and window-checked") {
  const SymbolSpec phi = SymbolSpec::trig({{0.8, cplx(1.0, 0.5)}, {-1.1, cplx(0.0, -0.7)}});
  const HankelMatrix M = assemble(phi, kBand, 6);
  const SampledBandlimited f = random_fn(kBand, 6, 51);
  SampledBandlimited g = f;
  const cplx lam(0.3, -1.2);
  for (cplx& c : g.samples) c *= lam;
  const SampledBandlimited Hf = apply(M, f);
  const SampledBandlimited Hg = apply(M, g);
  for (int n = -6; n <= 6; ++n)
    CHECK(std::abs(Hg.coeff(n) - std::conj(lam) * Hf.coeff(n)) < 1e-12);

  const SampledBandlimited wrong_window = random_fn(kBand, 4, 52);
  CHECK_THROWS_AS(apply(M, wrong_window), WindowMismatch);
  const SampledBandlimited wrong_band = random_fn(Band(kPi), 6, 53);
  CHECK_THROWS_AS(apply(M, wrong_band), WindowMismatch);
}

TEST_CASE("operator norm scales linearly with the symbol") {
  const SymbolSpec phi = SymbolSpec::trig({{0.5, cplx(1.0, 0.0)}, {-2.0, cplx(0.3, 0.4)}});
  const SymbolSpec phi3 = SymbolSpec::trig({{0.5, cplx(3.0, 0.0)}, {-2.0, cplx(0.9, 1.2)}});
  const double n1 = op_norm(assemble(phi, kBand, 8));
  const double n3 = op_norm(assemble(phi3, kBand, 8));
  CHECK(std::abs(n3 - 3.0 * n1) < 1e-9);
}

TEST_CASE("norm bound through the pairing") {
  // |<H f, g>| <= op_norm * |f| * |g| for coefficient vectors.
  const SymbolSpec phi = SymbolSpec::trig({{0.9, cplx(0.7, 0.2)}, {-1.7, cplx(-0.3, 1.0)}});
  const HankelMatrix M = assemble(phi, kBand, 6);
  const double nrm = op_norm(M);
  for (unsigned seed = 61; seed < 66; ++seed) {
    const SampledBandlimited f = random_fn(kBand, 6, seed);
    const SampledBandlimited g = random_fn(kBand, 6, seed + 100);
    const SampledBandlimited Hf = apply(M, f);
    cplx pairing = 0.0;
    for (int n = -6; n <= 6; ++n) pairing += Hf.coeff(n) * std::conj(g.coeff(n));
    CHECK(std::abs(pairing) <= nrm * pw_norm(f) * pw_norm(g) + 1e-10);
  }
}

TEST_CASE("band reduction drops only out-of-band frequencies") {
  const SymbolSpec phi =
      SymbolSpec::trig({{0.5, cplx(1.0, 0.0)}, {2.9, cplx(0.0, 1.0)}, {4.0, cplx(5.0, 5.0)}});
  const SymbolSpec red = band_reduce(phi, kBand);  // 2 kappa = pi
  REQUIRE(red.terms.size() == 2);
  CHECK(red.terms[0].first == doctest::Approx(0.5));
  CHECK(red.terms[1].first == doctest::Approx(2.9));
}

TEST_CASE("band reduction of grid symbols needs declared spectral support") {
  GridFunction g = GridFunction::tabulate(0.1, 20.0, [](double x) -> cplx {
    return std::cos(0.3 * x);
  });
  CHECK_THROWS_AS(band_reduce(SymbolSpec::from_grid(GridFunction(g)), kBand), UnknownSpectrum);
  const SymbolSpec declared = SymbolSpec::from_grid(std::move(g), -0.3, 0.3);
  const SymbolSpec red = band_reduce(declared, kBand);
  CHECK(red.kind == SymbolSpec::Kind::Grid);  // in-band: passed through
}

TEST_CASE("truncated singular value profiles grow with the window") {
  const SymbolSpec phi = SymbolSpec::trig({{0.6, cplx(1.0, 0.0)}, {-1.2, cplx(0.5, 0.5)}});
  const std::vector<ProfileRow> rows = compactness_profile(phi, kBand, {4, 8, 16}, 6);
  REQUIRE(rows.size() == 3);
  for (const ProfileRow& r : rows)
    for (size_t i = 1; i < r.sigmas.size(); ++i) CHECK(r.sigmas[i] <= r.sigmas[i - 1] + 1e-12);
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].sigmas[0] >= rows[i - 1].sigmas[0] - 1e-10);  // interlacing
}

TEST_CASE("cutoff split: supports and partition identity") {
  const double k = kBand.kappa;
  // Spectrum inside (-k/2, k/2): everything lands in the center piece.
  const SymbolSpec low = SymbolSpec::trig({{0.3 * k, cplx(1.0, -1.0)}});
  const RochbergSplit s1 = rochberg_split(low, kBand);
  CHECK(s1.phi_L.terms.empty());
  CHECK(s1.phi_R.terms.empty());
  REQUIRE(s1.phi_C.terms.size() == 1);

  // Pure right-edge frequency 2k: all right.
  const RochbergSplit s2 = rochberg_split(SymbolSpec::trig({{2.0 * k, cplx(2.0, 0.0)}}), kBand);
  CHECK(s2.phi_L.terms.empty());
  CHECK(s2.phi_C.terms.empty());
  REQUIRE(s2.phi_R.terms.size() == 1);
  CHECK(std::abs(s2.phi_R.terms[0].second - cplx(2.0, 0.0)) < 1e-14);

  // Zero symbol: all empty.
  const RochbergSplit s0 = rochberg_split(SymbolSpec::trig({}), kBand);
  CHECK(s0.phi_L.terms.empty());
  CHECK(s0.phi_C.terms.empty());
  CHECK(s0.phi_R.terms.empty());

  // Generic band-reduced symbol: the three pieces sum back to it pointwise.
  const SymbolSpec phi = band_reduce(
      SymbolSpec::trig({{-1.8 * k, cplx(0.5, 0.2)}, {0.7 * k, cplx(-1.0, 0.3)},
                        {1.6 * k, cplx(0.0, 0.9)}}),
      kBand);
  const RochbergSplit sp = rochberg_split(phi, kBand);
  for (double x : {-2.0, -0.3, 0.0, 1.4}) {
    const cplx sum = sp.phi_L.eval(x) + sp.phi_C.eval(x) + sp.phi_R.eval(x);
    CHECK(std::abs(sum - phi.eval(x)) < 1e-12);
  }
}

TEST_CASE("cutoff quantities for a constant symbol") {
  const RochbergSplit s = rochberg_split(SymbolSpec::trig({{0.0, 1.0}}), kBand);
  const RochbergQuantities q = rochberg_quantities(s, kBand);
  CHECK(q.q_L == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(q.q_C == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(q.q_R == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("comparability of the split quantities with the operator norm") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> fr(-2.5, 2.5), cr(-1.0, 1.0);
  double worst_ratio = 0.0;
  for (int t = 0; t < 4; ++t) {
    std::vector<std::pair<double, cplx>> terms;
    for (int m = 0; m < 3; ++m) terms.emplace_back(fr(rng), cplx(cr(rng), cr(rng)));
    const SymbolSpec phi = band_reduce(SymbolSpec::trig(terms), kBand);
    const double nrm = op_norm(assemble(phi, kBand, 12));
    const RochbergQuantities q = rochberg_quantities(rochberg_split(phi, kBand), kBand);
    const double total = q.q_L + q.q_C + q.q_R;
    if (nrm > 1e-9 && total > 1e-9)
      worst_ratio = std::max(worst_ratio, std::max(nrm / total, total / nrm));
  }
  CHECK(worst_ratio < 25.0);  // bounded-ratio comparability, constant recorded loosely
}
