#include "bernstein/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace bernstein {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on [-1,1]
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_n; accurate to ~1 ulp for
// the small orders used here.
GaussRule legendre_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GaussRule& rule7() {
  static const GaussRule r = legendre_rule(7);
  return r;
}
const GaussRule& rule15() {
  static const GaussRule r = legendre_rule(15);
  return r;
}

cplx panel_value(const std::function<cplx(double)>& f, double lo, double hi, const GaussRule& r) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  cplx s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(c + h * r.nodes[i]);
  return h * s;
}

struct Panel {
  double lo, hi;
};

}  // namespace

cplx integrate(const std::function<cplx(double)>& f, Interval iv, const QuadratureSpec& spec,
               std::span<const double> split_points) {
  spec.validate();
  std::vector<double> cuts{iv.lo, iv.hi};
  for (double s : split_points)
    if (s > iv.lo && s < iv.hi) cuts.push_back(s);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Panel> work;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    if (hi <= lo) continue;
    int pieces = 1;
    if (spec.max_panel_width > 0)
      pieces = std::max(1, (int)std::ceil((hi - lo) / spec.max_panel_width));
    for (int p = 0; p < pieces; ++p)
      work.push_back({lo + (hi - lo) * p / pieces, lo + (hi - lo) * (p + 1) / pieces});
  }

  const double total_len = iv.length();
  cplx rough = 0.0;
  for (const Panel& p : work) rough += panel_value(f, p.lo, p.hi, rule15());
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(rough));

  struct Accepted {
    double lo;
    cplx val;
  };
  std::vector<Accepted> accepted;
  long processed = 0;
  while (!work.empty()) {
    Panel p = work.back();
    work.pop_back();
    if (++processed > spec.max_panels)
      throw NonConvergence("integrate: max_panels exhausted before tolerance met");
    cplx i15 = panel_value(f, p.lo, p.hi, rule15());
    cplx i7 = panel_value(f, p.lo, p.hi, rule7());
    double err = std::abs(i15 - i7);
    double share = tol * (p.hi - p.lo) / total_len;
    if (err <= share || (p.hi - p.lo) <= 1e-14 * total_len) {
      accepted.push_back({p.lo, i15});
    } else {
      double mid = 0.5 * (p.lo + p.hi);
      work.push_back({mid, p.hi});
      work.push_back({p.lo, mid});
    }
  }
  // Fixed summation order (increasing left endpoint) so the result is
  // independent of the processing schedule.
  std::sort(accepted.begin(), accepted.end(),
            [](const Accepted& a, const Accepted& b) { return a.lo < b.lo; });
  cplx sum = 0.0;
  for (const Accepted& a : accepted) sum += a.val;
  return sum;
}

cplx integrate_tail(const std::function<cplx(double)>& f, double T, const QuadratureSpec& spec) {
  spec.validate();
  if (!(T > 0)) throw InputError("integrate_tail: T must be > 0");
  auto g = [&f](double u) -> cplx {
    const double t = 1.0 / u;
    return (f(t) + f(-t)) * (t * t);
  };
  return integrate(g, Interval(0.0, 1.0 / T), spec);
}

cplx principal_value(const std::function<cplx(double)>& f, double x0, Interval iv,
                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(x0 > iv.lo && x0 < iv.hi))
    throw InputError("principal_value: singularity must be interior to the interval");
  const double d = std::min(x0 - iv.lo, iv.hi - x0);

  cplx outer = 0.0;
  if (x0 - d > iv.lo) outer += integrate(f, Interval(iv.lo, x0 - d), spec);
  if (x0 + d < iv.hi) outer += integrate(f, Interval(x0 + d, iv.hi), spec);

  // Symmetric part: the simple pole cancels in g(u) = f(x0+u) + f(x0-u).
  auto g = [&f, x0](double u) -> cplx { return f(x0 + u) + f(x0 - u); };
  double eps = 0.5 * d;
  cplx sym = integrate(g, Interval(eps, d), spec);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * (std::abs(sym) + std::abs(outer)));
  bool converged = false;
  for (int halvings = 0; halvings < 80; ++halvings) {
    cplx slice = integrate(g, Interval(0.5 * eps, eps), spec);
    sym += slice;
    eps *= 0.5;
    if (std::abs(slice) <= tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NonConvergence("principal_value: excision did not stabilize");
  return outer + sym;
}

cplx fixed_gauss7(const std::function<cplx(double)>& f, double lo, double hi) {
  return panel_value(f, lo, hi, rule7());
}

double top_singular_value(const Eigen::MatrixXcd& M, int max_iter) {
  if (M.rows() != M.cols()) throw InputError("top_singular_value: matrix must be square");
  const Eigen::Index n = M.rows();
  if (n == 0) return 0.0;
  const Eigen::MatrixXcd B = M.adjoint() * M;
  // Block power iteration: a single vector stalls on nearly degenerate top
  // pairs, a small block converges at the lambda_1/lambda_{b+1} rate and
  // resolves clusters exactly.  Deterministic start block.
  const Eigen::Index b = std::min<Eigen::Index>(4, n);
  Eigen::MatrixXcd Q(n, b);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < b; ++j) {
      const double x = double(i + 1) / double(n);
      Q(i, j) = (j == 0) ? 1.0 : (j == 1 ? (i % 2 ? -1.0 : 1.0) : (j == 2 ? x : x * x));
    }
  Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(Q).householderQ() *
      Eigen::MatrixXcd::Identity(n, b);
  double prev = -1.0;
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::MatrixXcd Z = B * Q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Q.adjoint() * Z);
    const double lam = es.eigenvalues().maxCoeff();  // top Ritz value ~ sigma_max^2
    if (lam <= 0.0) return 0.0;
    // Residual certificate for the top Ritz pair.
    Eigen::Index which = 0;
    es.eigenvalues().maxCoeff(&which);
    const Eigen::VectorXcd v = Q * es.eigenvectors().col(which);
    const double res = (B * v - lam * v).norm();
    if (res <= 1e-11 * std::max(lam, 1.0)) return std::sqrt(lam);
    if (prev >= 0 && std::abs(lam - prev) <= 1e-14 * std::max(lam, 1.0)) return std::sqrt(lam);
    prev = lam;
    Q = Eigen::HouseholderQR<Eigen::MatrixXcd>(Z).householderQ() *
        Eigen::MatrixXcd::Identity(n, b);
  }
  throw NonConvergence("top_singular_value: power iteration did not stabilize");
}

std::vector<double> singular_values(const Eigen::MatrixXcd& M) {
  if (M.rows() != M.cols()) throw InputError("singular_values: matrix must be square");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

}  // namespace bernstein
