#include "vallab/fval.hpp"

#include <algorithm>
#include <cmath>

namespace vallab {

DensityFunc DensityFunc::on_halfline(std::vector<double> breaks,
                                     std::vector<double> values) {
  DensityFunc d;
  d.kind = Kind::OnHalfline;
  d.breaks = std::move(breaks);
  d.values = std::move(values);
  if (d.breaks.size() != d.values.size() || d.breaks.size() < 2)
    fail(ErrorCode::ValidationError, "density table needs matching breakpoints");
  for (size_t i = 1; i < d.breaks.size(); ++i)
    if (d.breaks[i] <= d.breaks[i - 1])
      fail(ErrorCode::ValidationError, "breakpoints must increase");
  if (d.breaks.front() < 0.0)
    fail(ErrorCode::ValidationError, "halfline table starts at t >= 0");
  return d;
}

DensityFunc DensityFunc::radial(int dim, std::vector<double> breaks,
                                std::vector<double> values) {
  DensityFunc d = on_halfline(std::move(breaks), std::move(values));
  d.kind = Kind::OnRn;
  d.dim = dim;
  return d;
}

double DensityFunc::eval1(double t) const {
  if (t <= breaks.front()) {
    // Continuous extension: the table starts at breaks.front(); for radial
    // densities eval1(0) uses the first value.
    return t < breaks.front() - kEps ? 0.0 : values.front();
  }
  if (t >= breaks.back()) return 0.0;
  size_t hi = static_cast<size_t>(
      std::upper_bound(breaks.begin(), breaks.end(), t) - breaks.begin());
  size_t lo = hi - 1;
  double w = (t - breaks[lo]) / (breaks[hi] - breaks[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

double DensityFunc::operator()(const Vector& y) const {
  if (kind == Kind::OnRn) {
    if (y.dim() != dim)
      fail(ErrorCode::DimensionMismatch, "density dimension mismatch");
    return eval1(norm(y));
  }
  return eval1(y[0]);
}

double DensityFunc::moment(int k) const {
  // Exact integral of t^k times the piecewise-linear table.
  KahanSum s;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    double a = breaks[i], b = breaks[i + 1];
    double va = values[i], vb = values[i + 1];
    double slope = (vb - va) / (b - a);
    double c0 = va - slope * a;  // table(t) = c0 + slope * t on [a, b]
    double p1 = (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
    double p2 = (std::pow(b, k + 2) - std::pow(a, k + 2)) / (k + 2);
    s.add(c0 * p1 + slope * p2);
  }
  return s.value();
}

double AtomicMeasure::total_mass() const {
  KahanSum s;
  for (const auto& [p, m] : atoms) {
    (void)p;
    s.add(m);
  }
  return s.value();
}

double exp_min(const PolyhedralFunc& u) {
  coercivity_witness(u);  // throws NotCoercive when no witness exists
  return std::exp(-u.min_value());
}

namespace {

// Exact integral of tau^k e^{-tau} over [0, L] (L = +inf allowed).
double poly_exp_integral(int k, double L) {
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  if (std::isinf(L)) return kfact;
  double partial = 0.0;
  double term = 1.0;  // L^j / j!
  for (int j = 0; j <= k; ++j) {
    partial += term;
    term *= L / (j + 1);
  }
  return kfact * (1.0 - std::exp(-L) * partial);
}

double sublevel_volume(const PolyhedralFunc& u, double t) {
  Polytope s = sublevel(u, t);
  return s.is_empty() ? 0.0 : volume(s);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 40);
}

}  // namespace

double exp_integral(const PolyhedralFunc& u) {
  coercivity_witness(u);
  int n = u.dim;

  std::vector<double> brk;
  for (const auto& [x, val] : u.vertex_values()) {
    (void)x;
    brk.push_back(val);
  }
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end(),
                        [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
            brk.end());

  KahanSum total;
  auto integrate_piece = [&](double a, double b) {
    // Fit the degree-n polynomial V(a + tau) on tau in [0, L]; V is exactly
    // polynomial between combinatorial breakpoints, so interpolation at any
    // n+1 nodes reproduces it.
    double L = b - a;
    std::vector<std::vector<double>> m(static_cast<size_t>(n) + 1,
                                       std::vector<double>(static_cast<size_t>(n) + 1));
    std::vector<double> rhs(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      double tau = L * (i + 1.0) / (n + 2.0);
      for (int j = 0; j <= n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::pow(tau, j);
      rhs[static_cast<size_t>(i)] = sublevel_volume(u, a + tau);
    }
    std::vector<double> coef = solve_linear(m, rhs);
    // Validate at one extra node; fall back to quadrature on disagreement.
    double mid = 0.5 * L;
    double pm = 0.0;
    for (int j = 0; j <= n; ++j) pm += coef[static_cast<size_t>(j)] * std::pow(mid, j);
    double vm = sublevel_volume(u, a + mid);
    if (std::fabs(pm - vm) > 1e-9 * std::max(1.0, vm)) {
      return integrate_adaptive(
          [&](double t) { return sublevel_volume(u, t) * std::exp(-t); }, a, b,
          1e-11);
    }
    double piece = 0.0;
    for (int j = 0; j <= n; ++j)
      piece += coef[static_cast<size_t>(j)] * poly_exp_integral(j, L);
    return std::exp(-a) * piece;
  };

  for (size_t i = 0; i + 1 < brk.size(); ++i) {
    if (brk[i + 1] - brk[i] < 1e-12) continue;
    total.add(integrate_piece(brk[i], brk[i + 1]));
  }

  // Tail beyond the last breakpoint.
  double tl = brk.back();
  if (u.all_bounded()) {
    total.add(std::exp(-tl) * sublevel_volume(u, tl + 1.0) * 1.0);
    // V is constant = V(dom) beyond the largest vertex value: the factor
    // integrates e^{-t} over [tl, inf).
  } else {
    // Conical growth: V(tl + tau) is a degree-n polynomial in tau on the
    // whole tail. Interpolate on n+1 nodes and integrate exactly.
    std::vector<std::vector<double>> m(static_cast<size_t>(n) + 1,
                                       std::vector<double>(static_cast<size_t>(n) + 1));
    std::vector<double> rhs(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      double tau = static_cast<double>(i + 1);
      for (int j = 0; j <= n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::pow(tau, j);
      rhs[static_cast<size_t>(i)] = sublevel_volume(u, tl + tau);
    }
    std::vector<double> coef = solve_linear(m, rhs);
    double piece = 0.0;
    for (int j = 0; j <= n; ++j)
      piece += coef[static_cast<size_t>(j)] * poly_exp_integral(j, kInf);
    total.add(std::exp(-tl) * piece);
  }
  return total.value();
}

double grad_valuation(const PolyhedralFunc& u, const DensityFunc& zeta) {
  if (zeta.kind != DensityFunc::Kind::OnRn || zeta.dim != u.dim)
    fail(ErrorCode::DimensionMismatch, "grad_valuation needs a density on R^n");
  KahanSum s;
  for (const PolyCell& c : u.cells) {
    double w = zeta(c.slope);
    if (!c.bounded()) {
      if (std::fabs(w) > 0.0)
        fail(ErrorCode::NotSuperCoercive,
             "unbounded cell with slope inside the density support");
      continue;
    }
    if (w == 0.0) continue;
    s.add(w * volume(c.base));
  }
  return s.value();
}

AtomicMeasure monge_ampere(const MaxAffineFunc& v) {
  PolyhedralFunc star = conjugate(v);
  AtomicMeasure m;
  for (const PolyCell& c : star.cells) {
    double mass = c.base.affine_dim() == v.dim ? volume(c.base) : 0.0;
    if (mass > 0.0) m.atoms.push_back({c.slope, mass});
  }
  return m;
}

double integrate(const AtomicMeasure& m, const DensityFunc& zeta) {
  KahanSum s;
  for (const auto& [p, mass] : m.atoms) s.add(zeta(p) * mass);
  return s.value();
}

EpiHomogComponents epi_homog_components(const FuncValuation& z,
                                        const PolyhedralFunc& u, int n) {
  std::vector<double> zj(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) zj[static_cast<size_t>(j)] = z(epi_scale(j, u));
  std::vector<std::vector<double>> m(static_cast<size_t>(n) + 1,
                                     std::vector<double>(static_cast<size_t>(n) + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          (j == 0 && i == 0) ? 1.0 : std::pow(j, i);
  EpiHomogComponents out;
  out.components = solve_linear(std::move(m), zj);
  // Probe the polynomial structure at lambda = n + 1.
  double probe = z(epi_scale(n + 1, u));
  double recon = 0.0;
  for (int i = 0; i <= n; ++i)
    recon += out.components[static_cast<size_t>(i)] * std::pow(n + 1, i);
  out.probe_residual = std::fabs(recon - probe);
  out.polynomial = out.probe_residual <= 1e-6 * std::max(1.0, std::fabs(probe));
  return out;
}

double znalpha_radial(int n, const RadialFunc& u, const DensityFunc& alpha,
                      double r) {
  if (r < 0.0) fail(ErrorCode::NegativeRadius, "negative epi-sum radius");
  KappaTable kappa(n);
  double inner = alpha.eval1(0.0) * kappa[n] * std::pow(r, n);
  double outer = 0.0;
  if (u.quadratic) {
    // phi'(s) = q s: substitute t = q s and expand (t/q + r)^{n-1} into
    // moments of the table.
    double q = u.quad_coef;
    for (int k = 0; k <= n - 1; ++k) {
      double coef = binomial(n - 1, k) * std::pow(r, n - 1 - k) / std::pow(q, k + 1);
      outer += coef * alpha.moment(k);
    }
    outer *= n * kappa[n];
  } else {
    // phi' increases; integrate to the last s with phi'(s) inside supp alpha.
    double hi = 1.0;
    while (u.phi_prime(hi) < alpha.support_radius() && hi < 1e9) hi *= 2.0;
    outer = n * kappa[n] *
            integrate_adaptive(
                [&](double s) {
                  return alpha.eval1(u.phi_prime(s)) * std::pow(s + r, n - 1);
                },
                0.0, hi, 1e-12);
  }
  return inner + outer;
}

namespace {

FunctionalIntrinsic fit_steiner(int n, const std::vector<double>& r_nodes,
                                const std::vector<double>& values) {
  std::vector<double> distinct = r_nodes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end(),
                             [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
                 distinct.end());
  if (static_cast<int>(distinct.size()) < n + 1)
    fail(ErrorCode::InsufficientNodes, "need n+1 distinct radii");

  size_t m = r_nodes.size();
  // Least squares for the degree-n polynomial in r (exact when m = n+1).
  std::vector<std::vector<double>> ata(static_cast<size_t>(n) + 1,
                                       std::vector<double>(static_cast<size_t>(n) + 1, 0.0));
  std::vector<double> atb(static_cast<size_t>(n) + 1, 0.0);
  for (size_t s = 0; s < m; ++s) {
    std::vector<double> row(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) row[static_cast<size_t>(j)] = std::pow(r_nodes[s], j);
    for (int i = 0; i <= n; ++i) {
      atb[static_cast<size_t>(i)] += row[static_cast<size_t>(i)] * values[s];
      for (int j = 0; j <= n; ++j)
        ata[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            row[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
    }
  }
  std::vector<double> coef = solve_linear(std::move(ata), std::move(atb));
  FunctionalIntrinsic out;
  KappaTable kappa(n);
  out.z.assign(static_cast<size_t>(n) + 1, 0.0);
  for (int j = 0; j <= n; ++j)
    out.z[static_cast<size_t>(j)] = coef[static_cast<size_t>(n - j)] / kappa[n - j];
  for (size_t s = 0; s < m; ++s) {
    double p = 0.0;
    for (int j = 0; j <= n; ++j)
      p += coef[static_cast<size_t>(j)] * std::pow(r_nodes[s], j);
    out.fit_residual = std::max(out.fit_residual, std::fabs(p - values[s]));
  }
  return out;
}

}  // namespace

FunctionalIntrinsic functional_intrinsic(const Polytope& body,
                                         const DensityFunc& alpha,
                                         const std::vector<double>& r_nodes) {
  int n = body.dim();
  std::vector<double> vals;
  for (double r : r_nodes)
    vals.push_back(alpha.eval1(0.0) * steiner_volume(body, r));
  return fit_steiner(n, r_nodes, vals);
}

FunctionalIntrinsic functional_intrinsic_radial(int n, const RadialFunc& u,
                                                const DensityFunc& alpha,
                                                const std::vector<double>& r_nodes) {
  if (n > 3) fail(ErrorCode::Unsupported, "radial route supports n <= 3");
  std::vector<double> vals;
  for (double r : r_nodes) vals.push_back(znalpha_radial(n, u, alpha, r));
  return fit_steiner(n, r_nodes, vals);
}

double vertical_shift_check(const FuncValuation& z, const PolyhedralFunc& u,
                            const std::vector<double>& t_values) {
  double base = z(u);
  double worst = 0.0;
  for (double t : t_values)
    worst = std::max(worst, std::fabs(z(u.shifted(t)) - std::exp(-t) * base));
  return worst;
}

double function_valuation_check(const FuncValuation& z, const FuncSplitPair& pair) {
  return std::fabs(z(pair.u) + z(pair.v) - z(pair.vee) - z(pair.wedge));
}

double function_valuation_check(const FuncValuation& z, const PolyhedralFunc& u,
                                const PolyhedralFunc& v) {
  if (u.dim != v.dim)
    fail(ErrorCode::DimensionMismatch, "valuation check: dimension mismatch");
  // u ∧ v as the cell patchwork; certified convex through the involution.
  FuncSplitPair pair;
  pair.u = u;
  pair.v = v;
  pair.wedge.dim = pair.vee.dim = u.dim;
  pair.wedge.cells = u.cells;
  pair.wedge.cells.insert(pair.wedge.cells.end(), v.cells.begin(), v.cells.end());
  if (!pair.wedge.all_bounded())
    fail(ErrorCode::Unsupported, "valuation check needs bounded cells");
  if (involution_residual(pair.wedge, 40, 0x5eedULL) > 1e-8)
    fail(ErrorCode::NonConvexMin, "pointwise minimum is not convex");
  // u ∨ v lives on the pairwise intersections of cell domains.
  for (const PolyCell& cu : u.cells) {
    for (const PolyCell& cv : v.cells) {
      Polytope inter = cu.base;
      for (const Facet& f : cv.base.facets()) {
        if (inter.is_empty()) break;
        inter = split_by_hyperplane(inter, f.plane).minus;
      }
      if (inter.is_empty()) continue;
      if (inter.affine_dim() == u.dim)
        fail(ErrorCode::Unsupported,
             "domains overlap on a full-dimensional set; use split pairs");
      for (const Vector& x : inter.vertices()) {
        if (std::fabs(cu.value(x) - cv.value(x)) > 1e-8)
          fail(ErrorCode::Unsupported, "values disagree on the shared boundary");
      }
      PolyCell cc = cu;
      cc.base = inter;
      pair.vee.cells.push_back(std::move(cc));
    }
  }
  if (pair.vee.cells.empty())
    fail(ErrorCode::ValidationError, "domains do not meet");
  return function_valuation_check(z, pair);
}

}  // namespace vallab
