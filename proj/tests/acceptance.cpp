// Acceptance suite: every criterion runs at its stated tolerance and prints
// one PASS/FAIL line; the binary exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vallab/affine.hpp"
#include "vallab/dehn.hpp"
#include "vallab/fval.hpp"
#include "vallab/intrinsic.hpp"

using namespace vallab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
  void note(const std::string& text) {
    if (pass && detail.empty()) detail = text;
  }
};

double ball_deficit(const Polytope& ball) {
  double m = kInf;
  for (const Facet& f : ball.facets()) m = std::min(m, f.plane.offset);
  return 1.0 - m;
}

char buf_detail[256];

Polytope random_box(Rng& rng, int n) {
  std::vector<double> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    lo[static_cast<size_t>(i)] = rng.uniform(-1.0, 0.0);
    hi[static_cast<size_t>(i)] = rng.uniform(0.1, 1.2);
  }
  return Polytope::box(lo, hi);
}

DensityFunc random_density(Rng& rng) {
  double b1 = rng.uniform(0.3, 1.5), b2 = b1 + rng.uniform(0.5, 2.0);
  return DensityFunc::radial(
      2, {0.0, b1, b2},
      {rng.uniform(0.2, 1.5), rng.uniform(0.0, 1.0), 0.0});
}

// ---- criteria ----------------------------------------------------------

Outcome crit1_intrinsic_boxes() {
  Outcome o;
  Rng rng(10001);
  Polytope ball2 = Polytope::ball_approx(2, 512);
  Polytope ball3 = Polytope::ball_approx(3, 3);
  double worst_fit = 0.0;
  for (int n = 2; n <= 3; ++n) {
    const Polytope& ball = n == 2 ? ball2 : ball3;
    double deficit = ball_deficit(ball);
    for (int rep = 0; rep < 6; ++rep) {
      Polytope p = random_box(rng, n);
      IntrinsicVector iv = intrinsic_volumes(p);
      std::vector<double> sides;
      for (int i = 0; i < n; ++i) {
        double lo = kInf, hi = -kInf;
        for (const Vector& v : p.vertices()) {
          lo = std::min(lo, v[i]);
          hi = std::max(hi, v[i]);
        }
        sides.push_back(hi - lo);
      }
      // Elementary symmetric polynomials.
      std::vector<double> e(static_cast<size_t>(n) + 1, 0.0);
      e[0] = 1.0;
      for (double s : sides)
        for (size_t j = e.size(); j-- > 1;) e[j] += s * e[j - 1];
      for (int j = 0; j <= n; ++j)
        o.require(std::fabs(iv[j] - e[static_cast<size_t>(j)]) <= 1e-10,
                  "box V_j != elementary symmetric");
      for (double r : {0.1, 0.5, 1.0}) {
        double exact = volume(minkowski_sum(p, ball.scale(r)));
        double steiner = steiner_volume(p, r);
        double bound = steiner - steiner_volume(p, r * (1.0 - deficit)) + 1e-9;
        double err = std::fabs(exact - steiner);
        worst_fit = std::max(worst_fit, err / bound);
        o.require(err <= bound, "Steiner fit outside the ball-approximation bound");
      }
    }
  }
  std::snprintf(buf_detail, sizeof buf_detail, "worst fit error %.2f of bound",
                worst_fit);
  o.note(buf_detail);
  return o;
}

Outcome crit2_canonical_decomposition() {
  Outcome o;
  Rng rng(10002);
  double worst_vol = 0.0;
  long long violations = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int n = 2 + static_cast<int>(rng.next_u64() % 2);
    Polytope s = oracles::random_simplex(rng, n, 1.0);
    for (double t : {0.25, 0.5, 0.75}) {
      auto pieces = canonical_simplex_decomposition(s, t);
      KahanSum total;
      for (const auto& piece : pieces) total.add(volume(piece.body));
      worst_vol = std::max(worst_vol, std::fabs(total.value() - volume(s)));
      o.require(std::fabs(total.value() - volume(s)) <= 1e-12,
                "piece volumes do not sum to the simplex volume");
    }
    // 1e4 interior samples against the t = 0.5 decomposition.
    auto pieces = canonical_simplex_decomposition(s, 0.5);
    const auto& pv = s.vertices();
    for (int it = 0; it < 10000; ++it) {
      std::vector<double> w(static_cast<size_t>(n) + 1);
      double tot = 0.0;
      for (double& x : w) {
        x = -std::log(1.0 - rng.next_double());
        tot += x;
      }
      Vector x(n);
      for (size_t i = 0; i < w.size(); ++i) x += (w[i] / tot) * pv[i];
      int strict = 0;
      bool boundary = false;
      for (const auto& piece : pieces) {
        double worst = -kInf;
        for (const Facet& f : piece.body.facets())
          worst = std::max(worst, f.plane.signed_dist(x));
        if (worst < -1e-9)
          ++strict;
        else if (worst <= 1e-9)
          boundary = true;
      }
      if (!(strict == 1 || (strict == 0 && boundary))) ++violations;
    }
  }
  o.require(violations == 0, "sample point in zero or two piece interiors");
  std::snprintf(buf_detail, sizeof buf_detail,
                "max |sum - V| = %.2e, tiling violations %lld", worst_vol,
                violations);
  o.note(buf_detail);
  return o;
}

Outcome crit3_cylinder_decomposition() {
  Outcome o;
  Rng rng(10003);
  double worst = 0.0;
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m <= 5; ++m) {
      Polytope s = oracles::random_simplex(rng, n, 1.0);
      auto pieces = cylinder_decomposition(s, m);
      // Multiplicities per chain length.
      for (const auto& piece : pieces) {
        int l = piece.label[2] - '0';
        o.require(piece.multiplicity == static_cast<long long>(binomial(m, l)),
                  "signature multiplicity != C(m,l)");
      }
      KahanSum total;
      for (const auto& piece : pieces)
        total.add(static_cast<double>(piece.multiplicity) * volume(piece.body));
      double expect = std::pow(m, n) * volume(s);
      worst = std::max(worst, std::fabs(total.value() - expect));
      o.require(std::fabs(total.value() - expect) <= 1e-12,
                "total volume != m^n V(S)");
    }
  }
  std::snprintf(buf_detail, sizeof buf_detail, "max |sum - m^n V| = %.2e", worst);
  o.note(buf_detail);
  return o;
}

Outcome crit4_homogeneous_components() {
  Outcome o;
  Rng rng(10004);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    Polytope p = oracles::random_polygon(rng, 12, 1.0);
    double c0 = rng.uniform(-2, 2), c1 = rng.uniform(-2, 2), c2 = rng.uniform(-2, 2);
    BodyValuation z;
    z.translation_invariant = true;
    z.evaluate = [=](const Polytope& q) {
      IntrinsicVector iv = intrinsic_volumes(q);
      return c0 * iv[0] + c1 * iv[1] + c2 * iv[2];
    };
    IntrinsicVector iv = intrinsic_volumes(p);
    auto comps = homogeneous_components(z, p);
    double want[] = {c0, c1 * iv[1], c2 * iv[2]};
    for (int j = 0; j <= 2; ++j) {
      double rel = std::fabs(comps[static_cast<size_t>(j)] - want[j]) /
                   std::max(1e-12, std::fabs(want[j]));
      worst = std::max(worst, rel);
      o.require(rel <= 1e-9, "component off by more than 1e-9 relative");
    }
  }
  std::snprintf(buf_detail, sizeof buf_detail, "worst relative error %.2e", worst);
  o.note(buf_detail);
  return o;
}

Outcome crit5_dehn() {
  Outcome o;
  DehnSymbol cube = dehn_symbol(Polytope::cube(3, 1.0));
  o.require(cube.empty(), "cube symbol is not empty");

  double edge = std::cbrt(6.0 * std::sqrt(2.0));
  DehnSymbol tetra = dehn_symbol(Polytope::regular_tetrahedron(edge));
  RelationVerdict v = symbol_equal(tetra, cube, 10000, 64);
  o.require(v.kind == RelationVerdict::Kind::Distinct,
            "cube vs tetrahedron not Distinct at height 1e4");

  Rng rng(10005);
  int cuts = 0;
  while (cuts < 20) {
    Polytope p;
    switch (cuts % 3) {
      case 0: p = oracles::random_simplex(rng, 3, 1.0); break;
      case 1:
        p = Polytope::box({rng.uniform(-1, -0.2), rng.uniform(-1, -0.2),
                           rng.uniform(-1, -0.2)},
                          {rng.uniform(0.2, 1), rng.uniform(0.2, 1),
                           rng.uniform(0.2, 1)});
        break;
      default: p = Polytope::regular_tetrahedron(1.0 + rng.next_double()); break;
    }
    double a = rng.uniform(0.0, 2.0 * kPi);
    double zc = rng.uniform(-0.9, 0.9);
    Vector nrm{std::cos(a) * std::sqrt(1 - zc * zc),
               std::sin(a) * std::sqrt(1 - zc * zc), zc};
    SplitResult sr = split_by_hyperplane(p, Hyperplane(nrm, rng.uniform(-0.1, 0.1)));
    if (sr.plus.is_empty() || sr.minus.is_empty()) continue;
    if (sr.plus.affine_dim() < 3 || sr.minus.affine_dim() < 3) continue;
    DehnSymbol sum = symbol_sum(dehn_symbol(sr.plus), dehn_symbol(sr.minus));
    RelationVerdict add = symbol_equal(sum, dehn_symbol(p));
    o.require(add.kind == RelationVerdict::Kind::Equal,
              "split additivity did not reduce to Equal");
    ++cuts;
  }
  std::snprintf(buf_detail, sizeof buf_detail,
                "tetra residual length %.3f, 20 cuts Equal", v.residual_length);
  o.note(buf_detail);
  return o;
}

Outcome crit6_kinematic() {
  Outcome o;
  Polytope sq = Polytope::cube(2, 1.0);
  double target = 2.0 + 8.0 / kPi;
  KinematicEstimate e = kinematic_integral_mc(sq, sq, 10000000, 0);
  double rel = std::fabs(e.estimate - target) / target;
  o.require(rel <= 0.01, "estimate more than 1% off the closed form");
  o.require(std::fabs(e.estimate - target) <= 3.0 * e.stderr_,
            "estimate outside 3 standard errors");
  std::snprintf(buf_detail, sizeof buf_detail,
                "estimate %.5f vs %.5f (rel %.2e, %.1f sigma)", e.estimate,
                target, rel, std::fabs(e.estimate - target) / e.stderr_);
  o.note(buf_detail);
  return o;
}

Outcome crit7_affine_length() {
  Outcome o;
  SubdivisionResult circ = affine_length_subdivision(SmoothBody2::circle(1.0), 12);
  o.require(std::fabs(circ.estimate - 2.0 * kPi) <= 1e-6,
            "circle estimate misses 2 pi by more than 1e-6");
  for (size_t i = 1; i < circ.trace.size(); ++i)
    o.require(circ.trace[i] <= circ.trace[i - 1], "circle trace increased");

  SubdivisionResult ell = affine_length_subdivision(SmoothBody2::ellipse(2.0, 1.0), 12);
  o.require(std::fabs(ell.estimate - 2.0 * kPi * std::cbrt(2.0)) <= 1e-5,
            "ellipse estimate misses 2 pi 2^{1/3} by more than 1e-5");

  JensenCheck jc = asa_upper_bound_check(SmoothBody2::circle(1.0));
  o.require(jc.holds && std::fabs(jc.lhs - jc.rhs) <= 1e-9,
            "upper bound not an equality on the disc");
  std::snprintf(buf_detail, sizeof buf_detail,
                "circle err %.2e, ellipse err %.2e, disc gap %.2e",
                std::fabs(circ.estimate - 2.0 * kPi),
                std::fabs(ell.estimate - 2.0 * kPi * std::cbrt(2.0)),
                std::fabs(jc.lhs - jc.rhs));
  o.note(buf_detail);
  return o;
}

Outcome crit8_gauge_integral() {
  Outcome o;
  Rng rng(10008);
  double worst = 0.0;
  int made = 0;
  while (made < 50) {
    Polytope k = oracles::random_polygon(rng, 10, 1.0);
    Vector c(2);
    for (const Vector& v : k.vertices()) c += (1.0 / k.vertices().size()) * v;
    k = k.translate(-c);  // centroid at the origin: 0 interior
    if (!k.contains(Vector(2), -1e-6)) continue;
    PolyhedralFunc g = gauge(k);
    for (double t : {-1.0, 0.0, 1.0}) {
      double got = exp_integral(g.shifted(t));
      double expect = std::exp(-t) * 2.0 * volume(k);
      double rel = std::fabs(got - expect) / expect;
      worst = std::max(worst, rel);
      o.require(rel <= 1e-8, "gauge integral off by more than 1e-8 relative");
    }
    ++made;
  }
  std::snprintf(buf_detail, sizeof buf_detail, "worst relative error %.2e", worst);
  o.note(buf_detail);
  return o;
}

Outcome crit9_valuation_identity() {
  Outcome o;
  Rng rng(10009);
  DensityFunc zeta = DensityFunc::radial(2, {0.0, 1.0, 4.0}, {1.0, 0.7, 0.0});
  FuncValuation zs[3];
  zs[0].evaluate = [](const PolyhedralFunc& u) { return exp_min(u); };
  zs[1].evaluate = [](const PolyhedralFunc& u) { return exp_integral(u); };
  zs[2].evaluate = [&zeta](const PolyhedralFunc& u) { return grad_valuation(u, zeta); };
  FuncValuation sq;
  sq.evaluate = [](const PolyhedralFunc& u) {
    double e = exp_integral(u);
    return e * e;
  };
  double worst = 0.0, worst_bad = 0.0;
  int made = 0;
  while (made < 100) {
    Polytope k = oracles::random_polygon(rng, 10, 1.0);
    Vector y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    double a = rng.uniform(0.0, 2.0 * kPi);
    FuncSplitPair pair;
    try {
      pair = split_function(linear_plus_indicator(y, k),
                            Hyperplane(Vector{std::cos(a), std::sin(a)}, 0.0));
    } catch (const Error&) {
      continue;
    }
    for (const FuncValuation& z : zs) {
      double r = function_valuation_check(z, pair);
      worst = std::max(worst, r);
      o.require(r < 1e-8, "built-in valuation residual exceeded 1e-8");
    }
    worst_bad = std::max(worst_bad, function_valuation_check(sq, pair));
    ++made;
  }
  o.require(worst_bad > 1e-6, "squared integral not detected as a non-valuation");
  std::snprintf(buf_detail, sizeof buf_detail,
                "max residual %.2e; counterexample residual %.2e", worst, worst_bad);
  o.note(buf_detail);
  return o;
}

Outcome crit10_grad_classification() {
  Outcome o;
  Rng rng(10010);
  for (int rep = 0; rep < 100; ++rep) {
    Polytope k = oracles::random_polygon(rng, 8, 1.0);
    Vector y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    DensityFunc zeta = random_density(rng);
    double lhs = grad_valuation(linear_plus_indicator(y, k), zeta);
    double rhs = zeta(y) * volume(k);
    o.require(lhs == rhs, "finite-sum equality violated");
  }
  o.note("100 instances, bitwise equality");
  return o;
}

Outcome crit11_monge_ampere_duality() {
  Outcome o;
  Rng rng(10011);
  double worst = 0.0;
  int made = 0;
  while (made < 50) {
    MaxAffineFunc v;
    v.dim = 2;
    int pieces = 4 + static_cast<int>(rng.next_u64() % 9);  // <= 12
    for (int i = 0; i < pieces; ++i)
      v.pieces.push_back({Vector{rng.uniform(-2, 2), rng.uniform(-2, 2)},
                          rng.uniform(-1, 1)});
    v = v.pruned();
    if (v.pieces.size() < 3) continue;
    ++made;
    PolyhedralFunc u = conjugate(v);

    // Independent certification of the conjugate pair: v = u* by
    // sup-enumeration over the vertex candidates of u.
    auto vertex_vals = u.vertex_values();
    for (int s = 0; s < 20; ++s) {
      Vector x{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
      double best = -kInf;
      for (const auto& [w, val] : vertex_vals)
        best = std::max(best, dot(x, w) - val);
      o.require(std::fabs(best - v(x)) <= 1e-10,
                "sup-enumeration disagrees with the conjugate");
    }

    DensityFunc zeta = random_density(rng);
    double lhs = grad_valuation(u, zeta);
    double rhs = integrate(monge_ampere(v), zeta);
    worst = std::max(worst, std::fabs(lhs - rhs));
    o.require(std::fabs(lhs - rhs) <= 1e-10, "duality residual above 1e-10");
  }
  std::snprintf(buf_detail, sizeof buf_detail, "max |lhs - rhs| = %.2e", worst);
  o.note(buf_detail);
  return o;
}

Outcome crit12_functional_mcmullen() {
  Outcome o;
  Rng rng(10012);
  DensityFunc zeta = DensityFunc::radial(2, {0.0, 1.5, 4.0}, {1.0, 0.5, 0.0});
  FuncValuation zg;
  zg.evaluate = [&zeta](const PolyhedralFunc& u) { return grad_valuation(u, zeta); };
  double worst_off = 0.0, worst_sum = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    Polytope k = oracles::random_polygon(rng, 9, 1.0);
    PolyhedralFunc u =
        linear_plus_indicator(Vector{rng.uniform(-1, 1), rng.uniform(-1, 1)}, k);
    EpiHomogComponents c = epi_homog_components(zg, u, 2);
    double zn = c.components[2];
    double zu = zg(u);
    for (int i = 0; i < 2; ++i) {
      worst_off = std::max(worst_off, std::fabs(c.components[static_cast<size_t>(i)]));
      o.require(std::fabs(c.components[static_cast<size_t>(i)]) <=
                    1e-9 * std::max(1e-12, std::fabs(zn)),
                "off-degree component above 1e-9 |Z_n|");
    }
    double sum = c.components[0] + c.components[1] + c.components[2];
    worst_sum = std::max(worst_sum, std::fabs(sum - zu));
    o.require(std::fabs(sum - zu) <= 1e-12 * std::max(1.0, std::fabs(zu)),
              "components do not sum back to Z(u)");
  }
  std::snprintf(buf_detail, sizeof buf_detail,
                "max off-degree %.2e, max |sum - Z| = %.2e", worst_off, worst_sum);
  o.note(buf_detail);
  return o;
}

Outcome crit13_functional_steiner() {
  Outcome o;
  Rng rng(10013);
  DensityFunc alpha = DensityFunc::on_halfline({0.0, 0.8, 2.0}, {1.0, 0.5, 0.0});
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    Polytope k = oracles::random_polygon(rng, 9, 1.0);
    FunctionalIntrinsic fi = functional_intrinsic(k, alpha, {0.1, 0.4, 0.9});
    IntrinsicVector iv = intrinsic_volumes(k);
    for (int j = 0; j <= 2; ++j) {
      double expect = alpha.eval1(0.0) * iv[j];
      double rel = std::fabs(fi.z[static_cast<size_t>(j)] - expect) /
                   std::max(1e-12, std::fabs(expect));
      worst = std::max(worst, rel);
      o.require(rel <= 1e-8, "indicator route misses alpha(0) V_j");
    }
  }

  RadialFunc u;
  u.phi = [](double s) { return 0.5 * s * s; };
  u.phi_prime = [](double s) { return s; };
  u.quadratic = true;
  u.quad_coef = 1.0;
  FunctionalIntrinsic fi = functional_intrinsic_radial(2, u, alpha, {0.1, 0.5, 1.0});
  KappaTable kappa(2);
  double worst_radial = 0.0;
  for (double r : {0.3, 0.8, 1.4, 2.2, 3.1}) {
    double fitted = 0.0;
    for (int j = 0; j <= 2; ++j)
      fitted += std::pow(r, 2 - j) * kappa[2 - j] * fi.z[static_cast<size_t>(j)];
    double closed = alpha.eval1(0.0) * kPi * r * r +
                    2.0 * kPi * (alpha.moment(1) + r * alpha.moment(0));
    worst_radial = std::max(worst_radial, std::fabs(fitted - closed));
    o.require(std::fabs(fitted - closed) <= 1e-6,
              "radial fit misses the closed form at a held-out radius");
  }
  std::snprintf(buf_detail, sizeof buf_detail,
                "indicator worst rel %.2e, radial worst abs %.2e", worst,
                worst_radial);
  o.note(buf_detail);
  return o;
}

Outcome crit14_involution_episum() {
  Outcome o;
  Rng rng(10014);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    MaxAffineFunc v;
    v.dim = 2;
    for (int i = 0; i < 8; ++i)
      v.pieces.push_back({Vector{rng.uniform(-2, 2), rng.uniform(-2, 2)},
                          rng.uniform(-1, 1)});
    PolyhedralFunc u = conjugate(v.pruned());
    double r = involution_residual(u, 100, rng.next_u64());
    worst = std::max(worst, r);
    o.require(r <= 1e-10, "double conjugation drifted above 1e-10");
  }
  for (int rep = 0; rep < 5; ++rep) {
    Polytope k = oracles::random_polygon(rng, 8, 1.0);
    Polytope l = oracles::random_polygon(rng, 8, 0.8);
    PolyhedralFunc conv = inf_conv(indicator(k), indicator(l));
    Polytope dom = sublevel(conv, 0.0);
    double d = hausdorff_distance(dom, minkowski_sum(k, l));
    worst = std::max(worst, d);
    o.require(d <= 1e-9, "ind_K square ind_L misses ind_{K+L}");
  }
  std::snprintf(buf_detail, sizeof buf_detail, "worst residual %.2e", worst);
  o.note(buf_detail);
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Entry> entries = {
      {1, "intrinsic volumes of boxes + Steiner fit", 5, crit1_intrinsic_boxes},
      {2, "canonical simplex decomposition", 10, crit2_canonical_decomposition},
      {3, "l-cylinder decomposition", 5, crit3_cylinder_decomposition},
      {4, "homogeneous component extraction", 1, crit4_homogeneous_components},
      {5, "Dehn symbols and Hilbert third problem", 30, crit5_dehn},
      {6, "kinematic formula Monte Carlo", 60, crit6_kinematic},
      {7, "affine length subdivision", 10, crit7_affine_length},
      {8, "gauge layer-cake integral", 10, crit8_gauge_integral},
      {9, "valuation identity on functions", 20, crit9_valuation_identity},
      {10, "gradient valuation classification instance", 1, crit10_grad_classification},
      {11, "Monge-Ampere duality", 10, crit11_monge_ampere_duality},
      {12, "functional homogeneous decomposition", 5, crit12_functional_mcmullen},
      {13, "functional Steiner coefficients", 10, crit13_functional_steiner},
      {14, "conjugate involution and epi-addition", 5, crit14_involution_episum},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    bool in_budget = secs < e.budget_s;
    bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d (%6.2f s, budget %3.0f s): %s%s%s\n",
                pass ? "PASS" : "FAIL", e.id, secs, e.budget_s, e.label,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    if (!in_budget) std::printf("       time budget exceeded\n");
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
