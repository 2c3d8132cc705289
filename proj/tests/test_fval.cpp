#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "vallab/fval.hpp"

using namespace vallab;

namespace {

DensityFunc hat2() {
  return DensityFunc::radial(2, {0.0, 0.5, 3.0, 5.0}, {1.0, 0.8, 0.2, 0.0});
}

DensityFunc alpha_table() {
  return DensityFunc::on_halfline({0.0, 1.0, 2.0}, {1.0, 0.4, 0.0});
}

FuncValuation make_exp_integral() {
  FuncValuation z;
  z.evaluate = [](const PolyhedralFunc& u) { return exp_integral(u); };
  z.epi_translation_invariant = false;
  return z;
}

FuncValuation make_exp_min() {
  FuncValuation z;
  z.evaluate = [](const PolyhedralFunc& u) { return exp_min(u); };
  return z;
}

PolyhedralFunc abs1d() { return gauge(Polytope::segment(Vector{-1.0}, Vector{1.0})); }

}  // namespace

TEST_CASE("exp_min") {
  Rng rng(151);
  Polytope k = oracles::random_polygon(rng, 8, 1.0);
  CHECK(exp_min(indicator(k)) == doctest::Approx(1.0));

  Polytope sq = Polytope::cube(2, 1.0, -0.5);
  CHECK(exp_min(gauge(sq)) == doctest::Approx(1.0));

  PolyhedralFunc u = linear_plus_indicator(Vector{0.7, -0.2}, k);
  for (double t : {-1.0, 0.5, 2.0})
    CHECK(exp_min(u.shifted(t)) == doctest::Approx(std::exp(-t) * exp_min(u)).epsilon(1e-12));
}

TEST_CASE("exp_integral closed forms") {
  Rng rng(157);
  Polytope k = oracles::random_polygon(rng, 10, 1.0);
  CHECK(exp_integral(indicator(k)) == doctest::Approx(volume(k)).epsilon(1e-12));

  // Gauge integral: (1/n!) * integral of e^{-(g_K + t)} = e^{-t} V_n(K).
  Polytope body = hull({Vector{0.9, 0.1}, Vector{-0.4, 0.8}, Vector{-0.7, -0.5},
                        Vector{0.3, -0.9}});
  PolyhedralFunc g = gauge(body);
  for (double t : {-1.0, 0.0, 1.0}) {
    double expect = std::exp(-t) * 2.0 * volume(body);
    CHECK(exp_integral(g.shifted(t)) == doctest::Approx(expect).epsilon(1e-10));
  }

  // One dimension: integral of e^{-|x|} is 2.
  CHECK(exp_integral(abs1d()) == doctest::Approx(2.0).epsilon(1e-12));

  // Witness upper bound kappa_n e^{-b} n! / a^n.
  PolyhedralFunc u = linear_plus_indicator(Vector{0.5, 0.5}, k);
  CoercivityWitness w = coercivity_witness(u);
  CHECK(exp_integral(u) <= kPi * std::exp(-w.b) * 2.0 / (w.a * w.a) + 1e-9);

  // Monotone convergence along u + 1/k.
  double base = exp_integral(g);
  for (int kk : {1, 2, 4, 8}) {
    double shifted = exp_integral(g.shifted(1.0 / kk));
    CHECK(std::fabs(shifted - base) <= (std::exp(1.0 / kk) - 1.0) * base + 1e-12);
  }
}

TEST_CASE("gradient valuation") {
  Rng rng(163);
  DensityFunc zeta = hat2();
  for (int rep = 0; rep < 20; ++rep) {
    Polytope k = oracles::random_polygon(rng, 8, 1.0);
    Vector y{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    PolyhedralFunc u = linear_plus_indicator(y, k);
    double expect = zeta(y) * volume(k);
    CHECK(grad_valuation(u, zeta) == expect);  // identical finite sums
  }

  Polytope k = oracles::random_polygon(rng, 8, 1.0);
  CHECK(grad_valuation(indicator(k), zeta) == zeta(Vector(2)) * volume(k));

  // Epi-homogeneity of degree n.
  FuncSplitPair pair = split_function(linear_plus_indicator(Vector{0.4, -0.3}, k),
                                      Hyperplane(Vector{1, 0}, 0.0));
  PolyhedralFunc u = pair.wedge;
  double base = grad_valuation(u, zeta);
  for (double lam : {0.5, 2.0, 3.0}) {
    double scaled = grad_valuation(epi_scale(lam, u), zeta);
    CHECK(scaled == doctest::Approx(lam * lam * base).epsilon(1e-9));
  }

  // Vertical shifts leave the gradient field unchanged.
  CHECK(grad_valuation(u.shifted(1.3), zeta) == doctest::Approx(base).epsilon(1e-12));

  // Gauges have unbounded cells; their slopes must avoid supp zeta.
  CHECK_THROWS_AS(grad_valuation(gauge(Polytope::cube(2, 1.0, -0.5)), zeta), Error);
}

TEST_CASE("Monge-Ampere atoms") {
  Rng rng(167);
  Polytope k = oracles::random_polygon(rng, 9, 1.2);

  // Support function of K: single atom at the origin with mass V_2(K).
  MaxAffineFunc h;
  h.dim = 2;
  for (const Vector& v : k.vertices()) h.pieces.push_back({v, 0.0});
  AtomicMeasure m = monge_ampere(h);
  REQUIRE(m.atoms.size() == 1);
  CHECK(norm(m.atoms[0].first) < 1e-10);
  CHECK(m.atoms[0].second == doctest::Approx(volume(k)).epsilon(1e-12));

  // 1-D kink: atom at the breakpoint with the slope jump as mass.
  MaxAffineFunc kink;
  kink.dim = 1;
  kink.pieces = {{Vector{0.0}, 0.0}, {Vector{1.0}, -1.0}};
  AtomicMeasure m1 = monge_ampere(kink);
  REQUIRE(m1.atoms.size() == 1);
  CHECK(m1.atoms[0].first[0] == doctest::Approx(1.0));
  CHECK(m1.atoms[0].second == doctest::Approx(1.0));

  // Mass exhaustion: total mass is the volume of the slope hull.
  for (int rep = 0; rep < 10; ++rep) {
    MaxAffineFunc v;
    v.dim = 2;
    for (int i = 0; i < 10; ++i)
      v.pieces.push_back({Vector{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                          rng.uniform(-0.5, 0.5)});
    std::vector<Vector> slopes;
    for (const auto& [s, c] : v.pieces) {
      (void)c;
      slopes.push_back(s);
    }
    AtomicMeasure mm = monge_ampere(v);
    CHECK(mm.total_mass() == doctest::Approx(volume(hull(slopes))).epsilon(1e-10));
  }
}

TEST_CASE("duality between gradient valuations and Monge-Ampere integrals") {
  Rng rng(173);
  DensityFunc zeta = hat2();
  for (int rep = 0; rep < 15; ++rep) {
    MaxAffineFunc v;
    v.dim = 2;
    int pieces = 4 + static_cast<int>(rng.next_u64() % 9);
    for (int i = 0; i < pieces; ++i)
      v.pieces.push_back({Vector{rng.uniform(-2, 2), rng.uniform(-2, 2)},
                          rng.uniform(-1, 1)});
    PolyhedralFunc star = conjugate(v);
    double lhs = grad_valuation(star, zeta);
    double rhs = integrate(monge_ampere(v), zeta);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("epi-homogeneous decomposition") {
  Rng rng(179);
  Polytope k = oracles::random_polygon(rng, 8, 1.0);
  PolyhedralFunc u = linear_plus_indicator(Vector{0.6, 0.1}, k);
  DensityFunc zeta = hat2();

  FuncValuation zg;
  zg.evaluate = [&zeta](const PolyhedralFunc& w) { return grad_valuation(w, zeta); };
  EpiHomogComponents c = epi_homog_components(zg, u, 2);
  CHECK(c.polynomial);
  double total = c.components[0] + c.components[1] + c.components[2];
  CHECK(total == doctest::Approx(zg(u)).epsilon(1e-10));
  CHECK(std::fabs(c.components[0]) < 1e-9 * std::max(1.0, std::fabs(c.components[2])));
  CHECK(std::fabs(c.components[1]) < 1e-9 * std::max(1.0, std::fabs(c.components[2])));

  FuncValuation constv;
  constv.evaluate = [](const PolyhedralFunc&) { return 3.25; };
  EpiHomogComponents cc = epi_homog_components(constv, u, 2);
  CHECK(cc.components[0] == doctest::Approx(3.25));
  CHECK(std::fabs(cc.components[1]) < 1e-12);
  CHECK(std::fabs(cc.components[2]) < 1e-12);

  // exp_min is genuinely non-polynomial in the epi-scaling parameter, but
  // the extracted components still sum to Z(u).
  EpiHomogComponents cm = epi_homog_components(make_exp_min(), u, 2);
  double sum = cm.components[0] + cm.components[1] + cm.components[2];
  CHECK(sum == doctest::Approx(exp_min(u)).epsilon(1e-9));
  CHECK(!cm.polynomial);
}

TEST_CASE("functional intrinsic volumes: indicator route") {
  Rng rng(181);
  DensityFunc alpha = alpha_table();
  for (int rep = 0; rep < 5; ++rep) {
    Polytope k = oracles::random_polygon(rng, 8, 1.0);
    FunctionalIntrinsic fi = functional_intrinsic(k, alpha, {0.1, 0.4, 0.9});
    IntrinsicVector iv = intrinsic_volumes(k);
    for (int j = 0; j <= 2; ++j) {
      double expect = alpha.eval1(0.0) * iv[j];
      CHECK(fi.z[static_cast<size_t>(j)] ==
            doctest::Approx(expect).epsilon(1e-8));
    }
    CHECK(fi.fit_residual < 1e-10);
  }
  Polytope k = Polytope::cube(2, 1.0);
  CHECK_THROWS_AS(functional_intrinsic(k, alpha, {0.1, 0.1, 0.1}), Error);

  // Box in R^3.
  Polytope bx = Polytope::box({0, 0, 0}, {1.0, 0.5, 0.25});
  FunctionalIntrinsic f3 = functional_intrinsic(bx, alpha, {0.1, 0.3, 0.6, 1.0});
  IntrinsicVector iv3 = intrinsic_volumes(bx);
  for (int j = 0; j <= 3; ++j)
    CHECK(f3.z[static_cast<size_t>(j)] ==
          doctest::Approx(alpha.eval1(0.0) * iv3[j]).epsilon(1e-8));
}

TEST_CASE("functional intrinsic volumes: radial route") {
  DensityFunc alpha = alpha_table();
  RadialFunc u;
  u.phi = [](double s) { return 0.5 * s * s; };
  u.phi_prime = [](double s) { return s; };
  u.quadratic = true;
  u.quad_coef = 1.0;

  // Closed form in the plane: alpha(0) pi r^2 + 2 pi ∫ alpha(t)(t + r) dt.
  auto closed = [&](double r) {
    return alpha.eval1(0.0) * kPi * r * r +
           2.0 * kPi * (alpha.moment(1) + r * alpha.moment(0));
  };
  for (double r : {0.0, 0.25, 0.7, 1.3})
    CHECK(znalpha_radial(2, u, alpha, r) == doctest::Approx(closed(r)).epsilon(1e-12));

  FunctionalIntrinsic fi = functional_intrinsic_radial(2, u, alpha, {0.1, 0.5, 1.0});
  // Held-out radii: the fitted polynomial must reproduce the closed form.
  for (double r : {0.3, 0.8, 1.7, 2.4, 3.0}) {
    double fitted = fi.z[2] * kPi * 0.0;  // assemble sum_j r^{2-j} kappa_{2-j} z_j
    KappaTable kappa(2);
    fitted = 0.0;
    for (int j = 0; j <= 2; ++j)
      fitted += std::pow(r, 2 - j) * kappa[2 - j] * fi.z[static_cast<size_t>(j)];
    CHECK(fitted == doctest::Approx(closed(r)).epsilon(1e-6));
  }

  // The generic quadrature route agrees with the exact moments.
  RadialFunc ug = u;
  ug.quadratic = false;
  for (double r : {0.2, 0.9})
    CHECK(znalpha_radial(2, ug, alpha, r) ==
          doctest::Approx(znalpha_radial(2, u, alpha, r)).epsilon(1e-9));
}

TEST_CASE("epi-translation invariance") {
  Rng rng(199);
  DensityFunc zeta = hat2();
  Polytope k = oracles::random_polygon(rng, 9, 1.0);
  PolyhedralFunc u = linear_plus_indicator(Vector{0.4, -0.2}, k);
  Vector shift{0.7, -1.1};
  PolyhedralFunc moved = u.translated(shift);

  CHECK(grad_valuation(moved, zeta) ==
        doctest::Approx(grad_valuation(u, zeta)).epsilon(1e-12));
  CHECK(exp_integral(moved.shifted(0.5)) ==
        doctest::Approx(std::exp(-0.5) * exp_integral(u)).epsilon(1e-10));
  CHECK(exp_min(moved.shifted(0.5)) ==
        doctest::Approx(std::exp(-0.5) * exp_min(u)).epsilon(1e-12));
}

TEST_CASE("vertical shift law") {
  Rng rng(191);
  Polytope body = oracles::random_polygon(rng, 8, 1.0);
  Polytope shifted_body = body.translate(Vector{0.2, 0.1} - body.vertices()[0]);
  PolyhedralFunc g = shifted_body.contains(Vector(2), -1e-3)
                         ? gauge(shifted_body)
                         : linear_plus_indicator(Vector{0.3, 0.3}, body);

  CHECK(vertical_shift_check(make_exp_integral(), g, {-1.0, 0.0, 1.0}) < 1e-10);
  CHECK(vertical_shift_check(make_exp_min(), g, {-1.0, 0.5, 2.0}) < 1e-12);

  DensityFunc zeta = hat2();
  FuncValuation zg;
  zg.evaluate = [&zeta](const PolyhedralFunc& w) { return grad_valuation(w, zeta); };
  PolyhedralFunc u = linear_plus_indicator(Vector{0.4, 0.0}, body);
  double expect = std::fabs(1.0 - std::exp(-1.0)) * std::fabs(zg(u));
  CHECK(vertical_shift_check(zg, u, {1.0}) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("valuation identity on split pairs") {
  Rng rng(193);
  DensityFunc zeta = hat2();
  FuncValuation zs[3] = {make_exp_min(), make_exp_integral(), FuncValuation{}};
  zs[2].evaluate = [&zeta](const PolyhedralFunc& w) { return grad_valuation(w, zeta); };

  FuncValuation sq;
  sq.evaluate = [](const PolyhedralFunc& w) {
    double e = exp_integral(w);
    return e * e;
  };

  int bad_detected = 0;
  for (int rep = 0; rep < 20; ++rep) {
    Polytope k = oracles::random_polygon(rng, 10, 1.0);
    Vector y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    PolyhedralFunc w = linear_plus_indicator(y, k);
    double a = rng.uniform(0.0, 2.0 * kPi);
    FuncSplitPair pair;
    try {
      pair = split_function(w, Hyperplane(Vector{std::cos(a), std::sin(a)}, 0.0));
    } catch (const Error&) {
      continue;
    }
    for (const FuncValuation& z : zs)
      CHECK(function_valuation_check(z, pair) < 1e-10);
    if (function_valuation_check(sq, pair) > 1e-6) ++bad_detected;

    // The two-argument form reassembles the same pair.
    CHECK(function_valuation_check(zs[1], pair.u, pair.v) < 1e-10);
  }
  CHECK(bad_detected > 10);
}
