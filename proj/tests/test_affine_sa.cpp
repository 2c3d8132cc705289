#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vallab/affine.hpp"

using namespace vallab;

namespace {

std::vector<SmoothBody2> analytic_bodies() {
  return {SmoothBody2::circle(1.0), SmoothBody2::ellipse(2.0, 1.0),
          SmoothBody2::ellipse(1.3, 0.7),
          SmoothBody2::fourier(1.0, {0.05, 0.03}, {0.0, 0.02})};
}

Mat sl2(double shear, double stretch, double angle) {
  Mat sh = Mat::identity(2);
  sh.at(0, 1) = shear;
  Mat st(2);
  st.at(0, 0) = stretch;
  st.at(1, 1) = 1.0 / stretch;
  return sh.mul(st).mul(Mat::rotation2(angle));
}

}  // namespace

TEST_CASE("support triangles of the disc and the ellipse") {
  SmoothBody2 disc = SmoothBody2::circle(1.0);
  for (double alpha : {0.2, 0.5, 1.0}) {
    SupportTriangle tr = support_triangle(disc, -alpha, alpha);
    double expect = std::sin(alpha) * std::sin(alpha) * std::tan(alpha);
    CHECK(tr.area == doctest::Approx(expect).epsilon(1e-12));
  }

  // Degenerating parameter gap.
  CHECK(support_triangle(disc, 0.1, 0.1 + 1e-5).area < 1e-12);

  // Antipodal parameters: parallel tangents.
  CHECK_THROWS_AS(support_triangle(disc, 0.0, kPi), Error);

  // Quarter-turn pair on an axis-aligned ellipse: triangle (a,0),(a,b),(0,b).
  double a = 2.0, b = 1.0;
  SupportTriangle tr = support_triangle(SmoothBody2::ellipse(a, b), 0.0, kPi / 2);
  CHECK(tr.area == doctest::Approx(0.5 * a * b).epsilon(1e-10));
  CHECK(nearly_equal(tr.apex, Vector{a, b}, 1e-10));
}

TEST_CASE("subdivision estimates the affine length") {
  SubdivisionResult circ = affine_length_subdivision(SmoothBody2::circle(1.0), 12);
  CHECK(std::fabs(circ.estimate - 2.0 * kPi) < 1e-6);

  SubdivisionResult ell = affine_length_subdivision(SmoothBody2::ellipse(2.0, 1.0), 12);
  CHECK(std::fabs(ell.estimate - 2.0 * kPi * std::cbrt(2.0)) < 1e-5);

  CHECK_THROWS_AS(affine_length_subdivision(SmoothBody2::circle(1.0), 0), Error);
}

TEST_CASE("subdivision trace is monotone nonincreasing") {
  for (const SmoothBody2& k : analytic_bodies()) {
    SubdivisionResult r = affine_length_subdivision(k, 12);
    for (size_t i = 1; i < r.trace.size(); ++i)
      CHECK(r.trace[i] <= r.trace[i - 1] + 1e-12);
  }
}

TEST_CASE("near-polygon bodies have vanishing affine length") {
  SmoothBody2 p = SmoothBody2::polygon_like(1e-11);
  // Premise: curvature radius at most 1e-8 away from finitely many points.
  for (int j = 0; j < 1024; ++j) {
    double t = 2.0 * kPi * j / 1024.0;
    CHECK(p.curvature_radius(t) <= 1e-8);
  }
  SubdivisionResult r = affine_length_subdivision(p, 12);
  CHECK(r.estimate <= 1e-6);
}

TEST_CASE("smooth quadrature: closed forms and homogeneity") {
  CHECK(affine_surface_area_smooth(SmoothBody2::circle(1.0), 512) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(affine_surface_area_smooth(SmoothBody2::ellipse(2.0, 1.0), 512) ==
        doctest::Approx(2.0 * kPi * std::cbrt(2.0)).epsilon(1e-8));
  // Dilation scales by t^{2/3}.
  double base = affine_surface_area_smooth(SmoothBody2::ellipse(1.1, 0.8), 512);
  double scaled = affine_surface_area_smooth(SmoothBody2::ellipse(3.3, 2.4), 512);
  CHECK(scaled == doctest::Approx(std::pow(3.0, 2.0 / 3.0) * base).epsilon(1e-9));
}

TEST_CASE("subdivision agrees with quadrature on analytic bodies") {
  for (const SmoothBody2& k : analytic_bodies()) {
    double sub = affine_length_subdivision(k, 12).estimate;
    double quad = affine_surface_area_smooth(k, 512);
    CHECK(std::fabs(sub - quad) <= 1e-4);
  }
}

TEST_CASE("equi-affine invariance of the subdivision estimate") {
  Rng rng(83);
  for (const SmoothBody2& k : analytic_bodies()) {
    double base = affine_length_subdivision(k, 12).estimate;
    for (int rep = 0; rep < 3; ++rep) {
      Mat phi = sl2(rng.uniform(-1.0, 1.0), std::exp(rng.uniform(-0.5, 0.5)),
                    rng.uniform(0.0, 2.0 * kPi));
      double moved = affine_length_subdivision(k.sl2_image(phi), 12).estimate;
      CHECK(moved == doctest::Approx(base).epsilon(1e-6));
    }
  }
}

TEST_CASE("orlicz affine surface areas") {
  SmoothBody2 disc = SmoothBody2::circle(1.0);
  auto cbrt_zeta = [](double t) { return std::cbrt(t); };
  CHECK(orlicz_asa(disc, cbrt_zeta, 512) == doctest::Approx(2.0 * kPi).epsilon(1e-10));

  // zeta == 1 integrates the cone measure: total 2 V_2.
  auto one = [](double) { return 1.0; };
  CHECK(orlicz_asa(disc, one, 512) == doctest::Approx(2.0 * kPi).epsilon(1e-10));
  SmoothBody2 ell = SmoothBody2::ellipse(2.0, 1.0);
  CHECK(orlicz_asa(ell, one, 1024) == doctest::Approx(2.0 * kPi * 2.0).epsilon(1e-8));

  // L_p family at p = 1 (exponent p/(p+2) = 1/3) reproduces Omega on discs.
  auto lp1 = [](double t) { return std::pow(t, 1.0 / 3.0); };
  CHECK(orlicz_asa(disc, lp1, 512) ==
        doctest::Approx(affine_surface_area_smooth(disc, 512)).epsilon(1e-10));
}

TEST_CASE("upper bound check") {
  JensenCheck disc = asa_upper_bound_check(SmoothBody2::circle(1.0));
  CHECK(disc.holds);
  CHECK(std::fabs(disc.lhs - disc.rhs) < 1e-9);

  JensenCheck ell = asa_upper_bound_check(SmoothBody2::ellipse(2.0, 1.0));
  CHECK(ell.holds);
  CHECK(ell.lhs < ell.rhs - 1e-3);

  JensenCheck thin = asa_upper_bound_check(SmoothBody2::ellipse(1.0, 0.01));
  CHECK(thin.holds);
  CHECK(thin.lhs < 0.5 * thin.rhs);
}
