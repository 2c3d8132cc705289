#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "vallab/dehn.hpp"
#include "vallab/pslq.hpp"

using namespace vallab;

namespace {

Polytope triangular_prism(double height) {
  std::vector<Vector> pts;
  std::vector<Vector> tri = {Vector{0, 0}, Vector{1.25, 0}, Vector{0.4, 0.9}};
  for (const Vector& t : tri) {
    pts.push_back(Vector{t[0], t[1], 0.0});
    pts.push_back(Vector{t[0], t[1], height});
  }
  return hull(pts);
}

}  // namespace

TEST_CASE("dihedral angles of canonical bodies") {
  auto cube_edges = dihedral_angles(Polytope::cube(3, 1.0));
  REQUIRE(cube_edges.size() == 12);
  for (const auto& [len, ang] : cube_edges) {
    CHECK(len == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ang == doctest::Approx(kPi / 2).epsilon(1e-12));
  }

  double edge = 1.7;
  auto tet_edges = dihedral_angles(Polytope::regular_tetrahedron(edge));
  REQUIRE(tet_edges.size() == 6);
  for (const auto& [len, ang] : tet_edges) {
    CHECK(len == doctest::Approx(edge).epsilon(1e-12));
    CHECK(ang == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-12));
  }

  // Prism: vertical edges carry the base triangle's interior angles, the
  // horizontal edges carry pi/2.
  auto prism_edges = dihedral_angles(triangular_prism(0.8));
  REQUIRE(prism_edges.size() == 9);
  int right_angles = 0;
  double interior_sum = 0.0;
  for (const auto& [len, ang] : prism_edges) {
    (void)len;
    if (std::fabs(ang - kPi / 2) < 1e-10)
      ++right_angles;
    else
      interior_sum += ang;
  }
  CHECK(right_angles == 6);
  CHECK(interior_sum == doctest::Approx(kPi).epsilon(1e-10));

  CHECK_THROWS_AS(dihedral_angles(Polytope::cube(2, 1.0)), Error);
}

TEST_CASE("Dehn symbols of cube and tetrahedron") {
  DehnSymbol cube = dehn_symbol(Polytope::cube(3, 1.0));
  CHECK(cube.empty());

  DehnSymbol box = dehn_symbol(Polytope::box({0, 0, 0}, {0.5, 1.5, 2.5}));
  CHECK(box.empty());

  DehnSymbol tet = dehn_symbol(Polytope::regular_tetrahedron(1.0));
  REQUIRE(tet.terms.size() == 1);
  CHECK(tet.terms[0].length == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(tet.terms[0].angle.to_double() ==
        doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-14));

  // Disjoint union: the symbol is additive.
  DehnSymbol two = symbol_sum(tet, tet);
  REQUIRE(two.terms.size() == 1);
  CHECK(two.terms[0].length == doctest::Approx(12.0));
}

TEST_CASE("symbol_equal: basic verdicts") {
  DehnSymbol cube = dehn_symbol(Polytope::cube(3, 1.0));
  DehnSymbol empty;
  empty.precision = 64;
  CHECK(symbol_equal(cube, empty).kind == RelationVerdict::Kind::Equal);

  DehnSymbol tet = dehn_symbol(Polytope::regular_tetrahedron(1.0));
  RelationVerdict v = symbol_equal(tet, cube, 10000, 64);
  CHECK(v.kind == RelationVerdict::Kind::Distinct);
  CHECK(v.residual_length == doctest::Approx(6.0).epsilon(1e-9));

  CHECK_THROWS_AS(symbol_equal(tet, cube, 10000, 16), Error);
  CHECK_THROWS_AS(symbol_equal(tet, cube, 4, 64), Error);
}

TEST_CASE("symbol_equal: exact rigid motions give Equal") {
  Rng rng(61);
  Polytope s = oracles::random_simplex(rng, 3, 1.0);
  DehnSymbol sym = dehn_symbol(s);

  // Exactly representable translation: witnesses shift without rounding.
  Polytope t = s.translate(Vector{0.5, -2.0, 0.25});
  CHECK(symbol_equal(sym, dehn_symbol(t)).kind == RelationVerdict::Kind::Equal);

  // Quarter-turn rotation has an exact matrix.
  Mat rot(3);
  rot.at(0, 1) = -1.0;
  rot.at(1, 0) = 1.0;
  rot.at(2, 2) = 1.0;
  Polytope r = s.transform(rot);
  CHECK(symbol_equal(sym, dehn_symbol(r)).kind == RelationVerdict::Kind::Equal);
}

TEST_CASE("rigid-motion invariance at double precision") {
  Rng rng(67);
  for (int rep = 0; rep < 5; ++rep) {
    Polytope s = oracles::random_simplex(rng, 3, 1.0);
    DehnSymbol sym = dehn_symbol(s);
    Vector axis{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Mat rot = Mat::rotation3(axis, rng.uniform(0.0, 2.0 * kPi));
    Polytope moved = s.transform(rot).translate(Vector{0.3, 0.1, -0.7});
    DehnSymbol sym2 = dehn_symbol(moved);
    CHECK(symbols_match(sym, sym2, 1e-10, 1e-9));
  }
}

TEST_CASE("symbol_equal reduces synthetically related angles") {
  int frac = BigFixed::frac_limbs_for_digits(64);
  BigFixed alpha = BigFixed::acos(BigFixed::from_int64(1, frac).div_uint(3));
  BigFixed beta = alpha.div_uint(2);

  DehnSymbol a, b;
  a.precision = b.precision = 64;
  a.terms.push_back({1.0, alpha});

  // b carries 2 * beta = alpha in zeta-weight: symbols agree.
  b.terms.push_back({2.0, beta});
  CHECK(symbol_equal(a, b, 10000, 64).kind == RelationVerdict::Kind::Equal);

  // Flipping the sign makes them genuinely different.
  DehnSymbol c;
  c.precision = 64;
  c.terms.push_back({-2.0, beta});
  RelationVerdict v = symbol_equal(a, c, 10000, 64);
  CHECK(v.kind == RelationVerdict::Kind::Distinct);
  CHECK(v.residual_length == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("split additivity of Dehn symbols") {
  Rng rng(71);
  int checked = 0;
  while (checked < 6) {
    Polytope p = (checked % 2 == 0) ? oracles::random_simplex(rng, 3, 1.0)
                                    : Polytope::box({-0.6, -0.8, -0.5}, {0.7, 0.4, 0.9});
    double a = rng.uniform(0.0, 2.0 * kPi);
    double z = rng.uniform(-0.9, 0.9);
    Vector nrm{std::cos(a) * std::sqrt(1 - z * z), std::sin(a) * std::sqrt(1 - z * z), z};
    SplitResult sr = split_by_hyperplane(p, Hyperplane(nrm, rng.uniform(-0.1, 0.1)));
    if (sr.plus.is_empty() || sr.minus.is_empty()) continue;
    if (sr.plus.affine_dim() < 3 || sr.minus.affine_dim() < 3) continue;
    DehnSymbol sum = symbol_sum(dehn_symbol(sr.plus), dehn_symbol(sr.minus));
    RelationVerdict v = symbol_equal(sum, dehn_symbol(p));
    CHECK(v.kind == RelationVerdict::Kind::Equal);
    ++checked;
  }
}

TEST_CASE("verdicts are monotone in the height bound") {
  DehnSymbol cube = dehn_symbol(Polytope::cube(3, 1.0));
  DehnSymbol tet = dehn_symbol(Polytope::regular_tetrahedron(1.0));
  DehnSymbol box = dehn_symbol(Polytope::box({0, 0, 0}, {2, 0.5, 1}));
  for (long long h : {1000LL, 10000LL, 100000LL}) {
    CHECK(symbol_equal(tet, cube, h, 64).kind == RelationVerdict::Kind::Distinct);
    CHECK(symbol_equal(cube, box, h, 64).kind == RelationVerdict::Kind::Equal);
  }
}

TEST_CASE("relation detection on algebraic instances") {
  int frac = BigFixed::frac_limbs_for_digits(64);
  BigFixed eps = BigFixed::pow10_neg(50, frac);
  BigFixed one = BigFixed::from_int64(1, frac);
  BigFixed s2 = BigFixed::sqrt(BigFixed::from_int64(2, frac));
  BigFixed s3 = BigFixed::sqrt(BigFixed::from_int64(3, frac));

  // Four-term exact relation (0, 1, 1, -1).
  RelationSearch r = pslq_search({one, s2, s3, s2 + s3}, 1e4, eps);
  REQUIRE(r.status == RelationSearch::Status::RelationFound);
  long long c1 = r.relation[1], c2 = r.relation[2], c3 = r.relation[3];
  CHECK(r.relation[0] == 0);
  CHECK(c1 == c2);
  CHECK(c3 == -c1);

  // Cube root of 2 via Newton on x^3 = 2: no relation of height 1e4 among
  // 1, x, x^2.
  BigFixed x = BigFixed::from_double(std::cbrt(2.0), frac);
  for (int i = 0; i < 8; ++i) {
    BigFixed x2 = x * x;
    x = x - (x * x2 - BigFixed::from_int64(2, frac)) / (x2.mul_int(3));
  }
  RelationSearch r2 = pslq_search({one, x, x * x}, 1e4, eps);
  CHECK(r2.status == RelationSearch::Status::NoRelationUnderBound);
  CHECK(r2.certified_norm_bound > 1e4);
}

TEST_CASE("hilbert3 report") {
  Hilbert3Report rep = hilbert3_report(1e-12);
  CHECK(std::fabs(rep.cube_volume - rep.tetra_volume) <= 1e-12);
  CHECK(rep.cube_symbol.empty());
  CHECK(rep.verdict.kind == RelationVerdict::Kind::Distinct);

  // Scaled instance: angles unchanged, still distinct.
  Polytope cube2 = Polytope::cube(3, 2.0);
  double edge = 2.0 * std::cbrt(6.0 * std::sqrt(2.0));
  Polytope tet2 = Polytope::regular_tetrahedron(edge);
  CHECK(volume(cube2) == doctest::Approx(volume(tet2)).epsilon(1e-12));
  RelationVerdict v = symbol_equal(dehn_symbol(tet2), dehn_symbol(cube2));
  CHECK(v.kind == RelationVerdict::Kind::Distinct);

  // Cube against a box of the same volume: all angles are pi/2.
  Polytope box = Polytope::box({0, 0, 0}, {2, 1, 0.5});
  RelationVerdict v2 = symbol_equal(dehn_symbol(Polytope::cube(3, 1.0)), dehn_symbol(box));
  CHECK(v2.kind == RelationVerdict::Kind::Equal);
}
