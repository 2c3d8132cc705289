#include "vallab/dehn.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vallab/pslq.hpp"

namespace vallab {

namespace {

struct EdgeFacets {
  const Facet* f1 = nullptr;
  const Facet* f2 = nullptr;
};

std::map<std::pair<int, int>, EdgeFacets> edge_facet_map(const Polytope& p) {
  std::map<std::pair<int, int>, EdgeFacets> m;
  for (const Facet& f : p.facets()) {
    for (size_t i = 0; i < f.vertices.size(); ++i) {
      int a = f.vertices[i];
      int b = f.vertices[(i + 1) % f.vertices.size()];
      EdgeFacets& ef = m[std::minmax(a, b)];
      if (!ef.f1)
        ef.f1 = &f;
      else
        ef.f2 = &f;
    }
  }
  for (const auto& [e, ef] : m) {
    (void)e;
    if (!ef.f2)
      fail(ErrorCode::MissingFacets, "edge not shared by two facets");
  }
  return m;
}

void require_3d(const Polytope& p) {
  if (p.dim() != 3 || p.affine_dim() != 3)
    fail(ErrorCode::NotFullDimensional, "need a full-dimensional 3-polytope");
  if (!p.has_facets()) fail(ErrorCode::MissingFacets, "H-representation missing");
}

struct BigVec3 {
  BigFixed x, y, z;
};

BigVec3 big_sub(const Vector& a, const Vector& b, int frac) {
  return {BigFixed::from_double(a[0], frac) - BigFixed::from_double(b[0], frac),
          BigFixed::from_double(a[1], frac) - BigFixed::from_double(b[1], frac),
          BigFixed::from_double(a[2], frac) - BigFixed::from_double(b[2], frac)};
}

BigVec3 big_cross(const BigVec3& a, const BigVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BigFixed big_dot(const BigVec3& a, const BigVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Outward facet normal from the stored plane witness, in extended precision.
// The witness points are exact doubles, so two facets sharing a plane witness
// produce bit-identical normals.
BigVec3 witness_normal(const Facet& f, int frac) {
  BigVec3 u = big_sub(f.witness[1], f.witness[0], frac);
  BigVec3 v = big_sub(f.witness[2], f.witness[0], frac);
  BigVec3 n = big_cross(u, v);
  if (f.witness_flipped) {
    n.x = -n.x;
    n.y = -n.y;
    n.z = -n.z;
  }
  return n;
}

BigFixed dihedral_exact(const Facet& f1, const Facet& f2, int frac) {
  BigVec3 n1 = witness_normal(f1, frac);
  BigVec3 n2 = witness_normal(f2, frac);
  BigFixed c = big_dot(n1, n2) /
               (BigFixed::sqrt(big_dot(n1, n1)) * BigFixed::sqrt(big_dot(n2, n2)));
  // Clamp against representation drift just outside [-1, 1].
  BigFixed one = BigFixed::from_int64(1, frac);
  if (BigFixed::compare(c, one) > 0) c = one;
  if (BigFixed::compare(c, -one) < 0) c = -one;
  return BigFixed::pi(frac) - BigFixed::acos(c);
}

void merge_terms(DehnSymbol& s) {
  if (s.terms.empty()) return;
  int frac = s.terms[0].angle.frac();
  BigFixed tol = BigFixed::pow10_neg(std::max(1, s.precision - 4), frac);
  std::sort(s.terms.begin(), s.terms.end(), [](const DehnTerm& a, const DehnTerm& b) {
    return BigFixed::compare(a.angle, b.angle) < 0;
  });
  std::vector<DehnTerm> merged;
  for (const DehnTerm& t : s.terms) {
    if (!merged.empty() &&
        BigFixed::compare((t.angle - merged.back().angle).abs(), tol) <= 0) {
      merged.back().length += t.length;
    } else {
      merged.push_back(t);
    }
  }
  s.terms = std::move(merged);
}

void drop_pi_rationals(DehnSymbol& s, long long height_bound) {
  if (s.terms.empty()) return;
  int frac = s.terms[0].angle.frac();
  BigFixed pi = BigFixed::pi(frac);
  BigFixed eps = BigFixed::pow10_neg(std::max(16, s.precision - 8), frac);
  std::vector<DehnTerm> kept;
  for (DehnTerm& t : s.terms) {
    RelationSearch r =
        ratio_relation(t.angle, pi, static_cast<double>(height_bound), eps);
    if (r.status != RelationSearch::Status::RelationFound) kept.push_back(std::move(t));
  }
  s.terms = std::move(kept);
}

void drop_zero_lengths(DehnSymbol& s, double len_tol, double* max_dropped) {
  std::vector<DehnTerm> kept;
  for (DehnTerm& t : s.terms) {
    if (std::fabs(t.length) <= len_tol) {
      if (max_dropped) *max_dropped = std::max(*max_dropped, std::fabs(t.length));
      continue;
    }
    kept.push_back(std::move(t));
  }
  s.terms = std::move(kept);
}

}  // namespace

std::vector<std::pair<double, double>> dihedral_angles(const Polytope& p) {
  require_3d(p);
  auto m = edge_facet_map(p);
  std::vector<std::pair<double, double>> out;
  for (const auto& [e, ef] : m) {
    double len = dist(p.vertices()[static_cast<size_t>(e.first)],
                      p.vertices()[static_cast<size_t>(e.second)]);
    double c = std::clamp(dot(ef.f1->plane.normal, ef.f2->plane.normal), -1.0, 1.0);
    out.push_back({len, kPi - std::acos(c)});
  }
  return out;
}

DehnSymbol dehn_symbol(const Polytope& p, int precision) {
  require_3d(p);
  DehnSymbol s;
  s.precision = precision;
  int frac = BigFixed::frac_limbs_for_digits(precision);
  auto m = edge_facet_map(p);
  for (const auto& [e, ef] : m) {
    DehnTerm t;
    t.length = dist(p.vertices()[static_cast<size_t>(e.first)],
                    p.vertices()[static_cast<size_t>(e.second)]);
    t.angle = dihedral_exact(*ef.f1, *ef.f2, frac);
    s.terms.push_back(std::move(t));
  }
  merge_terms(s);
  drop_pi_rationals(s, 10000);
  return s;
}

DehnSymbol symbol_sum(const DehnSymbol& a, const DehnSymbol& b) {
  DehnSymbol s;
  s.precision = std::min(a.precision, b.precision);
  s.terms = a.terms;
  s.terms.insert(s.terms.end(), b.terms.begin(), b.terms.end());
  merge_terms(s);
  return s;
}

DehnSymbol symbol_negate(const DehnSymbol& a) {
  DehnSymbol s = a;
  for (DehnTerm& t : s.terms) t.length = -t.length;
  return s;
}

bool symbols_match(const DehnSymbol& a, const DehnSymbol& b, double angle_tol,
                   double length_tol) {
  if (a.terms.size() != b.terms.size()) return false;
  // Both symbols are angle-sorted after canonicalization.
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (std::fabs(a.terms[i].angle.to_double() - b.terms[i].angle.to_double()) >
        angle_tol)
      return false;
    if (std::fabs(a.terms[i].length - b.terms[i].length) > length_tol)
      return false;
  }
  return true;
}

RelationVerdict symbol_equal(const DehnSymbol& a, const DehnSymbol& b,
                             long long height_bound, int precision) {
  if (precision < 32)
    fail(ErrorCode::PrecisionTooLow, "symbol_equal needs >= 32 digits");
  if (height_bound < 10)
    fail(ErrorCode::ValidationError, "height_bound must be >= 10");
  if (precision > std::min(a.precision, b.precision))
    fail(ErrorCode::PrecisionTooLow,
         "symbols carry fewer digits than the requested search precision");

  RelationVerdict v;
  v.height_bound = height_bound;

  DehnSymbol diff = symbol_sum(a, symbol_negate(b));
  diff.precision = precision;

  double scale = 1.0;
  for (const DehnTerm& t : diff.terms) scale = std::max(scale, std::fabs(t.length));
  double len_tol = 1e-9 * scale;
  double dropped = 0.0;

  if (diff.terms.empty()) {
    v.kind = RelationVerdict::Kind::Equal;
    return v;
  }
  int frac = diff.terms[0].angle.frac();
  BigFixed pi = BigFixed::pi(frac);
  BigFixed eps = BigFixed::pow10_neg(std::max(16, precision - 8), frac);

  // Apply one relation c over the basis [pi, theta_1..theta_k]: eliminate the
  // angle with the largest coefficient (zeta(pi) = 0 drops the pi column).
  auto apply_relation = [&](const std::vector<long long>& c) {
    size_t pivot = 1;
    for (size_t j = 2; j < c.size(); ++j)
      if (std::llabs(c[j]) > std::llabs(c[pivot])) pivot = j;
    double cp = static_cast<double>(c[pivot]);
    double plen = diff.terms[pivot - 1].length;
    for (size_t i = 1; i < c.size(); ++i) {
      if (i == pivot || c[i] == 0) continue;
      diff.terms[i - 1].length -= plen * static_cast<double>(c[i]) / cp;
    }
    diff.terms.erase(diff.terms.begin() + static_cast<long>(pivot - 1));
    v.certificate.push_back(c);
  };

  for (int round = 0; round < 256; ++round) {
    merge_terms(diff);
    drop_zero_lengths(diff, len_tol, &dropped);
    if (diff.terms.empty()) {
      v.kind = RelationVerdict::Kind::Equal;
      v.residual_length = dropped;
      return v;
    }
    size_t k = diff.terms.size();

    // Complementary pairs theta_i + theta_j = pi (height-1 relations).
    bool reduced = false;
    for (size_t i = 0; i < k && !reduced; ++i) {
      for (size_t j = i + 1; j < k && !reduced; ++j) {
        BigFixed res = diff.terms[i].angle + diff.terms[j].angle - pi;
        if (BigFixed::compare(res.abs(), eps) <= 0) {
          std::vector<long long> c(k + 1, 0);
          c[0] = -1;
          c[i + 1] = 1;
          c[j + 1] = 1;
          apply_relation(c);
          reduced = true;
        }
      }
    }
    if (reduced) continue;

    // Rational multiples of pi (continued fractions; complete for 2 terms).
    for (size_t i = 0; i < k && !reduced; ++i) {
      RelationSearch r = ratio_relation(diff.terms[i].angle, pi,
                                        static_cast<double>(height_bound), eps);
      if (r.status == RelationSearch::Status::RelationFound) {
        // q * theta - p * pi = 0: eliminate theta_i.
        std::vector<long long> c(k + 1, 0);
        c[0] = r.relation[1];
        c[i + 1] = r.relation[0];
        apply_relation(c);
        reduced = true;
      } else if (r.status == RelationSearch::Status::Exhausted) {
        v.kind = RelationVerdict::Kind::Unknown;
        v.note = "continued fraction search exhausted";
        return v;
      }
    }
    if (reduced) continue;

    if (k == 1) {
      // Single surviving angle, already certified pi-independent up to the
      // height bound.
      v.kind = RelationVerdict::Kind::Distinct;
      v.residual_length = std::fabs(diff.terms[0].length);
      return v;
    }

    std::vector<BigFixed> basis;
    basis.push_back(pi);
    for (const DehnTerm& t : diff.terms) basis.push_back(t.angle);
    RelationSearch r =
        pslq_search(basis, static_cast<double>(height_bound), eps);
    if (r.status == RelationSearch::Status::RelationFound) {
      // The pi coefficient may be the only large one; make sure some angle
      // coefficient is nonzero (otherwise the relation is vacuous).
      bool has_angle = false;
      for (size_t j = 1; j < r.relation.size(); ++j)
        if (r.relation[j] != 0) has_angle = true;
      if (!has_angle) {
        v.kind = RelationVerdict::Kind::Unknown;
        v.note = "degenerate relation on pi alone";
        return v;
      }
      apply_relation(r.relation);
      continue;
    }
    if (r.status == RelationSearch::Status::NoRelationUnderBound) {
      v.kind = RelationVerdict::Kind::Distinct;
      for (const DehnTerm& t : diff.terms)
        v.residual_length = std::max(v.residual_length, std::fabs(t.length));
      return v;
    }
    v.kind = RelationVerdict::Kind::Unknown;
    v.note = "relation search exhausted";
    return v;
  }
  v.kind = RelationVerdict::Kind::Unknown;
  v.note = "reduction did not converge";
  return v;
}

Hilbert3Report hilbert3_report(double volume_tol) {
  Hilbert3Report rep;
  Polytope cube = Polytope::cube(3, 1.0);
  double edge = std::cbrt(6.0 * std::sqrt(2.0));
  Polytope tetra = Polytope::regular_tetrahedron(edge);
  rep.cube_volume = volume(cube);
  rep.tetra_volume = volume(tetra);
  if (std::fabs(rep.cube_volume - rep.tetra_volume) > volume_tol)
    fail(ErrorCode::ValidationError, "volume match outside tolerance");
  rep.cube_symbol = dehn_symbol(cube);
  rep.tetra_symbol = dehn_symbol(tetra);
  rep.verdict = symbol_equal(rep.tetra_symbol, rep.cube_symbol, 10000, 64);
  return rep;
}

}  // namespace vallab
