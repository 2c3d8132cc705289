#include "vallab/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vallab {

namespace {

double facet_measure(const Polytope& p, const Facet& f) {
  int n = p.dim();
  const std::vector<Vector>& v = p.vertices();
  if (n == 1) return 1.0;
  if (n == 2) {
    return dist(v[static_cast<size_t>(f.vertices[0])],
                v[static_cast<size_t>(f.vertices[1])]);
  }
  // n == 3: polygon area by the fan in the facet plane.
  KahanSum area;
  const Vector& a = v[static_cast<size_t>(f.vertices[0])];
  for (size_t i = 1; i + 1 < f.vertices.size(); ++i) {
    const Vector& b = v[static_cast<size_t>(f.vertices[i])];
    const Vector& c = v[static_cast<size_t>(f.vertices[i + 1])];
    area.add(0.5 * norm(cross3(b - a, c - a)));
  }
  return area.value();
}

double perimeter2(const Polytope& p) {
  double s = 0.0;
  for (const auto& e : p.edges())
    s += dist(p.vertices()[static_cast<size_t>(e.first)],
              p.vertices()[static_cast<size_t>(e.second)]);
  return s;
}

// Dihedral angle of a full-dimensional 3-polytope at an edge, from the two
// adjacent facet normals: alpha = pi - angle(n1, n2).
std::map<std::pair<int, int>, double> dihedral_map(const Polytope& p) {
  std::map<std::pair<int, int>, std::vector<const Facet*>> incident;
  for (const Facet& f : p.facets()) {
    for (size_t i = 0; i < f.vertices.size(); ++i) {
      int a = f.vertices[i];
      int b = f.vertices[(i + 1) % f.vertices.size()];
      incident[std::minmax(a, b)].push_back(&f);
    }
  }
  std::map<std::pair<int, int>, double> angles;
  for (const auto& [e, fs] : incident) {
    if (fs.size() != 2)
      fail(ErrorCode::MissingFacets, "edge not shared by exactly two facets");
    double c = dot(fs[0]->plane.normal, fs[1]->plane.normal);
    c = std::clamp(c, -1.0, 1.0);
    angles[e] = kPi - std::acos(c);
  }
  return angles;
}

bool detect_box(const Polytope& p, std::vector<double>* sides) {
  int n = p.dim();
  const auto& v = p.vertices();
  if (v.size() != (1u << n)) return false;
  std::vector<double> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    lo[static_cast<size_t>(i)] = hi[static_cast<size_t>(i)] = v[0][i];
    for (const Vector& w : v) {
      lo[static_cast<size_t>(i)] = std::min(lo[static_cast<size_t>(i)], w[i]);
      hi[static_cast<size_t>(i)] = std::max(hi[static_cast<size_t>(i)], w[i]);
    }
  }
  for (const Vector& w : v)
    for (int i = 0; i < n; ++i)
      if (std::fabs(w[i] - lo[static_cast<size_t>(i)]) > kDedupEps &&
          std::fabs(w[i] - hi[static_cast<size_t>(i)]) > kDedupEps)
        return false;
  if (sides) {
    sides->clear();
    for (int i = 0; i < n; ++i)
      sides->push_back(hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)]);
  }
  return true;
}

std::vector<double> elementary_symmetric(const std::vector<double>& s) {
  std::vector<double> e(s.size() + 1, 0.0);
  e[0] = 1.0;
  for (double x : s) {
    for (size_t j = e.size(); j-- > 1;) e[j] += x * e[j - 1];
  }
  return e;
}

// --- simplex external angles ------------------------------------------------

struct SimplexAngles {
  const std::vector<Vector>& verts;  // n+1 vertices
  int n;

  // Outward unit normal of the facet omitting vertex `skip`.
  Vector facet_normal(int skip) const {
    std::vector<Vector> pts;
    for (int i = 0; i <= n; ++i)
      if (i != skip) pts.push_back(verts[static_cast<size_t>(i)]);
    std::vector<Vector> basis;
    for (size_t i = 1; i < pts.size(); ++i) {
      Vector w = pts[i] - pts[0];
      for (const Vector& b : basis) w -= dot(w, b) * b;
      double nn = norm(w);
      if (nn > 1e-12) basis.push_back((1.0 / nn) * w);
    }
    Vector d = verts[static_cast<size_t>(skip)] - pts[0];
    for (const Vector& b : basis) d -= dot(d, b) * b;
    return normalized(-1.0 * d);
  }

  // j-dimensional volume of the face spanned by `face` (vertex indices).
  double face_volume(const std::vector<int>& face) const {
    int j = static_cast<int>(face.size()) - 1;
    if (j == 0) return 1.0;
    std::vector<std::vector<double>> g(static_cast<size_t>(j),
                                       std::vector<double>(static_cast<size_t>(j)));
    std::vector<Vector> ed;
    for (int i = 1; i <= j; ++i)
      ed.push_back(verts[static_cast<size_t>(face[static_cast<size_t>(i)])] -
                   verts[static_cast<size_t>(face[0])]);
    for (int a = 0; a < j; ++a)
      for (int b = 0; b < j; ++b)
        g[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            dot(ed[static_cast<size_t>(a)], ed[static_cast<size_t>(b)]);
    // Gram determinant via Cholesky-free elimination.
    double det = 1.0;
    for (int c = 0; c < j; ++c) {
      int piv = c;
      for (int r = c + 1; r < j; ++r)
        if (std::fabs(g[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
            std::fabs(g[static_cast<size_t>(piv)][static_cast<size_t>(c)]))
          piv = r;
      if (std::fabs(g[static_cast<size_t>(piv)][static_cast<size_t>(c)]) < 1e-18)
        return 0.0;
      if (piv != c) {
        std::swap(g[static_cast<size_t>(piv)], g[static_cast<size_t>(c)]);
        det = -det;
      }
      det *= g[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int r = c + 1; r < j; ++r) {
        double f = g[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                   g[static_cast<size_t>(c)][static_cast<size_t>(c)];
        for (int cc = c; cc < j; ++cc)
          g[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
              f * g[static_cast<size_t>(c)][static_cast<size_t>(cc)];
      }
    }
    double jf = 1.0;
    for (int i = 2; i <= j; ++i) jf *= i;
    return std::sqrt(std::fabs(det)) / jf;
  }

  // External angle of the face: closed forms through codimension 3, seeded
  // Gaussian estimate beyond.
  double external_angle(const std::vector<int>& face, Rng& rng) const {
    int j = static_cast<int>(face.size()) - 1;
    int codim = n - j;
    if (codim == 0) return 1.0;
    std::vector<int> missing;
    for (int i = 0; i <= n; ++i)
      if (std::find(face.begin(), face.end(), i) == face.end())
        missing.push_back(i);
    std::vector<Vector> normals;
    for (int s : missing) normals.push_back(facet_normal(s));
    if (codim == 1) return 0.5;
    if (codim == 2) {
      double c = std::clamp(dot(normals[0], normals[1]), -1.0, 1.0);
      return std::acos(c) / (2.0 * kPi);
    }
    if (codim == 3) {
      // Girard: spherical triangle of the three normals.
      auto arc = [&](int a, int b) {
        return std::acos(std::clamp(dot(normals[static_cast<size_t>(a)],
                                        normals[static_cast<size_t>(b)]),
                                    -1.0, 1.0));
      };
      double a = arc(1, 2), b = arc(0, 2), c = arc(0, 1);
      auto ang = [&](double opp, double s1, double s2) {
        double num = std::cos(opp) - std::cos(s1) * std::cos(s2);
        double den = std::sin(s1) * std::sin(s2);
        return std::acos(std::clamp(num / den, -1.0, 1.0));
      };
      double excess = ang(a, b, c) + ang(b, a, c) + ang(c, a, b) - kPi;
      return excess / (4.0 * kPi);
    }
    // Monte Carlo over the orthogonal complement of aff(face).
    std::vector<Vector> basis;
    Vector origin = verts[static_cast<size_t>(face[0])];
    std::vector<Vector> span;
    for (size_t i = 1; i < face.size(); ++i)
      span.push_back(verts[static_cast<size_t>(face[static_cast<size_t>(i)])] - origin);
    std::vector<Vector> ortho;
    for (Vector v : span) {
      for (const Vector& b : ortho) v -= dot(v, b) * b;
      double nn = norm(v);
      if (nn > 1e-12) ortho.push_back((1.0 / nn) * v);
    }
    for (int axis = 0; axis < n && static_cast<int>(basis.size()) < codim; ++axis) {
      Vector e(n);
      e[axis] = 1.0;
      for (const Vector& b : ortho) e -= dot(e, b) * b;
      for (const Vector& b : basis) e -= dot(e, b) * b;
      double nn = norm(e);
      if (nn > 1e-9) basis.push_back((1.0 / nn) * e);
    }
    const int kSamples = 100000;
    int hits = 0;
    for (int s = 0; s < kSamples; ++s) {
      Vector g(n);
      for (const Vector& b : basis) g += rng.next_normal() * b;
      double at_face = dot(g, origin);
      bool inside = true;
      for (int i = 0; i <= n && inside; ++i) {
        if (std::find(face.begin(), face.end(), i) != face.end()) continue;
        if (dot(g, verts[static_cast<size_t>(i)]) > at_face + 1e-12) inside = false;
      }
      if (inside) ++hits;
    }
    return static_cast<double>(hits) / kSamples;
  }
};

void enumerate_faces(int n_verts, int size, std::vector<int>& cur, int start,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == size) {
    emit(cur);
    return;
  }
  for (int i = start; i < n_verts; ++i) {
    cur.push_back(i);
    enumerate_faces(n_verts, size, cur, i + 1, emit);
    cur.pop_back();
  }
}

IntrinsicVector simplex_intrinsics(const Polytope& p) {
  int n = p.dim();
  SimplexAngles sa{p.vertices(), n};
  IntrinsicVector out;
  out.dim = n;
  out.values.assign(static_cast<size_t>(n) + 1, 0.0);
  out.values[0] = 1.0;
  Rng rng(0x5eedULL + static_cast<uint64_t>(n));
  for (int j = 1; j <= n; ++j) {
    KahanSum sum;
    std::vector<int> cur;
    enumerate_faces(n + 1, j + 1, cur, 0, [&](const std::vector<int>& face) {
      double gamma = sa.external_angle(face, rng);
      if (gamma > 0.0) sum.add(sa.face_volume(face) * gamma);
    });
    out.values[static_cast<size_t>(j)] = sum.value();
  }
  return out;
}

IntrinsicVector full_dim_intrinsics(const Polytope& p) {
  int n = p.dim();
  IntrinsicVector out;
  out.dim = n;
  out.values.assign(static_cast<size_t>(n) + 1, 0.0);
  out.values[0] = 1.0;
  if (n == 1) {
    out.values[1] = volume(p);
    return out;
  }
  if (n == 2) {
    out.values[1] = 0.5 * perimeter2(p);
    out.values[2] = volume(p);
    return out;
  }
  if (n == 3) {
    double surface = 0.0;
    for (const Facet& f : p.facets()) surface += facet_measure(p, f);
    KahanSum v1;
    auto angles = dihedral_map(p);
    for (const auto& [e, alpha] : angles) {
      double len = dist(p.vertices()[static_cast<size_t>(e.first)],
                        p.vertices()[static_cast<size_t>(e.second)]);
      v1.add(len * (kPi - alpha) / (2.0 * kPi));
    }
    out.values[1] = v1.value();
    out.values[2] = 0.5 * surface;
    out.values[3] = volume(p);
    return out;
  }
  if (n > 6) fail(ErrorCode::Unsupported, "intrinsic volumes for n <= 6");
  std::vector<double> sides;
  if (detect_box(p, &sides)) {
    std::vector<double> e = elementary_symmetric(sides);
    out.values = e;
    out.dim = n;
    return out;
  }
  if (static_cast<int>(p.vertices().size()) == n + 1) return simplex_intrinsics(p);
  fail(ErrorCode::Unsupported,
       "intrinsic volumes in n > 3 support boxes and simplices only");
}

}  // namespace

IntrinsicVector intrinsic_volumes(const Polytope& p) {
  int n = p.dim();
  IntrinsicVector out;
  out.dim = n;
  out.values.assign(static_cast<size_t>(n) + 1, 0.0);
  if (p.is_empty()) return out;  // all zero for the empty body

  int ad = p.affine_dim();
  if (ad == n) return full_dim_intrinsics(p);

  // Lower-dimensional body: compute in an affine chart and pad with zeros;
  // intrinsic volumes do not depend on the ambient space.
  out.values[0] = 1.0;
  if (ad == 0) return out;
  double tol = 1e-9 * (1.0 + p.circumradius());
  std::vector<Vector> basis;
  {
    const auto& verts = p.vertices();
    for (size_t i = 1; i < verts.size(); ++i) {
      Vector v = verts[i] - verts[0];
      for (const Vector& b : basis) v -= dot(v, b) * b;
      double nn = norm(v);
      if (nn > tol) basis.push_back((1.0 / nn) * v);
    }
  }
  std::vector<Vector> chart;
  for (const Vector& v : p.vertices()) {
    Vector c(static_cast<int>(basis.size()));
    Vector d = v - p.vertices()[0];
    for (size_t i = 0; i < basis.size(); ++i) c[static_cast<int>(i)] = dot(d, basis[i]);
    chart.push_back(c);
  }
  IntrinsicVector inner = intrinsic_volumes(hull(chart));
  for (int j = 0; j <= ad; ++j) out.values[static_cast<size_t>(j)] = inner[j];
  return out;
}

double steiner_volume(const Polytope& p, double r) {
  if (r < 0.0) fail(ErrorCode::NegativeRadius, "steiner_volume: r < 0");
  IntrinsicVector iv = intrinsic_volumes(p);
  int n = p.dim();
  KappaTable kappa(n);
  KahanSum s;
  for (int j = 0; j <= n; ++j)
    s.add(std::pow(r, n - j) * kappa[n - j] * iv[j]);
  return s.value();
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

std::vector<double> homogeneous_components(const BodyValuation& z,
                                           const Polytope& p) {
  int n = p.dim();
  if (n > 8)
    fail(ErrorCode::SingularSystem,
         "Vandermonde extraction is numerically unreliable beyond n = 8");
  double z0 = z(Polytope::point(Vector(n)));
  std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n)));
  std::vector<double> rhs(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) {
    rhs[static_cast<size_t>(m - 1)] = z(p.scale(m)) - z0;
    for (int j = 1; j <= n; ++j)
      a[static_cast<size_t>(m - 1)][static_cast<size_t>(j - 1)] =
          std::pow(static_cast<double>(m), j);
  }
  std::vector<double> sol = solve_linear(std::move(a), std::move(rhs));
  std::vector<double> out;
  out.push_back(z0);
  for (double c : sol) out.push_back(c);
  return out;
}

std::vector<DecompositionPiece> canonical_simplex_decomposition(
    const Polytope& simplex, double t) {
  int n = simplex.dim();
  const auto& pv = simplex.vertices();
  if (static_cast<int>(pv.size()) != n + 1 || simplex.affine_dim() != n)
    fail(ErrorCode::DegenerateSimplex,
         "canonical decomposition needs a nondegenerate simplex");
  if (!(t > 0.0 && t < 1.0))
    fail(ErrorCode::ValidationError, "t must lie in (0,1)");
  if (n > 3)
    fail(ErrorCode::Unsupported, "decomposition pieces are built for n <= 3");
  std::vector<DecompositionPiece> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<Vector> pts;
    for (int i = 0; i <= k; ++i)
      for (int j = k; j <= n; ++j)
        pts.push_back((1.0 - t) * pv[static_cast<size_t>(i)] +
                      t * pv[static_cast<size_t>(j)]);
    DecompositionPiece piece;
    piece.body = hull(pts);
    piece.multiplicity = 1;
    piece.label = "Q_" + std::to_string(k);
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<DecompositionPiece> cylinder_decomposition(const Polytope& simplex,
                                                       int m) {
  int n = simplex.dim();
  const auto& pv = simplex.vertices();
  if (static_cast<int>(pv.size()) != n + 1 || simplex.affine_dim() != n)
    fail(ErrorCode::DegenerateSimplex, "cylinder decomposition needs a simplex");
  if (m < 1) fail(ErrorCode::ValidationError, "m must be >= 1");
  if (n > 3 || m > 6)
    fail(ErrorCode::Unsupported, "cylinder decomposition for n <= 3, m <= 6");

  // Vertex set of the segment-chain summand S_{ab}: the points p_r - p_{a-1}
  // for r = a..b (p_{-1} := 0).
  auto summand_vertices = [&](int a, int b) {
    std::vector<Vector> vs;
    Vector base = a == 0 ? Vector(n) : pv[static_cast<size_t>(a - 1)];
    for (int r = a; r <= b; ++r) vs.push_back(pv[static_cast<size_t>(r)] - base);
    return vs;
  };

  std::vector<DecompositionPiece> out;
  // Chains 0 = j_0 < j_1 < ... < j_l = n.
  std::vector<int> chain{0};
  std::function<void()> rec = [&]() {
    if (chain.back() == n) {
      int l = static_cast<int>(chain.size()) - 1;
      std::vector<Vector> pts{Vector(n)};
      for (int i = 0; i + 1 < static_cast<int>(chain.size()); ++i) {
        std::vector<Vector> sv = summand_vertices(chain[static_cast<size_t>(i)],
                                                  chain[static_cast<size_t>(i) + 1]);
        std::vector<Vector> next;
        for (const Vector& acc : pts)
          for (const Vector& w : sv) next.push_back(acc + w);
        pts = std::move(next);
      }
      DecompositionPiece piece;
      piece.body = hull(pts);
      piece.multiplicity = static_cast<long long>(binomial(m, l));
      piece.label = "T_" + std::to_string(l) + "(";
      for (size_t i = 1; i < chain.size(); ++i) {
        piece.label += std::to_string(chain[i]);
        piece.label += (i + 1 < chain.size() ? "," : ")");
      }
      if (piece.multiplicity > 0) out.push_back(std::move(piece));
      return;
    }
    for (int next = chain.back() + 1; next <= n; ++next) {
      chain.push_back(next);
      rec();
      chain.pop_back();
    }
  };
  rec();
  return out;
}

double facet_valuation(const Polytope& p,
                       const std::function<double(const Vector&)>& zeta) {
  if (p.is_empty()) return 0.0;
  if (!p.has_facets() || p.affine_dim() != p.dim())
    fail(ErrorCode::MissingFacets, "facet_valuation needs the H-representation");
  KahanSum s;
  for (const Facet& f : p.facets())
    s.add(zeta(f.plane.normal) * facet_measure(p, f));
  return s.value();
}

namespace {

struct Polygon2 {
  std::vector<Vector> cyc;  // CCW cycle
  std::vector<Vector> axes; // edge normals (unit) and degenerate tangents
};

Polygon2 make_polygon2(const Polytope& p) {
  Polygon2 g;
  const auto& v = p.vertices();
  Vector c(2);
  for (const Vector& w : v) c += (1.0 / v.size()) * w;
  std::vector<std::pair<double, size_t>> ang;
  for (size_t i = 0; i < v.size(); ++i)
    ang.push_back({std::atan2(v[i][1] - c[1], v[i][0] - c[0]), i});
  std::sort(ang.begin(), ang.end());
  for (const auto& a : ang) g.cyc.push_back(v[a.second]);
  for (size_t i = 0; i < g.cyc.size(); ++i) {
    Vector e = g.cyc[(i + 1) % g.cyc.size()] - g.cyc[i];
    double nn = norm(e);
    if (nn > 1e-14) {
      g.axes.push_back(Vector{e[1] / nn, -e[0] / nn});
      if (g.cyc.size() <= 2) g.axes.push_back(Vector{e[0] / nn, e[1] / nn});
    }
  }
  if (g.axes.empty()) g.axes.push_back(Vector{1.0, 0.0});
  return g;
}

bool separated_on(const std::vector<Vector>& a, const std::vector<Vector>& b,
                  const Vector& axis) {
  double amin = kInf, amax = -kInf, bmin = kInf, bmax = -kInf;
  for (const Vector& p : a) {
    double d = dot(p, axis);
    amin = std::min(amin, d);
    amax = std::max(amax, d);
  }
  for (const Vector& p : b) {
    double d = dot(p, axis);
    bmin = std::min(bmin, d);
    bmax = std::max(bmax, d);
  }
  return amax < bmin || bmax < amin;
}

}  // namespace

KinematicEstimate kinematic_integral_mc(const Polytope& k, const Polytope& l,
                                        long long samples, uint64_t seed) {
  if (k.dim() != 2 || l.dim() != 2)
    fail(ErrorCode::Unsupported, "kinematic MC is planar (n = 2)");
  if (k.is_empty() || l.is_empty())
    fail(ErrorCode::EmptyBody, "kinematic MC needs nonempty bodies");

  Polygon2 gk = make_polygon2(k);
  Polygon2 gl = make_polygon2(l);
  double half = k.circumradius() + l.circumradius();
  if (half <= 0.0) half = 1.0;  // two points: any window works
  double window_area = (2.0 * half) * (2.0 * half);

  const long long chunk = 1 << 16;
  long long hits = 0;
  Rng base(seed);
  long long done = 0;
  uint64_t chunk_idx = 0;
  std::vector<std::pair<long long, double>> trace;
  const std::vector<Vector>& lv = gl.cyc;
  while (done < samples) {
    long long batch = std::min(chunk, samples - done);
    Rng rng = base.fork(chunk_idx++);
    for (long long s = 0; s < batch; ++s) {
      double theta = rng.uniform(0.0, 2.0 * kPi);
      double tx = rng.uniform(-half, half);
      double ty = rng.uniform(-half, half);
      double ct = std::cos(theta), st = std::sin(theta);
      std::vector<Vector> moved;
      moved.reserve(lv.size());
      for (const Vector& w : lv)
        moved.push_back(Vector{ct * w[0] - st * w[1] + tx,
                               st * w[0] + ct * w[1] + ty});
      bool intersects = true;
      for (const Vector& axis : gk.axes) {
        if (separated_on(gk.cyc, moved, axis)) { intersects = false; break; }
      }
      if (intersects) {
        size_t mcount = moved.size();
        for (size_t i = 0; i < mcount && intersects; ++i) {
          Vector e = moved[(i + 1) % mcount] - moved[i];
          double nn = norm(e);
          if (nn < 1e-14) continue;
          if (separated_on(gk.cyc, moved, Vector{e[1] / nn, -e[0] / nn}))
            intersects = false;
          if (intersects && mcount <= 2 &&
              separated_on(gk.cyc, moved, Vector{e[0] / nn, e[1] / nn}))
            intersects = false;
        }
      }
      if (intersects) ++hits;
    }
    done += batch;
    trace.push_back({done, window_area * static_cast<double>(hits) /
                               static_cast<double>(done)});
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  KinematicEstimate est;
  est.trace = std::move(trace);
  est.estimate = window_area * p;
  est.stderr_ = window_area * std::sqrt(std::max(0.0, p * (1.0 - p)) /
                                        static_cast<double>(samples));
  est.samples = samples;
  return est;
}

double kinematic_target(const Polytope& k, const Polytope& l) {
  int n = k.dim();
  IntrinsicVector vk = intrinsic_volumes(k);
  IntrinsicVector vl = intrinsic_volumes(l);
  KappaTable kappa(n);
  KahanSum s;
  for (int i = 0; i <= n; ++i) {
    double coeff = kappa[i] * kappa[n - i] / (binomial(n, i) * kappa[n]);
    s.add(coeff * vk[i] * vl[n - i]);
  }
  return s.value();
}

double valuation_check(const BodyValuation& z, const Polytope& p,
                       const Hyperplane& h) {
  SplitResult sr = split_by_hyperplane(p, h);
  double lhs = z(sr.plus) + z(sr.minus);
  double rhs = z(p) + z(sr.section);
  return std::fabs(lhs - rhs);
}

}  // namespace vallab
