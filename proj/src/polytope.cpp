#include "vallab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace vallab {

namespace {

std::vector<Vector> dedup_points(const std::vector<Vector>& pts) {
  std::vector<Vector> out;
  for (const Vector& p : pts) {
    bool seen = false;
    for (const Vector& q : out) {
      if (nearly_equal(p, q, kDedupEps)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(p);
  }
  return out;
}

double coordinate_scale(const std::vector<Vector>& pts) {
  double s = 1.0;
  for (const Vector& p : pts)
    for (double c : p.coords) s = std::max(s, std::fabs(c));
  return s;
}

// Orthonormal basis of span{p - p0} via modified Gram-Schmidt.
std::vector<Vector> affine_basis(const std::vector<Vector>& pts, double tol) {
  std::vector<Vector> basis;
  if (pts.empty()) return basis;
  const Vector& p0 = pts[0];
  for (size_t i = 1; i < pts.size(); ++i) {
    Vector v = pts[i] - p0;
    for (const Vector& b : basis) v -= dot(v, b) * b;
    double n = norm(v);
    if (n > tol) basis.push_back((1.0 / n) * v);
    if (static_cast<int>(basis.size()) == p0.dim()) break;
  }
  return basis;
}

Vector to_chart(const Vector& p, const Vector& origin,
                const std::vector<Vector>& basis) {
  Vector r(static_cast<int>(basis.size()));
  Vector d = p - origin;
  for (size_t i = 0; i < basis.size(); ++i) r[static_cast<int>(i)] = dot(d, basis[i]);
  return r;
}

Vector from_chart(const Vector& c, const Vector& origin,
                  const std::vector<Vector>& basis) {
  Vector r = origin;
  for (size_t i = 0; i < basis.size(); ++i) r += c[static_cast<int>(i)] * basis[i];
  return r;
}

// Andrew monotone chain; returns hull vertices in counterclockwise order.
std::vector<Vector> hull2d_ccw(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vector& a, const Vector& b) {
                          return nearly_equal(a, b, kDedupEps);
                        }),
            pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  double area_tol = 1e-12 * coordinate_scale(pts) * coordinate_scale(pts);
  std::vector<Vector> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 &&
           cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= area_tol)
      --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower &&
           cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= area_tol)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct Tri {
  int a, b, c;
  Vector normal;  // outward, unit
  double offset;
  bool alive = true;
};

Vector tri_normal(const Vector& a, const Vector& b, const Vector& c) {
  return cross3(b - a, c - a);
}

// Incremental 3-D hull over deduplicated, affinely 3-dimensional points.
std::vector<Tri> hull3d_triangles(const std::vector<Vector>& pts) {
  size_t n = pts.size();
  double scale = coordinate_scale(pts);
  double eps = 1e-10 * scale;

  // Seed tetrahedron: spread-out quadruple.
  size_t i0 = 0, i1 = 1;
  double best = -1.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n && j < i + 32; ++j) {
      double d = dist(pts[i], pts[j]);
      if (d > best) { best = d; i0 = i; i1 = j; }
    }
  size_t i2 = 0;
  best = -1.0;
  for (size_t i = 0; i < n; ++i) {
    double d = norm(cross3(pts[i1] - pts[i0], pts[i] - pts[i0]));
    if (d > best) { best = d; i2 = i; }
  }
  Vector nrm = tri_normal(pts[i0], pts[i1], pts[i2]);
  size_t i3 = 0;
  best = -1.0;
  for (size_t i = 0; i < n; ++i) {
    double d = std::fabs(dot(nrm, pts[i] - pts[i0]));
    if (d > best) { best = d; i3 = i; }
  }

  auto make_tri = [&](int a, int b, int c) {
    Tri t;
    t.a = a; t.b = b; t.c = c;
    Vector nv = tri_normal(pts[a], pts[b], pts[c]);
    t.normal = normalized(nv);
    t.offset = dot(t.normal, pts[a]);
    return t;
  };

  std::vector<Tri> faces;
  {
    int a = static_cast<int>(i0), b = static_cast<int>(i1),
        c = static_cast<int>(i2), d = static_cast<int>(i3);
    if (dot(tri_normal(pts[a], pts[b], pts[c]), pts[d] - pts[a]) > 0.0)
      std::swap(b, c);
    faces.push_back(make_tri(a, b, c));
    faces.push_back(make_tri(a, d, b));
    faces.push_back(make_tri(b, d, c));
    faces.push_back(make_tri(c, d, a));
  }

  for (size_t p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<size_t> visible;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].alive) continue;
      if (dot(faces[f].normal, pts[p]) - faces[f].offset > eps)
        visible.push_back(f);
    }
    if (visible.empty()) continue;
    // Horizon: directed edges of visible faces whose reverse is not visible.
    std::set<std::pair<int, int>> vis_edges;
    for (size_t f : visible) {
      const Tri& t = faces[f];
      vis_edges.insert({t.a, t.b});
      vis_edges.insert({t.b, t.c});
      vis_edges.insert({t.c, t.a});
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& e : vis_edges) {
      if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
    }
    for (size_t f : visible) faces[f].alive = false;
    for (const auto& e : horizon) {
      faces.push_back(make_tri(e.first, e.second, static_cast<int>(p)));
    }
  }

  std::vector<Tri> out;
  for (const Tri& t : faces)
    if (t.alive) out.push_back(t);
  return out;
}

struct MergedFacet {
  Vector normal;
  double offset;
  std::vector<int> cycle;            // global point indices, CCW from outside
  std::array<int, 3> witness_idx{};  // indices of the witness triangle
};

// Group coplanar triangles and trace each group's boundary cycle.
std::vector<MergedFacet> merge_coplanar(const std::vector<Tri>& tris,
                                        const std::vector<Vector>& pts) {
  double scale = coordinate_scale(pts);
  std::vector<int> group(tris.size(), -1);
  std::vector<MergedFacet> facets;
  for (size_t i = 0; i < tris.size(); ++i) {
    if (group[i] >= 0) continue;
    int g = static_cast<int>(facets.size());
    MergedFacet mf;
    mf.normal = tris[i].normal;
    mf.offset = tris[i].offset;
    mf.witness_idx = {tris[i].a, tris[i].b, tris[i].c};
    facets.push_back(mf);
    group[i] = g;
    for (size_t j = i + 1; j < tris.size(); ++j) {
      if (group[j] >= 0) continue;
      if (dot(tris[j].normal, mf.normal) > 1.0 - 1e-9 &&
          std::fabs(tris[j].offset - mf.offset) < 1e-8 * scale)
        group[j] = g;
    }
  }
  for (size_t g = 0; g < facets.size(); ++g) {
    std::map<int, int> next;  // boundary edge successor map
    std::set<std::pair<int, int>> edges;
    for (size_t i = 0; i < tris.size(); ++i) {
      if (group[i] != static_cast<int>(g)) continue;
      int vs[3] = {tris[i].a, tris[i].b, tris[i].c};
      for (int k = 0; k < 3; ++k) {
        int u = vs[k], v = vs[(k + 1) % 3];
        if (edges.count({v, u})) {
          edges.erase({v, u});
        } else {
          edges.insert({u, v});
        }
      }
    }
    for (const auto& e : edges) next[e.first] = e.second;
    if (next.empty()) continue;
    int start = next.begin()->first;
    std::vector<int> cycle;
    int cur = start;
    do {
      cycle.push_back(cur);
      cur = next.at(cur);
    } while (cur != start && cycle.size() <= next.size());
    // Drop collinear chain points so only polygon corners remain.
    std::vector<int> corners;
    size_t m = cycle.size();
    for (size_t k = 0; k < m; ++k) {
      const Vector& prev = pts[cycle[(k + m - 1) % m]];
      const Vector& cur_p = pts[cycle[k]];
      const Vector& nxt = pts[cycle[(k + 1) % m]];
      if (norm(cross3(cur_p - prev, nxt - cur_p)) > 1e-9 * scale * scale)
        corners.push_back(cycle[k]);
    }
    facets[g].cycle = corners.empty() ? cycle : corners;
  }
  return facets;
}

bool facet_less(const Facet& x, const Facet& y) {
  if (lex_less(x.plane.normal, y.plane.normal)) return true;
  if (lex_less(y.plane.normal, x.plane.normal)) return false;
  return x.plane.offset < y.plane.offset;
}

std::array<Vector, 3> canonical_plane_witness(const Hyperplane& h) {
  const Vector& nv = h.normal;
  int k = 0;
  for (int i = 1; i < nv.dim(); ++i)
    if (std::fabs(nv[i]) < std::fabs(nv[k])) k = i;
  Vector e(nv.dim());
  e[k] = 1.0;
  Vector t1 = normalized(e - dot(e, nv) * nv);
  Vector t2 = cross3(nv, t1);
  Vector p0 = h.offset * nv;
  return {p0, p0 + t1, p0 + t2};
}

}  // namespace

Polytope Polytope::empty(int dim) {
  Polytope p;
  p.dim_ = dim;
  return p;
}

Polytope Polytope::point(const Vector& x) { return hull({x}); }

Polytope Polytope::segment(const Vector& a, const Vector& b) {
  return hull({a, b});
}

Polytope Polytope::box(const std::vector<double>& lo,
                       const std::vector<double>& hi) {
  int n = static_cast<int>(lo.size());
  if (hi.size() != lo.size())
    fail(ErrorCode::DimensionMismatch, "box bounds of different lengths");
  std::vector<Vector> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? hi[i] : lo[i];
    pts.push_back(v);
  }
  return hull(pts);
}

Polytope Polytope::cube(int dim, double side, double origin) {
  std::vector<double> lo(static_cast<size_t>(dim), origin);
  std::vector<double> hi(static_cast<size_t>(dim), origin + side);
  return box(lo, hi);
}

Polytope Polytope::simplex(const std::vector<Vector>& vertices) {
  Polytope p = hull(vertices);
  if (static_cast<int>(p.vertices().size()) != static_cast<int>(vertices.size()))
    fail(ErrorCode::DegenerateSimplex, "simplex vertices are not in general position");
  return p;
}

Polytope Polytope::standard_simplex(int dim, double scale) {
  std::vector<Vector> pts;
  pts.push_back(Vector(dim));
  for (int i = 0; i < dim; ++i) {
    Vector e(dim);
    e[i] = scale;
    pts.push_back(e);
  }
  return hull(pts);
}

Polytope Polytope::regular_polygon(int k, double radius, double phase) {
  std::vector<Vector> pts;
  for (int i = 0; i < k; ++i) {
    double a = phase + 2.0 * kPi * i / k;
    pts.push_back(Vector{radius * std::cos(a), radius * std::sin(a)});
  }
  return hull(pts);
}

Polytope Polytope::regular_tetrahedron(double edge) {
  double s = edge / std::sqrt(2.0);
  std::vector<Vector> pts = {Vector{0, 0, 0}, Vector{s, s, 0}, Vector{s, 0, s},
                             Vector{0, s, s}};
  return hull(pts);
}

Polytope Polytope::ball_approx(int dim, int resolution, double radius) {
  if (dim == 2) return regular_polygon(resolution, radius);
  if (dim != 3) fail(ErrorCode::Unsupported, "ball_approx needs dim 2 or 3");
  // Icosahedron vertices, then `resolution` rounds of triangle subdivision
  // projected back to the sphere (inscribed approximation).
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vector> v = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vector& p : v) p = normalized(p);
  std::vector<std::array<int, 3>> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int r = 0; r < resolution; ++r) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      Vector m = normalized(0.5 * (v[a] + v[b]));
      v.push_back(m);
      int idx = static_cast<int>(v.size()) - 1;
      mid[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> nf;
    for (const auto& t : f) {
      int ab = midpoint(t[0], t[1]);
      int bc = midpoint(t[1], t[2]);
      int ca = midpoint(t[2], t[0]);
      nf.push_back({t[0], ab, ca});
      nf.push_back({t[1], bc, ab});
      nf.push_back({t[2], ca, bc});
      nf.push_back({ab, bc, ca});
    }
    f = std::move(nf);
  }
  std::vector<Vector> pts;
  for (const Vector& p : v) pts.push_back(radius * p);
  return hull(pts);
}

int Polytope::affine_dim() const {
  if (verts_.empty()) return -1;
  double tol = 1e-9 * coordinate_scale(verts_);
  return static_cast<int>(affine_basis(verts_, tol).size());
}

Polytope Polytope::translate(const Vector& t) const {
  if (is_empty()) return *this;
  std::vector<Vector> pts;
  for (const Vector& v : verts_) pts.push_back(v + t);
  return hull(pts);
}

Polytope Polytope::scale(double s) const {
  if (is_empty()) return *this;
  std::vector<Vector> pts;
  for (const Vector& v : verts_) pts.push_back(s * v);
  return hull(pts);
}

Polytope Polytope::transform(const Mat& m) const {
  if (is_empty()) return *this;
  std::vector<Vector> pts;
  for (const Vector& v : verts_) pts.push_back(m.apply(v));
  return hull(pts);
}

bool Polytope::contains(const Vector& x, double tol) const {
  if (is_empty()) return false;
  if (has_facets() && affine_dim() == dim_) {
    for (const Facet& f : facets_)
      if (f.plane.signed_dist(x) > tol) return false;
    return true;
  }
  if (verts_.size() == 1) return nearly_equal(x, verts_[0], tol);
  // Lower-dimensional or facet-free: check in the affine chart.
  double btol = 1e-9 * coordinate_scale(verts_);
  std::vector<Vector> basis = affine_basis(verts_, btol);
  Vector d = x - verts_[0];
  Vector proj(dim_);
  for (const Vector& b : basis) proj += dot(d, b) * b;
  if (norm(d - proj) > tol) return false;
  if (basis.size() == 1) {
    double t = dot(d, basis[0]);
    double lo = 0.0, hi = 0.0;
    for (const Vector& v : verts_) {
      double s = dot(v - verts_[0], basis[0]);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return t >= lo - tol && t <= hi + tol;
  }
  if (basis.size() == 2) {
    std::vector<Vector> chart;
    for (const Vector& v : verts_) chart.push_back(to_chart(v, verts_[0], basis));
    std::vector<Vector> cyc = hull2d_ccw(chart);
    Vector xc = to_chart(x, verts_[0], basis);
    for (size_t i = 0; i < cyc.size(); ++i) {
      const Vector& a = cyc[i];
      const Vector& b = cyc[(i + 1) % cyc.size()];
      if (cross2(b - a, xc - a) < -tol) return false;
    }
    return true;
  }
  fail(ErrorCode::Unsupported, "contains: unsupported affine dimension");
}

double Polytope::circumradius() const {
  double r = 0.0;
  for (const Vector& v : verts_) r = std::max(r, norm(v));
  return r;
}

std::vector<std::pair<int, int>> Polytope::edges() const {
  std::set<std::pair<int, int>> es;
  int ad = affine_dim();
  if (ad <= 0) return {};
  if (ad == 1) {
    // Segment: extreme pair.
    return {{0, static_cast<int>(verts_.size()) - 1}};
  }
  if (dim_ == 2 || ad == 2) {
    // Polygon: consecutive vertices in angular order within the plane.
    double btol = 1e-9 * coordinate_scale(verts_);
    std::vector<Vector> basis = affine_basis(verts_, btol);
    std::vector<std::pair<double, int>> ang;
    Vector c(dim_);
    for (const Vector& v : verts_) c += (1.0 / verts_.size()) * v;
    for (size_t i = 0; i < verts_.size(); ++i) {
      Vector ch = to_chart(verts_[i], c, basis);
      ang.push_back({std::atan2(ch[1], ch[0]), static_cast<int>(i)});
    }
    std::sort(ang.begin(), ang.end());
    for (size_t i = 0; i < ang.size(); ++i) {
      int a = ang[i].second, b = ang[(i + 1) % ang.size()].second;
      es.insert(std::minmax(a, b));
    }
  } else {
    if (!has_facets())
      fail(ErrorCode::MissingFacets, "edges need the H-representation");
    for (const Facet& f : facets_) {
      for (size_t i = 0; i < f.vertices.size(); ++i) {
        int a = f.vertices[i];
        int b = f.vertices[(i + 1) % f.vertices.size()];
        es.insert(std::minmax(a, b));
      }
    }
  }
  return {es.begin(), es.end()};
}

Polytope hull(const std::vector<Vector>& points) {
  if (points.empty()) fail(ErrorCode::EmptyBody, "hull of no points");
  int n = points[0].dim();
  for (const Vector& p : points)
    if (p.dim() != n)
      fail(ErrorCode::DimensionMismatch, "hull: mixed dimensions");
  if (n < 1) fail(ErrorCode::ValidationError, "dimension must be >= 1");

  std::vector<Vector> pts = dedup_points(points);
  Polytope poly;
  poly.dim_ = n;

  double scale = coordinate_scale(pts);
  std::vector<Vector> basis = affine_basis(pts, 1e-9 * scale);
  int ad = static_cast<int>(basis.size());

  if (n > 3) {
    // Recognized families only: simplex or axis-aligned box.
    bool is_simplex = (static_cast<int>(pts.size()) == n + 1 && ad == n);
    bool is_box = false;
    if (!is_simplex && pts.size() == (1u << n)) {
      std::vector<double> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        lo[static_cast<size_t>(i)] = hi[static_cast<size_t>(i)] = pts[0][i];
        for (const Vector& p : pts) {
          lo[static_cast<size_t>(i)] = std::min(lo[static_cast<size_t>(i)], p[i]);
          hi[static_cast<size_t>(i)] = std::max(hi[static_cast<size_t>(i)], p[i]);
        }
      }
      is_box = true;
      for (const Vector& p : pts) {
        for (int i = 0; i < n; ++i) {
          double c = p[i];
          if (std::fabs(c - lo[static_cast<size_t>(i)]) > kDedupEps &&
              std::fabs(c - hi[static_cast<size_t>(i)]) > kDedupEps)
            is_box = false;
        }
      }
    }
    if (!is_simplex && !is_box && pts.size() > 1)
      fail(ErrorCode::Unsupported,
           "general hulls are implemented for n <= 3 only");
    poly.verts_ = pts;
    std::sort(poly.verts_.begin(), poly.verts_.end(), lex_less);
    return poly;
  }

  if (ad == 0) {
    poly.verts_ = {pts[0]};
    return poly;
  }

  if (ad == 1) {
    const Vector& d = basis[0];
    double lo = 0.0, hi = 0.0;
    size_t ilo = 0, ihi = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      double t = dot(pts[i] - pts[0], d);
      if (t < lo) { lo = t; ilo = i; }
      if (t > hi) { hi = t; ihi = i; }
    }
    poly.verts_ = {pts[ilo], pts[ihi]};
    std::sort(poly.verts_.begin(), poly.verts_.end(), lex_less);
    if (n == 1) {
      Facet f1, f2;
      f1.plane = Hyperplane(Vector{-1.0}, -poly.verts_[0][0]);
      f1.vertices = {0};
      f2.plane = Hyperplane(Vector{1.0}, poly.verts_[1][0]);
      f2.vertices = {1};
      poly.facets_ = {f1, f2};
    }
    return poly;
  }

  if (ad == 2) {
    if (n == 2) {
      std::vector<Vector> cyc = hull2d_ccw(pts);
      poly.verts_ = cyc;
      std::sort(poly.verts_.begin(), poly.verts_.end(), lex_less);
      std::vector<int> idx;
      for (const Vector& c : cyc) {
        for (size_t i = 0; i < poly.verts_.size(); ++i)
          if (nearly_equal(c, poly.verts_[i], kDedupEps)) {
            idx.push_back(static_cast<int>(i));
            break;
          }
      }
      for (size_t i = 0; i < idx.size(); ++i) {
        const Vector& a = poly.verts_[static_cast<size_t>(idx[i])];
        const Vector& b = poly.verts_[static_cast<size_t>(idx[(i + 1) % idx.size()])];
        Vector e = b - a;
        Facet f;
        f.plane = Hyperplane(Vector{e[1], -e[0]}, e[1] * a[0] - e[0] * a[1]);
        f.vertices = {idx[i], idx[(i + 1) % idx.size()]};
        poly.facets_.push_back(f);
      }
      std::sort(poly.facets_.begin(), poly.facets_.end(), facet_less);
      return poly;
    }
    // Planar body embedded in R^3: hull in a chart, no H-representation.
    std::vector<Vector> chart;
    for (const Vector& p : pts) chart.push_back(to_chart(p, pts[0], basis));
    std::vector<Vector> cyc = hull2d_ccw(chart);
    std::vector<Vector> hull_pts;
    for (const Vector& c : cyc) hull_pts.push_back(from_chart(c, pts[0], basis));
    for (Vector& hp : hull_pts) {
      for (const Vector& p : pts)
        if (nearly_equal(hp, p, 1e-9 * scale)) { hp = p; break; }
    }
    poly.verts_ = hull_pts;
    std::sort(poly.verts_.begin(), poly.verts_.end(), lex_less);
    return poly;
  }

  // ad == 3
  std::vector<Tri> tris = hull3d_triangles(pts);
  std::vector<MergedFacet> merged = merge_coplanar(tris, pts);

  std::set<int> used;
  for (const MergedFacet& mf : merged)
    for (int i : mf.cycle) used.insert(i);
  std::vector<Vector> vlist;
  for (int i : used) vlist.push_back(pts[static_cast<size_t>(i)]);
  std::sort(vlist.begin(), vlist.end(), lex_less);
  auto find_idx = [&](const Vector& v) {
    for (size_t i = 0; i < vlist.size(); ++i)
      if (nearly_equal(vlist[i], v, kDedupEps)) return static_cast<int>(i);
    return -1;
  };
  poly.verts_ = vlist;
  for (const MergedFacet& mf : merged) {
    Facet f;
    f.plane = Hyperplane(mf.normal, mf.offset);
    for (int gi : mf.cycle) {
      int li = find_idx(pts[static_cast<size_t>(gi)]);
      if (li >= 0) f.vertices.push_back(li);
    }
    if (f.vertices.size() < 3) continue;
    // Canonical cycle start: smallest index first, orientation preserved.
    size_t s = 0;
    for (size_t i = 1; i < f.vertices.size(); ++i)
      if (f.vertices[i] < f.vertices[s]) s = i;
    std::rotate(f.vertices.begin(),
                f.vertices.begin() + static_cast<long>(s), f.vertices.end());
    f.witness = {pts[static_cast<size_t>(mf.witness_idx[0])],
                 pts[static_cast<size_t>(mf.witness_idx[1])],
                 pts[static_cast<size_t>(mf.witness_idx[2])]};
    f.witness_flipped = false;
    poly.facets_.push_back(f);
  }
  std::sort(poly.facets_.begin(), poly.facets_.end(), facet_less);
  return poly;
}

double volume(const Polytope& p) {
  if (p.is_empty()) return 0.0;
  int n = p.dim();
  const std::vector<Vector>& v = p.vertices();
  int ad = p.affine_dim();
  if (ad < n) return 0.0;

  if (n == 1) return v.back()[0] - v.front()[0];

  if (n == 2) {
    // Fan triangulation in angular order about the centroid.
    Vector c(2);
    for (const Vector& w : v) c += (1.0 / v.size()) * w;
    std::vector<std::pair<double, size_t>> ang;
    for (size_t i = 0; i < v.size(); ++i)
      ang.push_back({std::atan2(v[i][1] - c[1], v[i][0] - c[0]), i});
    std::sort(ang.begin(), ang.end());
    KahanSum area;
    for (size_t i = 0; i < ang.size(); ++i) {
      const Vector& a = v[ang[i].second];
      const Vector& b = v[ang[(i + 1) % ang.size()].second];
      area.add(0.5 * cross2(a - c, b - c));
    }
    return std::fabs(area.value());
  }

  if (n == 3) {
    if (!p.has_facets())
      fail(ErrorCode::MissingFacets, "volume in R^3 needs facets");
    KahanSum vol;
    for (const Facet& f : p.facets()) {
      const Vector& a = v[static_cast<size_t>(f.vertices[0])];
      for (size_t i = 1; i + 1 < f.vertices.size(); ++i) {
        const Vector& b = v[static_cast<size_t>(f.vertices[i])];
        const Vector& c = v[static_cast<size_t>(f.vertices[i + 1])];
        vol.add(dot(a, cross3(b, c)) / 6.0);
      }
    }
    return std::fabs(vol.value());
  }

  // n > 3: recognized families.
  if (static_cast<int>(v.size()) == n + 1) {
    Mat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i + 1)][j] - v[0][j];
    // Determinant by elimination (n can exceed 3).
    std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r)
        if (std::fabs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
            std::fabs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
          piv = r;
      if (std::fabs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]) < 1e-14)
        return 0.0;
      if (piv != col) {
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
        det = -det;
      }
      det *= a[static_cast<size_t>(col)][static_cast<size_t>(col)];
      for (int r = col + 1; r < n; ++r) {
        double f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                   a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int cc = col; cc < n; ++cc)
          a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
              f * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
      }
    }
    double nf = 1.0;
    for (int i = 2; i <= n; ++i) nf *= i;
    return std::fabs(det) / nf;
  }
  if (v.size() == (1u << n)) {
    double vol = 1.0;
    for (int i = 0; i < n; ++i) {
      double lo = v[0][i], hi = v[0][i];
      for (const Vector& w : v) {
        lo = std::min(lo, w[i]);
        hi = std::max(hi, w[i]);
      }
      vol *= (hi - lo);
    }
    return vol;
  }
  fail(ErrorCode::Unsupported, "volume for n > 3 needs a box or simplex");
}

double support(const Polytope& p, const Vector& y) {
  if (p.is_empty()) fail(ErrorCode::EmptyBody, "support of the empty body");
  if (y.dim() != p.dim())
    fail(ErrorCode::DimensionMismatch, "support: direction dimension");
  double best = -kInf;
  for (const Vector& v : p.vertices()) best = std::max(best, dot(v, y));
  return best;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim())
    fail(ErrorCode::DimensionMismatch, "minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.dim());
  if (q.vertices().size() == 1) return p.translate(q.vertices()[0]);
  if (p.vertices().size() == 1) return q.translate(p.vertices()[0]);
  if (p.dim() > 3)
    fail(ErrorCode::Unsupported, "minkowski_sum for n <= 3 only");
  std::vector<Vector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const Vector& a : p.vertices())
    for (const Vector& b : q.vertices()) sums.push_back(a + b);
  return hull(sums);
}

SplitResult split_by_hyperplane(const Polytope& p, const Hyperplane& h) {
  SplitResult r;
  r.plus = Polytope::empty(p.dim());
  r.minus = Polytope::empty(p.dim());
  r.section = Polytope::empty(p.dim());
  if (p.is_empty()) return r;
  if (h.normal.dim() != p.dim())
    fail(ErrorCode::DimensionMismatch, "split: hyperplane dimension");

  const std::vector<Vector>& v = p.vertices();
  double tol = kEps * (1.0 + p.circumradius());
  std::vector<double> s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = h.signed_dist(v[i]);

  std::vector<Vector> plus, minus, on;
  for (size_t i = 0; i < v.size(); ++i) {
    if (s[i] >= -tol) plus.push_back(v[i]);
    if (s[i] <= tol) minus.push_back(v[i]);
    if (std::fabs(s[i]) <= tol) on.push_back(v[i]);
  }

  if (v.size() > 1) {
    std::vector<std::pair<int, int>> es = p.edges();
    for (const auto& e : es) {
      double sa = s[static_cast<size_t>(e.first)];
      double sb = s[static_cast<size_t>(e.second)];
      if ((sa > tol && sb < -tol) || (sa < -tol && sb > tol)) {
        double t = sa / (sa - sb);
        Vector x = v[static_cast<size_t>(e.first)] +
                   t * (v[static_cast<size_t>(e.second)] - v[static_cast<size_t>(e.first)]);
        plus.push_back(x);
        minus.push_back(x);
        on.push_back(x);
      }
    }
  }

  if (!plus.empty()) r.plus = hull(plus);
  if (!minus.empty()) r.minus = hull(minus);
  if (!on.empty()) r.section = hull(on);

  // Reattach exact plane witnesses: facets lying in a parent plane inherit
  // the parent's witness; facets in the cut plane get the cut's canonical
  // witness (shared by both pieces, opposite orientation flags).
  auto fix_witnesses = [&](Polytope& piece) {
    if (piece.dim() != 3 || !piece.has_facets() || !p.has_facets()) return;
    double scale = 1.0 + piece.circumradius();
    for (Facet& f : piece.facets_) {
      bool done = false;
      for (const Facet& pf : p.facets()) {
        if (dot(f.plane.normal, pf.plane.normal) > 1.0 - 1e-7 &&
            std::fabs(f.plane.offset - pf.plane.offset) < 1e-7 * scale) {
          f.witness = pf.witness;
          f.witness_flipped = pf.witness_flipped;
          done = true;
          break;
        }
      }
      if (done) continue;
      double align = dot(f.plane.normal, h.normal);
      if (std::fabs(std::fabs(align) - 1.0) < 1e-7 &&
          std::fabs(f.plane.offset - align * h.offset) < 1e-7 * scale) {
        f.witness = canonical_plane_witness(h);
        f.witness_flipped = align < 0.0;
      }
    }
  };
  fix_witnesses(r.plus);
  fix_witnesses(r.minus);
  return r;
}

namespace {

std::vector<Vector> direction_set(const Polytope& a, const Polytope& b) {
  int n = a.dim();
  std::vector<Vector> dirs;
  auto add = [&](const Vector& d) {
    double nn = norm(d);
    if (nn > 1e-12) dirs.push_back((1.0 / nn) * d);
  };
  for (const Polytope* p : {&a, &b}) {
    for (const Vector& v : p->vertices()) add(v);
    if (p->has_facets())
      for (const Facet& f : p->facets()) add(f.plane.normal);
  }
  if (n == 1) {
    add(Vector{1.0});
    add(Vector{-1.0});
  } else if (n == 2) {
    for (int i = 0; i < 256; ++i) {
      double t = 2.0 * kPi * i / 256.0;
      add(Vector{std::cos(t), std::sin(t)});
    }
  } else if (n == 3) {
    // Fibonacci sphere.
    const double ga = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < 512; ++i) {
      double z = 1.0 - 2.0 * (i + 0.5) / 512.0;
      double rr = std::sqrt(std::max(0.0, 1.0 - z * z));
      add(Vector{rr * std::cos(ga * i), rr * std::sin(ga * i), z});
    }
  }
  return dirs;
}

}  // namespace

double hausdorff_distance(const Polytope& a, const Polytope& b) {
  if (a.is_empty() || b.is_empty())
    fail(ErrorCode::EmptyBody, "hausdorff_distance of an empty body");
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch, "hausdorff_distance: dimensions differ");
  double best = 0.0;
  for (const Vector& d : direction_set(a, b))
    best = std::max(best, std::fabs(support(a, d) - support(b, d)));
  return best;
}

SampledBody SampledBody::from_polytope(const Polytope& p,
                                       const std::vector<Vector>& directions) {
  if (p.is_empty()) fail(ErrorCode::EmptyBody, "sampling the empty body");
  SampledBody s;
  s.dirs_ = directions;
  s.base_ = std::make_shared<Polytope>(p);
  s.mix_ = {Mat::identity(p.dim())};
  s.refresh_values();
  return s;
}

SampledBody SampledBody::from_table(std::vector<Vector> directions,
                                    std::vector<double> values) {
  SampledBody s;
  s.dirs_ = std::move(directions);
  s.vals_ = std::move(values);
  if (s.dirs_.size() != s.vals_.size())
    fail(ErrorCode::ValidationError, "direction/value count mismatch");
  if (!s.dirs_.empty() && s.dirs_[0].dim() == 2) {
    // Reconstruct the induced polygon by clipping a generous box.
    double m = 0.0;
    for (double v : s.vals_) m = std::max(m, std::fabs(v));
    Polytope poly = Polytope::cube(2, 4.0 * m + 4.0, -2.0 * m - 2.0);
    for (size_t i = 0; i < s.dirs_.size(); ++i) {
      SplitResult sr =
          split_by_hyperplane(poly, Hyperplane(s.dirs_[i], s.vals_[i]));
      poly = sr.minus;
      if (poly.is_empty()) fail(ErrorCode::ValidationError, "inconsistent support table");
    }
    s.base_ = std::make_shared<Polytope>(poly);
    s.mix_ = {Mat::identity(2)};
  }
  return s;
}

std::vector<Vector> SampledBody::uniform_directions2(int k) {
  std::vector<Vector> d;
  for (int i = 0; i < k; ++i) {
    double t = 2.0 * kPi * i / k;
    d.push_back(Vector{std::cos(t), std::sin(t)});
  }
  return d;
}

double SampledBody::support(const Vector& y) const {
  if (!base_) fail(ErrorCode::Unsupported, "support evaluator unavailable");
  KahanSum s;
  for (const Mat& m : mix_) s.add(vallab::support(*base_, m.transpose().apply(y)));
  return s.value() / static_cast<double>(mix_.size());
}

void SampledBody::refresh_values() {
  vals_.resize(dirs_.size());
  for (size_t i = 0; i < dirs_.size(); ++i) vals_[i] = support(dirs_[i]);
}

SampledBody rotational_mean(const SampledBody& k,
                            const std::vector<Mat>& rotations) {
  if (rotations.empty())
    fail(ErrorCode::InvalidRotation, "rotational_mean needs rotations");
  for (const Mat& m : rotations)
    if (!is_proper_rotation(m))
      fail(ErrorCode::InvalidRotation, "matrix is not a proper rotation");
  if (!k.base_) fail(ErrorCode::Unsupported, "rotational_mean needs an evaluator");
  SampledBody out;
  out.dirs_ = k.dirs_;
  out.base_ = k.base_;
  for (const Mat& r : rotations)
    for (const Mat& m : k.mix_) out.mix_.push_back(r.mul(m));
  out.refresh_values();
  return out;
}

double hausdorff_distance(const SampledBody& a, const SampledBody& b) {
  if (a.directions().empty() || b.directions().empty())
    fail(ErrorCode::EmptyBody, "hausdorff_distance on empty sample");
  double best = 0.0;
  auto eval = [](const SampledBody& s, const Vector& d, size_t own_idx,
                 bool own) {
    if (own) return s.values()[own_idx];
    return s.support(d);
  };
  for (size_t i = 0; i < a.directions().size(); ++i) {
    double hb = eval(b, a.directions()[i], i,
                     b.directions().size() == a.directions().size() &&
                         nearly_equal(b.directions()[i], a.directions()[i]));
    best = std::max(best, std::fabs(a.values()[i] - hb));
  }
  for (size_t i = 0; i < b.directions().size(); ++i) {
    double ha = eval(a, b.directions()[i], i,
                     a.directions().size() == b.directions().size() &&
                         nearly_equal(a.directions()[i], b.directions()[i]));
    best = std::max(best, std::fabs(ha - b.values()[i]));
  }
  return best;
}

}  // namespace vallab
