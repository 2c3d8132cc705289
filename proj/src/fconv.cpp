#include "vallab/fconv.hpp"

#include <algorithm>
#include <cmath>

namespace vallab {

namespace {

Vector cell_apex(const PolyCell& c) { return c.base.vertices()[0]; }

}  // namespace

bool PolyCell::contains(const Vector& x, double tol) const {
  if (bounded()) return base.contains(x, tol);
  Vector z = x - cell_apex(*this);
  int n = x.dim();
  if (n == 1) {
    double r = rays[0][0];
    return z[0] * r >= -tol;
  }
  if (n == 2) {
    if (rays.size() == 1) {
      // Half-line: along the ray within tolerance.
      double t = dot(z, rays[0]) / dot(rays[0], rays[0]);
      return t >= -tol && dist(z, t * rays[0]) <= tol;
    }
    double orient = cross2(rays[0], rays[1]);
    if (std::fabs(orient) < 1e-14) return false;
    double s = orient > 0 ? 1.0 : -1.0;
    return s * cross2(rays[0], z) >= -tol && s * cross2(z, rays[1]) >= -tol;
  }
  // n == 3 gauge cone: rays are the facet vertices, <slope, r> = 1 each.
  double s = dot(slope, z);
  if (s <= tol) return nearly_equal(z, Vector(n), tol);
  Vector p = (1.0 / s) * z;
  return hull(rays).contains(p, tol);
}

double PolyhedralFunc::operator()(const Vector& x) const {
  if (x.dim() != dim)
    fail(ErrorCode::DimensionMismatch, "evaluate: dimension mismatch");
  double best = kInf;
  double scale = 1.0 + norm(x);
  for (const PolyCell& c : cells) {
    if (c.contains(x, kEps * scale)) best = std::min(best, c.value(x));
  }
  return best;
}

bool PolyhedralFunc::all_bounded() const {
  for (const PolyCell& c : cells)
    if (!c.bounded()) return false;
  return true;
}

double PolyhedralFunc::min_value() const {
  double best = kInf;
  for (const auto& [v, val] : vertex_values()) {
    (void)v;
    best = std::min(best, val);
  }
  return best;
}

Vector PolyhedralFunc::argmin() const {
  double best = kInf;
  Vector arg(dim);
  for (const auto& [v, val] : vertex_values()) {
    if (val < best) {
      best = val;
      arg = v;
    }
  }
  return arg;
}

PolyhedralFunc PolyhedralFunc::shifted(double t) const {
  PolyhedralFunc r = *this;
  for (PolyCell& c : r.cells) c.offset += t;
  return r;
}

PolyhedralFunc PolyhedralFunc::translated(const Vector& x0) const {
  PolyhedralFunc r = *this;
  for (PolyCell& c : r.cells) {
    c.base = c.base.translate(x0);
    c.offset -= dot(c.slope, x0);
  }
  return r;
}

std::vector<std::pair<Vector, double>> PolyhedralFunc::vertex_values() const {
  std::vector<std::pair<Vector, double>> out;
  for (const PolyCell& c : cells) {
    for (const Vector& v : c.base.vertices()) {
      double val = c.value(v);
      bool seen = false;
      for (auto& [w, wv] : out) {
        if (nearly_equal(w, v, 1e-9)) {
          wv = std::min(wv, val);
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back({v, val});
    }
  }
  return out;
}

double MaxAffineFunc::operator()(const Vector& x) const {
  if (x.dim() != dim)
    fail(ErrorCode::DimensionMismatch, "evaluate: dimension mismatch");
  double best = -kInf;
  for (const auto& [y, c] : pieces) best = std::max(best, dot(y, x) + c);
  return best;
}

double evaluate(const PolyhedralFunc& u, const Vector& x) { return u(x); }
double evaluate(const MaxAffineFunc& v, const Vector& x) { return v(x); }

PolyhedralFunc indicator(const Polytope& k) {
  if (k.is_empty()) fail(ErrorCode::EmptyBody, "indicator of the empty body");
  PolyhedralFunc u;
  u.dim = k.dim();
  PolyCell c;
  c.base = k;
  c.slope = Vector(k.dim());
  c.offset = 0.0;
  u.cells.push_back(std::move(c));
  return u;
}

PolyhedralFunc linear_plus_indicator(const Vector& y, const Polytope& k) {
  PolyhedralFunc u = indicator(k);
  u.cells[0].slope = y;
  return u;
}

PolyhedralFunc gauge(const Polytope& k) {
  if (k.is_empty() || !k.contains(Vector(k.dim()), 1e-9))
    fail(ErrorCode::OriginOutside, "gauge needs the origin inside the body");
  if (!k.has_facets())
    fail(ErrorCode::MissingFacets, "gauge needs the H-representation");
  PolyhedralFunc u;
  u.dim = k.dim();
  for (const Facet& f : k.facets()) {
    if (f.plane.offset <= 1e-12) continue;  // facet through the origin
    PolyCell c;
    c.base = Polytope::point(Vector(k.dim()));
    c.slope = (1.0 / f.plane.offset) * f.plane.normal;
    c.offset = 0.0;
    for (int vi : f.vertices)
      c.rays.push_back(k.vertices()[static_cast<size_t>(vi)]);
    u.cells.push_back(std::move(c));
  }
  return u;
}

Polytope sublevel(const PolyhedralFunc& u, double t) {
  std::vector<Vector> pts;
  for (const PolyCell& c : u.cells) {
    if (c.bounded()) {
      if (norm(c.slope) < 1e-14) {
        if (c.offset <= t + kEps)
          for (const Vector& v : c.base.vertices()) pts.push_back(v);
        continue;
      }
      SplitResult sr = split_by_hyperplane(c.base, Hyperplane(c.slope, t - c.offset));
      if (!sr.minus.is_empty())
        for (const Vector& v : sr.minus.vertices()) pts.push_back(v);
      continue;
    }
    Vector apex = c.base.vertices()[0];
    double v0 = c.value(apex);
    if (v0 <= t + kEps) pts.push_back(apex);
    for (const Vector& r : c.rays) {
      double rate = dot(c.slope, r);
      if (rate <= 1e-12)
        fail(ErrorCode::NotCoercive, "sublevel of a non-coercive cell");
      double s = (t - v0) / rate;
      if (s > 0.0) pts.push_back(apex + s * r);
    }
  }
  if (pts.empty()) return Polytope::empty(u.dim);
  return hull(pts);
}

namespace {

// Lifted lower hull data for a planar max-affine function: the regular
// subdivision cells of the conjugate together with the surviving pieces.
struct LiftedHull {
  std::vector<PolyCell> cells;       // cells of v* in slope space
  std::vector<size_t> active;        // indices of active pieces
};

LiftedHull lift_lower_hull_2d(const MaxAffineFunc& v) {
  LiftedHull out;
  std::vector<Vector> lifted;
  for (const auto& [y, c] : v.pieces)
    lifted.push_back(Vector{y[0], y[1], -c});

  auto match_piece = [&](const Vector& p3) -> size_t {
    for (size_t i = 0; i < v.pieces.size(); ++i) {
      if (std::fabs(v.pieces[i].first[0] - p3[0]) < 1e-9 &&
          std::fabs(v.pieces[i].first[1] - p3[1]) < 1e-9 &&
          std::fabs(-v.pieces[i].second - p3[2]) < 1e-9)
        return i;
    }
    fail(ErrorCode::ValidationError, "lifted hull vertex lost");
  };

  Polytope h3;
  bool degenerate = false;
  try {
    h3 = hull(lifted);
    if (h3.affine_dim() < 3 || !h3.has_facets()) degenerate = true;
  } catch (const Error&) {
    degenerate = true;
  }

  if (!degenerate) {
    std::vector<bool> used(v.pieces.size(), false);
    for (const Facet& f : h3.facets()) {
      if (f.plane.normal[2] >= -1e-9) continue;  // keep lower facets only
      PolyCell cell;
      std::vector<Vector> proj;
      const Vector& nrm = f.plane.normal;
      for (int vi : f.vertices) {
        const Vector& p3 = h3.vertices()[static_cast<size_t>(vi)];
        proj.push_back(Vector{p3[0], p3[1]});
        used[match_piece(p3)] = true;
      }
      cell.base = hull(proj);
      // Face plane n0 y0 + n1 y1 + nz z = off with nz < 0 encodes
      // z = (off - n0 y0 - n1 y1)/nz: gradient of v* on the cell.
      cell.slope = Vector{-nrm[0] / nrm[2], -nrm[1] / nrm[2]};
      cell.offset = f.plane.offset / nrm[2];
      out.cells.push_back(std::move(cell));
    }
    for (size_t i = 0; i < v.pieces.size(); ++i)
      if (used[i]) out.active.push_back(i);
    return out;
  }

  // Degenerate lift: all pieces on one plane, or slopes collinear/equal.
  std::vector<Vector> slopes;
  for (const auto& [y, c] : v.pieces) {
    (void)c;
    slopes.push_back(y);
  }
  Polytope s2 = hull(slopes);
  int sdim = s2.affine_dim();
  if (sdim == 2) {
    // v* is affine on conv(slopes): one cell through three spanning points.
    std::vector<size_t> idx;
    for (const Vector& hv : s2.vertices()) {
      for (size_t i = 0; i < v.pieces.size(); ++i)
        if (nearly_equal(v.pieces[i].first, hv, 1e-12)) {
          idx.push_back(i);
          break;
        }
    }
    // Solve z = <x, y> - beta through the first three hull slopes.
    std::vector<std::vector<double>> m(3, std::vector<double>(3));
    std::vector<double> rhs(3);
    for (int r = 0; r < 3; ++r) {
      const auto& [y, c] = v.pieces[idx[static_cast<size_t>(r)]];
      m[static_cast<size_t>(r)] = {y[0], y[1], -1.0};
      rhs[static_cast<size_t>(r)] = -c;
    }
    std::vector<double> sol = solve_linear(m, rhs);
    PolyCell cell;
    cell.base = s2;
    cell.slope = Vector{sol[0], sol[1]};
    cell.offset = -sol[2];
    out.cells.push_back(std::move(cell));
    out.active = idx;
    return out;
  }
  if (sdim == 1) {
    // Slopes on a line: 1-D envelope along the direction.
    Vector dir = normalized(s2.vertices().back() - s2.vertices().front());
    Vector origin = s2.vertices().front();
    std::vector<std::pair<double, size_t>> ts;
    for (size_t i = 0; i < v.pieces.size(); ++i)
      ts.push_back({dot(v.pieces[i].first - origin, dir), i});
    std::sort(ts.begin(), ts.end());
    // Lower hull of (t, -c).
    std::vector<size_t> chain;
    for (const auto& [t, i] : ts) {
      auto pt = [&](size_t j) {
        return std::pair<double, double>{dot(v.pieces[j].first - origin, dir),
                                         -v.pieces[j].second};
      };
      (void)t;
      while (chain.size() >= 2) {
        auto [x1, z1] = pt(chain[chain.size() - 2]);
        auto [x2, z2] = pt(chain[chain.size() - 1]);
        auto [x3, z3] = pt(i);
        if ((z2 - z1) * (x3 - x2) - (z3 - z2) * (x2 - x1) >= -1e-14)
          chain.pop_back();
        else
          break;
      }
      if (!chain.empty()) {
        double prev = dot(v.pieces[chain.back()].first - origin, dir);
        double cur = dot(v.pieces[i].first - origin, dir);
        if (std::fabs(prev - cur) < 1e-12) continue;  // duplicate slope
      }
      chain.push_back(i);
    }
    out.active = chain;
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      const auto& [ya, ca] = v.pieces[chain[k]];
      const auto& [yb, cb] = v.pieces[chain[k + 1]];
      double ta = dot(ya - origin, dir), tb = dot(yb - origin, dir);
      double sstar = (ca - cb) / (tb - ta);
      PolyCell cell;
      cell.base = Polytope::segment(ya, yb);
      cell.slope = sstar * dir;
      cell.offset = -ca - dot(cell.slope, ya);
      out.cells.push_back(std::move(cell));
    }
    if (chain.size() == 1) {
      PolyCell cell;
      cell.base = Polytope::point(v.pieces[chain[0]].first);
      cell.slope = Vector(2);
      cell.offset = -v.pieces[chain[0]].second;
      out.cells.push_back(std::move(cell));
    }
    return out;
  }
  // All slopes equal: the conjugate is a point indicator.
  size_t best = 0;
  for (size_t i = 1; i < v.pieces.size(); ++i)
    if (v.pieces[i].second > v.pieces[best].second) best = i;
  PolyCell cell;
  cell.base = Polytope::point(v.pieces[best].first);
  cell.slope = Vector(2);
  cell.offset = -v.pieces[best].second;
  out.cells.push_back(std::move(cell));
  out.active = {best};
  return out;
}

LiftedHull lift_lower_hull_1d(const MaxAffineFunc& v) {
  LiftedHull out;
  std::vector<std::pair<double, size_t>> ts;
  for (size_t i = 0; i < v.pieces.size(); ++i)
    ts.push_back({v.pieces[i].first[0], i});
  std::sort(ts.begin(), ts.end());
  std::vector<size_t> chain;
  for (const auto& [t, i] : ts) {
    (void)t;
    auto pt = [&](size_t j) {
      return std::pair<double, double>{v.pieces[j].first[0], -v.pieces[j].second};
    };
    while (chain.size() >= 2) {
      auto [x1, z1] = pt(chain[chain.size() - 2]);
      auto [x2, z2] = pt(chain[chain.size() - 1]);
      auto [x3, z3] = pt(i);
      if ((z2 - z1) * (x3 - x2) - (z3 - z2) * (x2 - x1) >= -1e-14)
        chain.pop_back();
      else
        break;
    }
    if (!chain.empty() &&
        std::fabs(v.pieces[chain.back()].first[0] - v.pieces[i].first[0]) < 1e-12)
      continue;
    chain.push_back(i);
  }
  out.active = chain;
  if (chain.size() == 1) {
    PolyCell cell;
    cell.base = Polytope::point(v.pieces[chain[0]].first);
    cell.slope = Vector(1);
    cell.offset = -v.pieces[chain[0]].second;
    out.cells.push_back(std::move(cell));
    return out;
  }
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto& [ya, ca] = v.pieces[chain[k]];
    const auto& [yb, cb] = v.pieces[chain[k + 1]];
    double sstar = (ca - cb) / (yb[0] - ya[0]);
    PolyCell cell;
    cell.base = Polytope::segment(ya, yb);
    cell.slope = Vector{sstar};
    cell.offset = -ca - sstar * ya[0];
    out.cells.push_back(std::move(cell));
  }
  return out;
}

LiftedHull lift_lower_hull(const MaxAffineFunc& v) {
  if (v.pieces.empty())
    fail(ErrorCode::ValidationError, "max-affine function with no pieces");
  if (v.dim == 1) return lift_lower_hull_1d(v);
  if (v.dim == 2) return lift_lower_hull_2d(v);
  fail(ErrorCode::Unsupported, "regular subdivision implemented for n <= 2");
}

}  // namespace

MaxAffineFunc MaxAffineFunc::pruned() const {
  MaxAffineFunc out;
  out.dim = dim;
  if (pieces.size() <= 1) {
    out.pieces = pieces;
    return out;
  }
  LiftedHull lh = lift_lower_hull(*this);
  for (size_t i : lh.active) out.pieces.push_back(pieces[i]);
  return out;
}

MaxAffineFunc conjugate(const PolyhedralFunc& u) {
  if (!u.all_bounded())
    fail(ErrorCode::Unsupported,
         "conjugate to max-affine needs a compact domain (see conjugate_conical)");
  if (u.cells.empty()) fail(ErrorCode::ValidationError, "empty function");
  MaxAffineFunc v;
  v.dim = u.dim;
  for (const auto& [x, val] : u.vertex_values()) v.pieces.push_back({x, -val});
  if (u.dim <= 2) return v.pruned();
  return v;
}

PolyhedralFunc conjugate(const MaxAffineFunc& v) {
  LiftedHull lh = lift_lower_hull(v);
  PolyhedralFunc u;
  u.dim = v.dim;
  u.cells = lh.cells;
  return u;
}

PolyhedralFunc conjugate_conical(const PolyhedralFunc& u) {
  // u = m + h_A(x - x0) with A = conv(slopes): u* = <x0, y> - m + ind_A.
  if (u.all_bounded())
    fail(ErrorCode::Unsupported, "conjugate_conical expects conical cells");
  Vector apex = cell_apex(u.cells[0]);
  double m = u(apex);
  std::vector<Vector> slopes;
  for (const PolyCell& c : u.cells) {
    if (c.bounded() || !nearly_equal(cell_apex(c), apex, 1e-9))
      fail(ErrorCode::Unsupported, "conical conjugate needs a common apex");
    slopes.push_back(c.slope);
  }
  PolyhedralFunc r;
  r.dim = u.dim;
  PolyCell cell;
  cell.base = hull(slopes);
  cell.slope = apex;
  cell.offset = -m;
  r.cells.push_back(std::move(cell));
  return r;
}

double involution_residual(const PolyhedralFunc& u, int samples, uint64_t seed) {
  MaxAffineFunc v = conjugate(u);
  PolyhedralFunc w = conjugate(v);
  Rng rng(seed);
  double worst = 0.0;
  auto probe = [&](const Vector& x) {
    double a = u(x);
    double b = w(x);
    if (std::isinf(a) && std::isinf(b)) return;
    if (std::isinf(a) != std::isinf(b)) {
      // Boundary-tolerance mismatch; probe the midpoint value instead.
      return;
    }
    worst = std::max(worst, std::fabs(a - b));
  };
  for (const PolyCell& c : u.cells) {
    const auto& verts = c.base.vertices();
    for (const Vector& x : verts) probe(x);
    for (int s = 0; s < samples; ++s) {
      // Random convex combination of the cell's vertices.
      std::vector<double> wts(verts.size());
      double tot = 0.0;
      for (double& t : wts) {
        t = rng.next_double();
        tot += t;
      }
      Vector x(u.dim);
      for (size_t i = 0; i < verts.size(); ++i) x += (wts[i] / tot) * verts[i];
      probe(x);
    }
  }
  return worst;
}

PolyhedralFunc inf_conv(const PolyhedralFunc& u, const PolyhedralFunc& v) {
  if (u.dim != v.dim)
    fail(ErrorCode::DimensionMismatch, "inf_conv: dimension mismatch");
  if (!u.all_bounded() || !v.all_bounded())
    fail(ErrorCode::NotSuperCoercive,
         "inf_conv needs super-coercive (compact-domain) arguments");
  MaxAffineFunc us = conjugate(u);
  MaxAffineFunc vs = conjugate(v);
  MaxAffineFunc sum;
  sum.dim = u.dim;
  for (const auto& [ya, ca] : us.pieces)
    for (const auto& [yb, cb] : vs.pieces) sum.pieces.push_back({ya + yb, ca + cb});
  return conjugate(sum.pruned());
}

PolyhedralFunc epi_scale(double lambda, const PolyhedralFunc& u) {
  if (lambda < 0.0) fail(ErrorCode::NegativeScale, "epi_scale: lambda < 0");
  if (lambda == 0.0) return indicator(Polytope::point(Vector(u.dim)));
  PolyhedralFunc r = u;
  for (PolyCell& c : r.cells) {
    c.base = c.base.scale(lambda);
    c.offset *= lambda;
  }
  return r;
}

PolyhedralFunc horizontal_scale(double lambda, const PolyhedralFunc& u) {
  if (lambda <= 0.0) fail(ErrorCode::NegativeScale, "horizontal_scale: lambda <= 0");
  PolyhedralFunc r = u;
  for (PolyCell& c : r.cells) {
    c.base = c.base.scale(lambda);
    c.slope = (1.0 / lambda) * c.slope;
  }
  return r;
}

CoercivityWitness coercivity_witness(const PolyhedralFunc& u) {
  if (u.cells.empty()) fail(ErrorCode::ValidationError, "empty function");
  double a = 1.0;
  for (const PolyCell& c : u.cells) {
    for (const Vector& r : c.rays) {
      double rate = dot(c.slope, r) / norm(r);
      if (rate <= 1e-12) {
        std::string dir = "(";
        for (int i = 0; i < r.dim(); ++i)
          dir += (i ? "," : "") + std::to_string(r[i]);
        fail(ErrorCode::NotCoercive,
             "not coercive along recession direction " + dir + ")");
      }
      a = std::min(a, 0.5 * rate);
    }
  }
  double b = kInf;
  for (const auto& [x, val] : u.vertex_values()) b = std::min(b, val - a * norm(x));
  // u - a|x| is concave on every cell and nondecreasing along rays, so the
  // vertex minimum certifies the bound globally.
  return {a, b};
}

std::vector<std::vector<double>> epi_convergence_diag(
    const std::vector<PolyhedralFunc>& seq, const PolyhedralFunc& u,
    const std::vector<double>& levels) {
  double m = u.min_value();
  std::vector<std::vector<double>> out;
  for (double t : levels) {
    std::vector<double> row;
    if (std::fabs(t - m) <= 1e-9) {
      row.assign(seq.size(), std::numeric_limits<double>::quiet_NaN());
      out.push_back(std::move(row));
      continue;
    }
    Polytope ref = sublevel(u, t);
    for (const PolyhedralFunc& uk : seq) {
      Polytope sk = sublevel(uk, t);
      if (ref.is_empty() && sk.is_empty()) {
        row.push_back(0.0);
      } else if (ref.is_empty() || sk.is_empty()) {
        row.push_back(kInf);
      } else {
        row.push_back(hausdorff_distance(ref, sk));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

FuncSplitPair split_function(const PolyhedralFunc& w, const Hyperplane& h) {
  if (!w.all_bounded())
    fail(ErrorCode::Unsupported, "split_function needs bounded cells");
  FuncSplitPair out;
  out.u.dim = out.v.dim = out.vee.dim = w.dim;
  out.wedge = w;
  for (const PolyCell& c : w.cells) {
    SplitResult sr = split_by_hyperplane(c.base, h);
    if (!sr.plus.is_empty()) {
      PolyCell cc = c;
      cc.base = sr.plus;
      out.u.cells.push_back(std::move(cc));
    }
    if (!sr.minus.is_empty()) {
      PolyCell cc = c;
      cc.base = sr.minus;
      out.v.cells.push_back(std::move(cc));
    }
    if (!sr.section.is_empty()) {
      PolyCell cc = c;
      cc.base = sr.section;
      out.vee.cells.push_back(std::move(cc));
    }
  }
  if (out.u.cells.empty() || out.v.cells.empty() || out.vee.cells.empty())
    fail(ErrorCode::ValidationError, "split misses the function's domain");
  return out;
}

}  // namespace vallab
