#include "vallab/affine.hpp"

#include <cmath>

namespace vallab {

namespace {

Vector dir(double theta) { return Vector{std::cos(theta), std::sin(theta)}; }
Vector dir_perp(double theta) { return Vector{-std::sin(theta), std::cos(theta)}; }

}  // namespace

SmoothBody2 SmoothBody2::circle(double r) {
  SmoothBody2 b;
  b.h_ = [r](double) { return r; };
  b.hp_ = [](double) { return 0.0; };
  b.hpp_ = [](double) { return 0.0; };
  b.origin_interior_ = r > 0.0;
  return b;
}

SmoothBody2 SmoothBody2::ellipse(double a, double b) {
  SmoothBody2 e;
  auto w = [a, b](double t) {
    double c = std::cos(t), s = std::sin(t);
    return a * a * c * c + b * b * s * s;
  };
  e.h_ = [w](double t) { return std::sqrt(w(t)); };
  e.hp_ = [a, b, w](double t) {
    return (b * b - a * a) * std::sin(2.0 * t) / (2.0 * std::sqrt(w(t)));
  };
  e.hpp_ = [a, b, w](double t) {
    double wp = (b * b - a * a) * std::sin(2.0 * t);
    double wpp = 2.0 * (b * b - a * a) * std::cos(2.0 * t);
    double sw = std::sqrt(w(t));
    return wpp / (2.0 * sw) - wp * wp / (4.0 * w(t) * sw);
  };
  e.origin_interior_ = a > 0.0 && b > 0.0;
  return e;
}

SmoothBody2 SmoothBody2::fourier(double c0, const std::vector<double>& cos_coef,
                                 const std::vector<double>& sin_coef) {
  SmoothBody2 b;
  auto eval = [c0, cos_coef, sin_coef](double t, int deriv) {
    double s = deriv == 0 ? c0 : 0.0;
    for (size_t i = 0; i < cos_coef.size(); ++i) {
      double k = static_cast<double>(i + 2);
      double kp = std::pow(k, deriv);
      double phase = t * k + deriv * kPi / 2.0;
      s += cos_coef[i] * kp * std::cos(phase);
    }
    for (size_t i = 0; i < sin_coef.size(); ++i) {
      double k = static_cast<double>(i + 2);
      double kp = std::pow(k, deriv);
      double phase = t * k + deriv * kPi / 2.0;
      s += sin_coef[i] * kp * std::sin(phase);
    }
    return s;
  };
  b.h_ = [eval](double t) { return eval(t, 0); };
  b.hp_ = [eval](double t) { return eval(t, 1); };
  b.hpp_ = [eval](double t) { return eval(t, 2); };
  b.origin_interior_ = true;
  return b;
}

SmoothBody2 SmoothBody2::polygon_like(double delta) {
  // h + h'' = delta (1 - cos 4t) / 2 solves to
  // h = delta/2 + (delta/30) cos 4t (frequency-4 particular solution).
  SmoothBody2 b;
  b.h_ = [delta](double t) { return 0.5 * delta + delta / 30.0 * std::cos(4.0 * t); };
  b.hp_ = [delta](double t) { return -4.0 * delta / 30.0 * std::sin(4.0 * t); };
  b.hpp_ = [delta](double t) { return -16.0 * delta / 30.0 * std::cos(4.0 * t); };
  b.origin_interior_ = true;
  return b;
}

double SmoothBody2::h(double theta) const {
  if (!h_) fail(ErrorCode::Unsupported, "support handle unavailable");
  return h_(theta);
}
double SmoothBody2::hp(double theta) const {
  if (!hp_) fail(ErrorCode::Unsupported, "support handle unavailable");
  return hp_(theta);
}
double SmoothBody2::hpp(double theta) const {
  if (!hpp_) fail(ErrorCode::Unsupported, "support handle unavailable");
  return hpp_(theta);
}

Vector SmoothBody2::boundary_point(double theta) const {
  if (point_) return point_(theta);
  Vector u = dir(theta), up = dir_perp(theta);
  return h(theta) * u + hp(theta) * up;
}

Vector SmoothBody2::tangent_dir(double theta) const {
  if (tangent_) return tangent_(theta);
  return dir_perp(theta);
}

SmoothBody2 SmoothBody2::sl2_image(const Mat& phi) const {
  if (std::fabs(phi.det() - 1.0) > 1e-10)
    fail(ErrorCode::ValidationError, "sl2_image needs a unimodular map");
  SmoothBody2 out;
  SmoothBody2 self = *this;  // capture by value keeps the handles alive
  out.point_ = [self, phi](double t) { return phi.apply(self.boundary_point(t)); };
  out.tangent_ = [self, phi](double t) { return phi.apply(self.tangent_dir(t)); };
  out.origin_interior_ = origin_interior_;
  return out;
}

double SmoothBody2::triangle_area(double t1, double t2) const {
  if (!has_support()) return support_triangle(*this, t1, t2).area;
  double dt = t2 - t1;
  double sd = std::sin(dt);
  if (std::fabs(sd) <= 1e-14)
    fail(ErrorCode::ParallelTangents, "tangent lines are parallel");
  // 20-point Gauss-Legendre nodes/weights on [-1, 1].
  static const double kX[10] = {
      0.0765265211334973, 0.2277858511416451, 0.3737060887154196,
      0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
      0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
      0.9931285991850949};
  static const double kW[10] = {
      0.1527533871307258, 0.1491729864726037, 0.1420961093183821,
      0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
      0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
      0.0176140071391521};
  double mid = 0.5 * (t1 + t2), half = 0.5 * dt;
  double ip = 0.0, im = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (double s : {-kX[i], kX[i]}) {
      double t = mid + half * s;
      double g = curvature_radius(t);
      ip += kW[i] * g * std::sin(t2 - t);
      im += kW[i] * g * std::sin(t - t1);
    }
  }
  ip *= half;
  im *= half;
  return ip * im / (2.0 * sd);
}

SupportTriangle support_triangle(const SmoothBody2& k, double t1, double t2) {
  SupportTriangle tr;
  tr.x = k.boundary_point(t1);
  tr.y = k.boundary_point(t2);
  Vector d1 = k.tangent_dir(t1);
  Vector d2 = k.tangent_dir(t2);
  double denom = cross2(d1, d2);
  double scale = norm(d1) * norm(d2);
  if (std::fabs(denom) <= 1e-14 * scale)
    fail(ErrorCode::ParallelTangents, "tangent lines are parallel");
  // x + s d1 = y + t d2.
  Vector rhs = tr.y - tr.x;
  double s = cross2(rhs, d2) / denom;
  tr.apex = tr.x + s * d1;
  tr.area = 0.5 * std::fabs(cross2(tr.apex - tr.x, tr.y - tr.x));
  return tr;
}

SubdivisionResult affine_length_subdivision(const SmoothBody2& k, int depth) {
  if (depth < 1) fail(ErrorCode::ValidationError, "depth must be >= 1");
  SubdivisionResult out;
  for (int level = 0; level < depth; ++level) {
    int n = 4 << level;
    KahanSum sum;
    for (int j = 0; j < n; ++j) {
      double t1 = 2.0 * kPi * j / n;
      double t2 = 2.0 * kPi * (j + 1) / n;
      sum.add(std::cbrt(8.0 * k.triangle_area(t1, t2)));
    }
    out.trace.push_back(sum.value());
  }
  out.estimate = out.trace.back();
  return out;
}

double affine_surface_area_smooth(const SmoothBody2& k, int nodes) {
  if (nodes < 8) fail(ErrorCode::ValidationError, "need at least 8 nodes");
  KahanSum sum;
  for (int j = 0; j < nodes; ++j) {
    double t = 2.0 * kPi * j / nodes;
    double g = k.curvature_radius(t);
    if (g <= 0.0)
      fail(ErrorCode::NonConvexSupport, "h + h'' <= 0 at a quadrature node");
    sum.add(std::cbrt(g * g));
  }
  return sum.value() * 2.0 * kPi / nodes;
}

double orlicz_asa(const SmoothBody2& k, const std::function<double(double)>& zeta,
                  int nodes) {
  if (!k.origin_interior())
    fail(ErrorCode::OriginNotInterior, "orlicz_asa needs the origin inside");
  KahanSum sum;
  for (int j = 0; j < nodes; ++j) {
    double t = 2.0 * kPi * j / nodes;
    double g = k.curvature_radius(t);
    double hv = k.h(t);
    if (g <= 0.0)
      fail(ErrorCode::NonConvexSupport, "h + h'' <= 0 at a quadrature node");
    if (hv <= 0.0)
      fail(ErrorCode::OriginNotInterior, "support is nonpositive at a node");
    double kappa0 = 1.0 / (g * hv * hv * hv);
    sum.add(zeta(kappa0) * hv * g);
  }
  return sum.value() * 2.0 * kPi / nodes;
}

JensenCheck asa_upper_bound_check(const SmoothBody2& k, int nodes) {
  JensenCheck out;
  out.lhs = affine_surface_area_smooth(k, nodes);
  KahanSum per;
  for (int j = 0; j < nodes; ++j) {
    double t = 2.0 * kPi * j / nodes;
    per.add(k.curvature_radius(t));
  }
  double perimeter = per.value() * 2.0 * kPi / nodes;
  out.rhs = std::cbrt(2.0 * kPi) * std::pow(perimeter, 2.0 / 3.0);
  out.holds = out.lhs <= out.rhs + 1e-9;
  return out;
}

}  // namespace vallab
