#include "vallab/core.hpp"

#include <algorithm>
#include <cmath>

namespace vallab {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::EmptyBody: return "EmptyBody";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::MissingFacets: return "MissingFacets";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::ParallelTangents: return "ParallelTangents";
    case ErrorCode::NonConvexSupport: return "NonConvexSupport";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::OriginOutside: return "OriginOutside";
    case ErrorCode::NotCoercive: return "NotCoercive";
    case ErrorCode::NotSuperCoercive: return "NotSuperCoercive";
    case ErrorCode::NegativeScale: return "NegativeScale";
    case ErrorCode::NonConvexInput: return "NonConvexInput";
    case ErrorCode::NonConvexMin: return "NonConvexMin";
    case ErrorCode::InsufficientNodes: return "InsufficientNodes";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Vector normalized(const Vector& v) {
  double n = norm(v);
  if (n <= 0.0) fail(ErrorCode::ValidationError, "cannot normalize zero vector");
  Vector r = v;
  r *= 1.0 / n;
  return r;
}

Vector cross3(const Vector& a, const Vector& b) {
  return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

bool nearly_equal(const Vector& a, const Vector& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (std::fabs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

bool lex_less(const Vector& a, const Vector& b) {
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

Hyperplane::Hyperplane(Vector n, double c) {
  double len = norm(n);
  if (len <= 0.0) fail(ErrorCode::ValidationError, "hyperplane normal is zero");
  normal = (1.0 / len) * n;
  offset = c / len;
}

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::rotation2(double angle) {
  Mat m(2);
  double c = std::cos(angle), s = std::sin(angle);
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

Mat Mat::rotation3(const Vector& axis, double angle) {
  Vector u = normalized(axis);
  double c = std::cos(angle), s = std::sin(angle);
  Mat m(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m.at(i, j) = (1.0 - c) * u[i] * u[j] + (i == j ? c : 0.0);
    }
  }
  m.at(0, 1) -= s * u[2];
  m.at(0, 2) += s * u[1];
  m.at(1, 0) += s * u[2];
  m.at(1, 2) -= s * u[0];
  m.at(2, 0) -= s * u[1];
  m.at(2, 1) += s * u[0];
  return m;
}

Vector Mat::apply(const Vector& v) const {
  Vector r(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i);
  return r;
}

Mat Mat::mul(const Mat& o) const {
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

double Mat::det() const {
  if (n == 1) return at(0, 0);
  if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n == 3) {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }
  fail(ErrorCode::Unsupported, "det only for n <= 3");
}

bool is_proper_rotation(const Mat& m, double tol) {
  Mat mtm = m.transpose().mul(m);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      double want = (i == j) ? 1.0 : 0.0;
      if (std::fabs(mtm.at(i, j) - want) > tol) return false;
    }
  }
  return std::fabs(m.det() - 1.0) <= tol;
}

double Rng::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  double u2 = next_double();
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

double unit_ball_volume(int j) {
  return std::pow(kPi, 0.5 * j) / std::tgamma(0.5 * j + 1.0);
}

KappaTable::KappaTable(int n) {
  kappa.resize(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) kappa[static_cast<size_t>(j)] = unit_ball_volume(j);
}

std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                 std::vector<double> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    if (std::fabs(a[piv][col]) < 1e-14) {
      fail(ErrorCode::SingularSystem, "singular linear system");
    }
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (size_t i = n; i-- > 0;) {
    double s = b[i];
    for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace vallab
