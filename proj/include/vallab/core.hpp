#ifndef VALLAB_CORE_HPP
#define VALLAB_CORE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace vallab {

// Module-wide comparison tolerance; vertex dedup uses kDedupEps.
inline constexpr double kEps = 1e-10;
inline constexpr double kDedupEps = 1e-12;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ErrorCode {
  DimensionMismatch,
  Unsupported,
  EmptyBody,
  InvalidRotation,
  NegativeRadius,
  DegenerateSimplex,
  MissingFacets,
  NotFullDimensional,
  WindowTooSmall,
  PrecisionTooLow,
  ParallelTangents,
  NonConvexSupport,
  OriginNotInterior,
  OriginOutside,
  NotCoercive,
  NotSuperCoercive,
  NegativeScale,
  NonConvexInput,
  NonConvexMin,
  InsufficientNodes,
  SingularSystem,
  ParseError,
  ValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

const char* error_name(ErrorCode code);

// Dense vector in R^n. Small n (<= 6) throughout.
struct Vector {
  std::vector<double> coords;

  Vector() = default;
  explicit Vector(int n) : coords(static_cast<size_t>(n), 0.0) {}
  Vector(std::initializer_list<double> xs) : coords(xs) {}
  explicit Vector(std::vector<double> xs) : coords(std::move(xs)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double& operator[](int i) { return coords[static_cast<size_t>(i)]; }
  double operator[](int i) const { return coords[static_cast<size_t>(i)]; }

  Vector& operator+=(const Vector& o) {
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  Vector& operator*=(double s) {
    for (double& c : coords) c *= s;
    return *this;
  }
};

inline Vector operator+(Vector a, const Vector& b) { return a += b; }
inline Vector operator-(Vector a, const Vector& b) { return a -= b; }
inline Vector operator*(double s, Vector v) { return v *= s; }
inline Vector operator*(Vector v, double s) { return v *= s; }
inline Vector operator-(Vector v) { return v *= -1.0; }

inline double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

inline double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

inline double dist(const Vector& a, const Vector& b) { return norm(a - b); }

Vector normalized(const Vector& v);

// 2-D cross product (scalar) and 3-D cross product.
inline double cross2(const Vector& a, const Vector& b) {
  return a[0] * b[1] - a[1] * b[0];
}
Vector cross3(const Vector& a, const Vector& b);

bool nearly_equal(const Vector& a, const Vector& b, double tol = kDedupEps);

// Lexicographic order with tolerance-free comparison (inputs are already
// canonicalized doubles).
bool lex_less(const Vector& a, const Vector& b);

// Oriented hyperplane {x : <normal, x> = offset} with unit normal.
struct Hyperplane {
  Vector normal;
  double offset = 0.0;

  Hyperplane() = default;
  Hyperplane(Vector n, double c);

  double signed_dist(const Vector& x) const { return dot(normal, x) - offset; }
};

// Square matrix, row-major, for rotations and small linear solves.
struct Mat {
  int n = 0;
  std::vector<double> a;  // n*n entries

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int dim);
  static Mat rotation2(double angle);
  // Rotation about a (unit) axis in R^3 by angle.
  static Mat rotation3(const Vector& axis, double angle);

  Vector apply(const Vector& v) const;
  Mat transpose() const;
  Mat mul(const Mat& o) const;
  double det() const;  // n <= 3
};

bool is_proper_rotation(const Mat& m, double tol = kEps);

// Deterministic RNG (splitmix64 core); identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller (deterministic pairing).
  double next_normal();

  // Derive an independent stream for chunk i.
  Rng fork(uint64_t i) const {
    Rng r(state_ ^ (0xd1342543de82ef95ULL * (i + 1)));
    r.next_u64();
    return r;
  }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Compensated accumulation for long sums whose tolerance budget is tight.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Gamma-function based unit ball volumes: kappa_j = pi^{j/2}/Gamma(j/2+1).
struct KappaTable {
  std::vector<double> kappa;  // kappa[0..n]

  explicit KappaTable(int n);
  double operator[](int j) const { return kappa[static_cast<size_t>(j)]; }
};

double unit_ball_volume(int j);

// Solve a dense linear system in place (partial pivoting). Throws
// SingularSystem when the pivot collapses.
std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                 std::vector<double> b);

}  // namespace vallab

#endif  // VALLAB_CORE_HPP
