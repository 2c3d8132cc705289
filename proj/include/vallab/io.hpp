#ifndef VALLAB_IO_HPP
#define VALLAB_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "vallab/affine.hpp"
#include "vallab/fconv.hpp"
#include "vallab/fval.hpp"
#include "vallab/polytope.hpp"

namespace vallab {

// A body spec parses to a polytope or (for the "ellipse" kind) a smooth body.
struct ParsedBody {
  std::string kind;
  std::optional<Polytope> polytope;
  std::optional<SmoothBody2> smooth;
  std::string canonical;  // canonical serialization (byte-stable)
};

ParsedBody parse_body(const std::string& text);

struct ParsedFunc {
  std::string kind;
  std::optional<PolyhedralFunc> poly;
  std::optional<MaxAffineFunc> max_affine;
  std::optional<RadialFunc> radial;
  int dim = 0;
  std::string canonical;
};

ParsedFunc parse_function(const std::string& text);

DensityFunc parse_density(const std::string& text);

// 17-significant-digit decimal rendering used by every serializer.
std::string format_double(double x);

uint64_t fnv1a(const std::string& s);

// Deterministic report: ordered sections, wall time last so byte comparisons
// can drop it.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_digest(const std::string& payload);
  void set_seed(uint64_t seed) { seed_ = static_cast<long long>(seed); has_seed_ = true; }
  void add_result(const std::string& key, double value);
  void add_text(const std::string& key, const std::string& value);
  void add_residual(const std::string& key, double value);
  void add_tolerance(const std::string& key, double value);
  void set_error(const std::string& message) { error_ = message; }
  void set_wall_ms(double ms) { wall_ms_ = ms; }

  std::string to_json() const;

 private:
  std::string command_;
  std::string digest_;
  std::vector<std::pair<std::string, double>> results_;
  std::vector<std::pair<std::string, std::string>> texts_;
  std::vector<std::pair<std::string, double>> residuals_;
  std::vector<std::pair<std::string, double>> tolerances_;
  long long seed_ = 0;
  bool has_seed_ = false;
  std::string error_;
  double wall_ms_ = 0.0;
};

}  // namespace vallab

#endif  // VALLAB_IO_HPP
