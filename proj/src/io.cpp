#include "vallab/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace vallab {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& reason) {
  fail(ErrorCode::ParseError, path + ": " + reason);
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("$", "invalid JSON");
  return j;
}

double need_number(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    parse_fail(path + "." + key, "expected a number");
  return j[key].get<double>();
}

int need_int(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    parse_fail(path + "." + key, "expected an integer");
  return j[key].get<int>();
}

std::string need_string(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    parse_fail(path + "." + key, "expected a string");
  return j[key].get<std::string>();
}

Vector parse_vector(const json& j, const std::string& path, int dim) {
  if (!j.is_array()) parse_fail(path, "expected an array of coordinates");
  Vector v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) parse_fail(path, "coordinates must be numbers");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  if (dim > 0 && v.dim() != dim) parse_fail(path, "coordinate count mismatch");
  return v;
}

std::vector<Vector> parse_points(const json& j, const std::string& path, int dim) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a nonempty array");
  std::vector<Vector> pts;
  for (size_t i = 0; i < j.size(); ++i)
    pts.push_back(parse_vector(j[i], path + "[" + std::to_string(i) + "]", dim));
  return pts;
}

std::vector<double> parse_reals(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a nonempty array");
  std::vector<double> xs;
  for (const auto& e : j) {
    if (!e.is_number()) parse_fail(path, "entries must be numbers");
    xs.push_back(e.get<double>());
  }
  return xs;
}

std::string emit_reals(const std::vector<double>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += format_double(xs[i]);
  }
  return s + "]";
}

std::string emit_points(const std::vector<Vector>& pts) {
  std::string s = "[";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += emit_reals(pts[i].coords);
  }
  return s + "]";
}

ParsedBody parse_body_json(const json& j) {
  ParsedBody out;
  std::string kind = need_string(j, "$", "kind");
  out.kind = kind;
  int dim = need_int(j, "$", "dim");
  if (dim < 1) parse_fail("$.dim", "dimension must be >= 1");

  if (kind == "vertices") {
    std::vector<Vector> pts = parse_points(j["points"], "$.points", dim);
    out.polytope = hull(pts);
    out.canonical = "{\"dim\":" + std::to_string(dim) +
                    ",\"kind\":\"vertices\",\"points\":" +
                    emit_points(out.polytope->vertices()) + "}";
    return out;
  }
  if (kind == "box") {
    std::vector<double> lo, hi;
    if (j.contains("sides")) {
      std::vector<double> sides = parse_reals(j["sides"], "$.sides");
      lo.assign(sides.size(), 0.0);
      hi = sides;
    } else {
      lo = parse_reals(j["lo"], "$.lo");
      hi = parse_reals(j["hi"], "$.hi");
    }
    if (static_cast<int>(lo.size()) != dim) parse_fail("$.sides", "length != dim");
    out.polytope = Polytope::box(lo, hi);
    out.canonical = "{\"dim\":" + std::to_string(dim) + ",\"kind\":\"box\",\"lo\":" +
                    emit_reals(lo) + ",\"hi\":" + emit_reals(hi) + "}";
    return out;
  }
  if (kind == "simplex") {
    if (j.contains("vertices")) {
      std::vector<Vector> pts = parse_points(j["vertices"], "$.vertices", dim);
      if (static_cast<int>(pts.size()) != dim + 1)
        parse_fail("$.vertices", "a simplex needs dim + 1 vertices");
      out.polytope = Polytope::simplex(pts);
      out.canonical = "{\"dim\":" + std::to_string(dim) +
                      ",\"kind\":\"simplex\",\"vertices\":" +
                      emit_points(out.polytope->vertices()) + "}";
    } else {
      double scale = j.contains("scale") ? need_number(j, "$", "scale") : 1.0;
      out.polytope = Polytope::standard_simplex(dim, scale);
      out.canonical = "{\"dim\":" + std::to_string(dim) +
                      ",\"kind\":\"simplex\",\"scale\":" + format_double(scale) + "}";
    }
    return out;
  }
  if (kind == "regular_polygon") {
    if (dim != 2) parse_fail("$.dim", "regular_polygon lives in the plane");
    int k = need_int(j, "$", "k");
    double radius = need_number(j, "$", "radius");
    if (k < 3) parse_fail("$.k", "need k >= 3");
    out.polytope = Polytope::regular_polygon(k, radius);
    out.canonical = "{\"dim\":2,\"kind\":\"regular_polygon\",\"k\":" +
                    std::to_string(k) + ",\"radius\":" + format_double(radius) + "}";
    return out;
  }
  if (kind == "ball_poly") {
    int res = need_int(j, "$", "resolution");
    double radius = j.contains("radius") ? need_number(j, "$", "radius") : 1.0;
    out.polytope = Polytope::ball_approx(dim, res, radius);
    out.canonical = "{\"dim\":" + std::to_string(dim) +
                    ",\"kind\":\"ball_poly\",\"resolution\":" + std::to_string(res) +
                    ",\"radius\":" + format_double(radius) + "}";
    return out;
  }
  if (kind == "ellipse") {
    if (dim != 2) parse_fail("$.dim", "ellipse lives in the plane");
    double a = need_number(j, "$", "a");
    double b = need_number(j, "$", "b");
    if (a <= 0 || b <= 0) parse_fail("$.a", "semiaxes must be positive");
    out.smooth = SmoothBody2::ellipse(a, b);
    out.canonical = "{\"dim\":2,\"kind\":\"ellipse\",\"a\":" + format_double(a) +
                    ",\"b\":" + format_double(b) + "}";
    return out;
  }
  parse_fail("$.kind", "unknown body kind '" + kind + "'");
}

}  // namespace

ParsedBody parse_body(const std::string& text) {
  return parse_body_json(parse_json(text));
}

ParsedFunc parse_function(const std::string& text) {
  json j = parse_json(text);
  ParsedFunc out;
  std::string kind = need_string(j, "$", "kind");
  out.kind = kind;

  auto body_of = [&](const char* key) {
    if (!j.contains(key)) parse_fail(std::string("$.") + key, "missing body");
    ParsedBody b = parse_body_json(j[key]);
    if (!b.polytope) parse_fail(std::string("$.") + key, "expected a polytopal body");
    return b;
  };

  if (kind == "indicator") {
    ParsedBody b = body_of("body");
    out.poly = indicator(*b.polytope);
    out.dim = b.polytope->dim();
    out.canonical = "{\"kind\":\"indicator\",\"body\":" + b.canonical + "}";
    return out;
  }
  if (kind == "linear_indicator") {
    ParsedBody b = body_of("body");
    Vector y = parse_vector(j["y"], "$.y", b.polytope->dim());
    out.poly = linear_plus_indicator(y, *b.polytope);
    out.dim = b.polytope->dim();
    out.canonical = "{\"kind\":\"linear_indicator\",\"y\":" + emit_reals(y.coords) +
                    ",\"body\":" + b.canonical + "}";
    return out;
  }
  if (kind == "gauge") {
    ParsedBody b = body_of("body");
    out.poly = gauge(*b.polytope);
    out.dim = b.polytope->dim();
    out.canonical = "{\"kind\":\"gauge\",\"body\":" + b.canonical + "}";
    return out;
  }
  if (kind == "cells") {
    if (!j.contains("dim")) parse_fail("$.dim", "cells need an ambient dimension");
    int dim = need_int(j, "$", "dim");
    PolyhedralFunc u;
    u.dim = dim;
    if (!j["cells"].is_array() || j["cells"].empty())
      parse_fail("$.cells", "expected a nonempty cell array");
    std::string canon = "{\"kind\":\"cells\",\"dim\":" + std::to_string(dim) +
                        ",\"cells\":[";
    for (size_t i = 0; i < j["cells"].size(); ++i) {
      const json& cj = j["cells"][i];
      std::string path = "$.cells[" + std::to_string(i) + "]";
      PolyCell c;
      c.base = hull(parse_points(cj["vertices"], path + ".vertices", dim));
      c.slope = parse_vector(cj["slope"], path + ".slope", dim);
      c.offset = need_number(cj, path, "offset");
      if (i) canon += ",";
      canon += "{\"vertices\":" + emit_points(c.base.vertices()) +
               ",\"slope\":" + emit_reals(c.slope.coords) +
               ",\"offset\":" + format_double(c.offset) + "}";
      u.cells.push_back(std::move(c));
    }
    canon += "]}";
    // Cell patchworks must certify convexity before use.
    if (u.all_bounded() && involution_residual(u, 30, 0) > 1e-8)
      fail(ErrorCode::NonConvexInput, "cells do not describe a convex function");
    out.poly = std::move(u);
    out.dim = dim;
    out.canonical = canon;
    return out;
  }
  if (kind == "max_affine") {
    if (!j.contains("dim")) parse_fail("$.dim", "max_affine needs a dimension");
    int dim = need_int(j, "$", "dim");
    MaxAffineFunc v;
    v.dim = dim;
    if (!j["pieces"].is_array() || j["pieces"].empty())
      parse_fail("$.pieces", "expected a nonempty piece array");
    for (size_t i = 0; i < j["pieces"].size(); ++i) {
      const json& pj = j["pieces"][i];
      std::string path = "$.pieces[" + std::to_string(i) + "]";
      Vector slope = parse_vector(pj["slope"], path + ".slope", dim);
      double offset = need_number(pj, path, "offset");
      v.pieces.push_back({slope, offset});
    }
    MaxAffineFunc canon_v = dim <= 2 ? v.pruned() : v;
    std::string canon = "{\"kind\":\"max_affine\",\"dim\":" + std::to_string(dim) +
                        ",\"pieces\":[";
    for (size_t i = 0; i < canon_v.pieces.size(); ++i) {
      if (i) canon += ",";
      canon += "{\"slope\":" + emit_reals(canon_v.pieces[i].first.coords) +
               ",\"offset\":" + format_double(canon_v.pieces[i].second) + "}";
    }
    canon += "]}";
    out.max_affine = std::move(canon_v);
    out.dim = dim;
    out.canonical = canon;
    return out;
  }
  if (kind == "radial_quadratic") {
    int dim = need_int(j, "$", "dim");
    double coef = j.contains("coef") ? need_number(j, "$", "coef") : 1.0;
    if (coef <= 0) parse_fail("$.coef", "coefficient must be positive");
    RadialFunc u;
    u.phi = [coef](double s) { return 0.5 * coef * s * s; };
    u.phi_prime = [coef](double s) { return coef * s; };
    u.quadratic = true;
    u.quad_coef = coef;
    out.radial = std::move(u);
    out.dim = dim;
    out.canonical = "{\"kind\":\"radial_quadratic\",\"dim\":" + std::to_string(dim) +
                    ",\"coef\":" + format_double(coef) + "}";
    return out;
  }
  parse_fail("$.kind", "unknown function kind '" + kind + "'");
}

DensityFunc parse_density(const std::string& text) {
  json j = parse_json(text);
  std::string kind = need_string(j, "$", "kind");
  std::vector<double> breaks = parse_reals(j["breaks"], "$.breaks");
  std::vector<double> values = parse_reals(j["values"], "$.values");
  if (kind == "halfline") return DensityFunc::on_halfline(breaks, values);
  if (kind == "radial") {
    int dim = need_int(j, "$", "dim");
    return DensityFunc::radial(dim, breaks, values);
  }
  parse_fail("$.kind", "unknown density kind '" + kind + "'");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void Report::set_digest(const std::string& payload) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(payload)));
  digest_ = buf;
}

void Report::add_result(const std::string& key, double value) {
  results_.push_back({key, value});
}
void Report::add_text(const std::string& key, const std::string& value) {
  texts_.push_back({key, value});
}
void Report::add_residual(const std::string& key, double value) {
  residuals_.push_back({key, value});
}
void Report::add_tolerance(const std::string& key, double value) {
  tolerances_.push_back({key, value});
}

std::string Report::to_json() const {
  std::string s = "{\"command\":\"" + command_ + "\"";
  if (!digest_.empty()) s += ",\"inputs_digest\":\"" + digest_ + "\"";
  if (has_seed_) s += ",\"seed\":" + std::to_string(seed_);
  if (!texts_.empty()) {
    s += ",\"verdicts\":{";
    for (size_t i = 0; i < texts_.size(); ++i) {
      if (i) s += ",";
      s += "\"" + texts_[i].first + "\":\"" + texts_[i].second + "\"";
    }
    s += "}";
  }
  if (!results_.empty()) {
    s += ",\"results\":{";
    for (size_t i = 0; i < results_.size(); ++i) {
      if (i) s += ",";
      s += "\"" + results_[i].first + "\":" + format_double(results_[i].second);
    }
    s += "}";
  }
  if (!residuals_.empty()) {
    s += ",\"residuals\":{";
    for (size_t i = 0; i < residuals_.size(); ++i) {
      if (i) s += ",";
      s += "\"" + residuals_[i].first + "\":" + format_double(residuals_[i].second);
    }
    s += "}";
  }
  if (!tolerances_.empty()) {
    s += ",\"tolerances\":{";
    for (size_t i = 0; i < tolerances_.size(); ++i) {
      if (i) s += ",";
      s += "\"" + tolerances_[i].first + "\":" + format_double(tolerances_[i].second);
    }
    s += "}";
  }
  if (!error_.empty()) s += ",\"error\":\"" + error_ + "\"";
  s += ",\"wall_ms\":" + format_double(wall_ms_) + "}";
  return s;
}

}  // namespace vallab
