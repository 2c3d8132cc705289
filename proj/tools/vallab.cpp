// Command-line driver for the valuation laboratory: intrinsic volumes,
// decompositions, Dehn symbols, affine length, kinematic integrals and
// valuations on convex functions, all emitting deterministic JSON reports.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vallab/dehn.hpp"
#include "vallab/intrinsic.hpp"
#include "vallab/io.hpp"

using namespace vallab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t default_seed() {
  if (const char* env = std::getenv("VALLAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

Polytope need_polytope(const ParsedBody& b, const std::string& what) {
  if (!b.polytope) fail(ErrorCode::ValidationError, what + ": need a polytopal body");
  return *b.polytope;
}

FuncValuation named_valuation(const std::string& name, const DensityFunc* zeta) {
  FuncValuation z;
  if (name == "exp_min") {
    z.evaluate = [](const PolyhedralFunc& u) { return exp_min(u); };
  } else if (name == "exp_integral") {
    z.evaluate = [](const PolyhedralFunc& u) { return exp_integral(u); };
  } else if (name == "grad") {
    if (!zeta) fail(ErrorCode::ValidationError, "grad valuation needs --zeta");
    DensityFunc d = *zeta;
    z.evaluate = [d](const PolyhedralFunc& u) { return grad_valuation(u, d); };
  } else if (name == "squared_integral") {
    z.evaluate = [](const PolyhedralFunc& u) {
      double e = exp_integral(u);
      return e * e;
    };
  } else {
    fail(ErrorCode::ValidationError, "unknown valuation '" + name + "'");
  }
  return z;
}

int emit(Report& rep, const Timer& timer, int code = 0) {
  rep.set_wall_ms(timer.ms());
  std::cout << rep.to_json() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vallab: valuations on convex bodies and convex functions"};
  app.require_subcommand(1);

  std::string body_path, a_path, b_path, k_path, l_path, func_path, zeta_path,
      csv_path, valuation, pairs_mode = "split";
  double radius = 0.5, t_param = 0.5, volume_tol = 1e-12;
  int depth = 12, cyl_m = 0, comp_n = 2, pair_count = 20;
  long long samples = 1000000, height = 10000;
  int digits = 64;
  uint64_t seed = default_seed();
  bool do_cylinder = false;

  auto* c_intr = app.add_subcommand("intrinsic", "intrinsic volumes of a body");
  c_intr->add_option("--body", body_path)->required();

  auto* c_st = app.add_subcommand("steiner", "Steiner polynomial value");
  c_st->add_option("--body", body_path)->required();
  c_st->add_option("--r", radius)->required();

  auto* c_dec = app.add_subcommand("decompose", "simplex decompositions");
  c_dec->add_option("--simplex", body_path)->required();
  c_dec->add_option("--t", t_param);
  c_dec->add_option("--m", cyl_m);
  c_dec->add_flag("--cylinder", do_cylinder);

  auto* c_dehn = app.add_subcommand("dehn", "compare Dehn symbols");
  c_dehn->add_option("--a", a_path)->required();
  c_dehn->add_option("--b", b_path)->required();
  c_dehn->add_option("--height", height);
  c_dehn->add_option("--digits", digits);

  auto* c_h3 = app.add_subcommand("hilbert3", "Hilbert third problem demo");
  c_h3->add_option("--volume-tol", volume_tol);

  auto* c_al = app.add_subcommand("affinelength", "affine length estimate");
  c_al->add_option("--body", body_path)->required();
  c_al->add_option("--depth", depth);
  c_al->add_option("--csv", csv_path);

  auto* c_kin = app.add_subcommand("kinematic", "planar kinematic integral");
  c_kin->add_option("--k", k_path)->required();
  c_kin->add_option("--l", l_path)->required();
  c_kin->add_option("--samples", samples);
  c_kin->add_option("--seed", seed);
  c_kin->add_option("--csv", csv_path);

  auto* c_fv = app.add_subcommand("fval", "valuation of a convex function");
  c_fv->add_option("--func", func_path)->required();
  c_fv->add_option("--valuation", valuation)->required();
  c_fv->add_option("--zeta", zeta_path);

  auto* c_df = app.add_subcommand("decompose-fval", "epi-homogeneous components");
  c_df->add_option("--func", func_path)->required();
  c_df->add_option("--valuation", valuation)->required();
  c_df->add_option("--zeta", zeta_path);
  c_df->add_option("--n", comp_n);

  auto* c_chk = app.add_subcommand("check", "valuation identity harness");
  c_chk->add_option("--valuation", valuation)->required();
  c_chk->add_option("--pairs", pairs_mode);
  c_chk->add_option("--count", pair_count);
  c_chk->add_option("--zeta", zeta_path);
  c_chk->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);
  Timer timer;

  try {
    if (c_intr->parsed()) {
      Report rep("intrinsic");
      std::string text = slurp(body_path);
      rep.set_digest(text);
      Polytope p = need_polytope(parse_body(text), "intrinsic");
      IntrinsicVector iv = intrinsic_volumes(p);
      for (int j = 0; j <= p.dim(); ++j)
        rep.add_result("V" + std::to_string(j), iv[j]);
      return emit(rep, timer);
    }

    if (c_st->parsed()) {
      Report rep("steiner");
      std::string text = slurp(body_path);
      rep.set_digest(text);
      Polytope p = need_polytope(parse_body(text), "steiner");
      rep.add_result("r", radius);
      rep.add_result("volume", steiner_volume(p, radius));
      return emit(rep, timer);
    }

    if (c_dec->parsed()) {
      Report rep(do_cylinder ? "decompose/cylinder" : "decompose/canonical");
      std::string text = slurp(body_path);
      rep.set_digest(text);
      Polytope s = need_polytope(parse_body(text), "decompose");
      std::vector<DecompositionPiece> pieces =
          do_cylinder ? cylinder_decomposition(s, cyl_m)
                      : canonical_simplex_decomposition(s, t_param);
      double total = 0.0;
      for (const DecompositionPiece& piece : pieces) {
        double v = volume(piece.body);
        rep.add_result(piece.label + ".volume", v);
        rep.add_result(piece.label + ".multiplicity",
                       static_cast<double>(piece.multiplicity));
        total += static_cast<double>(piece.multiplicity) * v;
      }
      rep.add_result("total_volume", total);
      rep.add_result("simplex_volume", volume(s));
      return emit(rep, timer);
    }

    if (c_dehn->parsed()) {
      Report rep("dehn");
      std::string ta = slurp(a_path), tb = slurp(b_path);
      rep.set_digest(ta + tb);
      Polytope pa = need_polytope(parse_body(ta), "dehn --a");
      Polytope pb = need_polytope(parse_body(tb), "dehn --b");
      DehnSymbol sa = dehn_symbol(pa, digits);
      DehnSymbol sb = dehn_symbol(pb, digits);
      RelationVerdict v = symbol_equal(sa, sb, height, digits);
      const char* names[] = {"Equal", "Distinct", "Unknown"};
      rep.add_text("verdict", names[static_cast<int>(v.kind)]);
      rep.add_result("height_bound", static_cast<double>(v.height_bound));
      rep.add_result("terms_a", static_cast<double>(sa.terms.size()));
      rep.add_result("terms_b", static_cast<double>(sb.terms.size()));
      rep.add_residual("residual_length", v.residual_length);
      return emit(rep, timer, v.kind == RelationVerdict::Kind::Unknown ? 3 : 0);
    }

    if (c_h3->parsed()) {
      Report rep("hilbert3");
      Hilbert3Report h3 = hilbert3_report(volume_tol);
      const char* names[] = {"Equal", "Distinct", "Unknown"};
      rep.add_text("verdict", names[static_cast<int>(h3.verdict.kind)]);
      rep.add_result("cube_volume", h3.cube_volume);
      rep.add_result("tetra_volume", h3.tetra_volume);
      rep.add_result("tetra_terms", static_cast<double>(h3.tetra_symbol.terms.size()));
      rep.add_tolerance("volume_tol", volume_tol);
      return emit(rep, timer,
                  h3.verdict.kind == RelationVerdict::Kind::Unknown ? 3 : 0);
    }

    if (c_al->parsed()) {
      Report rep("affinelength");
      std::string text = slurp(body_path);
      rep.set_digest(text);
      ParsedBody b = parse_body(text);
      if (!b.smooth) fail(ErrorCode::ValidationError, "affinelength needs a smooth body");
      SubdivisionResult r = affine_length_subdivision(*b.smooth, depth);
      rep.add_result("estimate", r.estimate);
      rep.add_result("levels", static_cast<double>(r.trace.size()));
      JensenCheck jc = asa_upper_bound_check(*b.smooth);
      rep.add_result("upper_bound", jc.rhs);
      rep.add_text("upper_bound_holds", jc.holds ? "yes" : "no");
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "level,triangles,estimate\n";
        for (size_t i = 0; i < r.trace.size(); ++i)
          csv << i << "," << (4 << i) << "," << format_double(r.trace[i]) << "\n";
      }
      return emit(rep, timer);
    }

    if (c_kin->parsed()) {
      Report rep("kinematic");
      std::string tk = slurp(k_path), tl = slurp(l_path);
      rep.set_digest(tk + tl);
      rep.set_seed(seed);
      Polytope k = need_polytope(parse_body(tk), "kinematic --k");
      Polytope l = need_polytope(parse_body(tl), "kinematic --l");
      KinematicEstimate e = kinematic_integral_mc(k, l, samples, seed);
      double target = kinematic_target(k, l);
      rep.add_result("estimate", e.estimate);
      rep.add_result("stderr", e.stderr_);
      rep.add_result("target", target);
      rep.add_result("samples", static_cast<double>(e.samples));
      rep.add_residual("abs_error", std::fabs(e.estimate - target));
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "samples,estimate\n";
        for (const auto& [count, est] : e.trace)
          csv << count << "," << format_double(est) << "\n";
      }
      return emit(rep, timer);
    }

    if (c_fv->parsed() || c_df->parsed()) {
      Report rep(c_fv->parsed() ? "fval" : "decompose-fval");
      std::string text = slurp(func_path);
      std::optional<DensityFunc> zeta;
      std::string payload = text;
      if (!zeta_path.empty()) {
        std::string zt = slurp(zeta_path);
        payload += zt;
        zeta = parse_density(zt);
      }
      rep.set_digest(payload);
      ParsedFunc f = parse_function(text);
      if (!f.poly)
        fail(ErrorCode::ValidationError, "this command needs a primal function");
      FuncValuation z = named_valuation(valuation, zeta ? &*zeta : nullptr);
      if (c_fv->parsed()) {
        rep.add_result("value", z(*f.poly));
        return emit(rep, timer);
      }
      EpiHomogComponents c = epi_homog_components(z, *f.poly, comp_n);
      for (int i = 0; i <= comp_n; ++i)
        rep.add_result("Z" + std::to_string(i), c.components[static_cast<size_t>(i)]);
      rep.add_residual("probe_residual", c.probe_residual);
      rep.add_text("polynomial", c.polynomial ? "yes" : "no");
      return emit(rep, timer);
    }

    if (c_chk->parsed()) {
      Report rep("check");
      rep.set_seed(seed);
      if (pairs_mode != "split")
        fail(ErrorCode::ValidationError, "only --pairs split is implemented");
      std::optional<DensityFunc> zeta;
      if (!zeta_path.empty()) zeta = parse_density(slurp(zeta_path));
      if (!zeta && valuation == "grad")
        zeta = DensityFunc::radial(2, {0.0, 1.0, 4.0}, {1.0, 0.6, 0.0});
      FuncValuation z = named_valuation(valuation, zeta ? &*zeta : nullptr);
      Rng rng(seed);
      double worst = 0.0;
      int made = 0;
      while (made < pair_count) {
        std::vector<Vector> pts;
        for (int i = 0; i < 10; ++i) {
          double a = rng.uniform(0.0, 2.0 * kPi);
          double r = std::sqrt(rng.next_double());
          pts.push_back(Vector{r * std::cos(a), r * std::sin(a)});
        }
        Polytope k = hull(pts);
        Vector y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        double ang = rng.uniform(0.0, 2.0 * kPi);
        FuncSplitPair pair;
        try {
          pair = split_function(linear_plus_indicator(y, k),
                                Hyperplane(Vector{std::cos(ang), std::sin(ang)}, 0.0));
        } catch (const Error&) {
          continue;
        }
        worst = std::max(worst, function_valuation_check(z, pair));
        ++made;
      }
      rep.add_result("pairs", static_cast<double>(made));
      rep.add_residual("max_residual", worst);
      rep.add_tolerance("pass_threshold", 1e-8);
      rep.add_text("pass", worst < 1e-8 ? "yes" : "no");
      return emit(rep, timer);
    }
  } catch (const Error& e) {
    Report rep("error");
    rep.add_text("code", error_name(e.code()));
    rep.set_error(e.what());
    int exit_code =
        (e.code() == ErrorCode::Unsupported || e.code() == ErrorCode::PrecisionTooLow)
            ? 3
            : 2;
    return emit(rep, timer, exit_code);
  }
  return 0;
}
