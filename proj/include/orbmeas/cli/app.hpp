#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbmeas/cli/parse.hpp"
#include "orbmeas/cli/serialize.hpp"
#include "orbmeas/errors.hpp"
#include "orbmeas/measures.hpp"
#include "orbmeas/oracle/monte_carlo.hpp"
#include "orbmeas/rootsys.hpp"

namespace orbmeas::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kVerifyFailed = 2, kInternal = 3 };

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Options for every subcommand; fields that a subcommand does not use are
/// ignored.
struct RunConfig {
  std::string subcommand;
  std::string type;
  std::string a, b;
  std::string poly = "1";
  std::string mode = "project";  // verify: project | convolve
  std::string kind = "convolution";  // density: projection | convolution
  std::string format = "json";
  std::string lo, hi;
  unsigned points = 101;
  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  double threshold = 4.0;
  bool center = false;
};

inline Point parse_point(const std::string& text, const std::string& what) {
  if (text.empty()) throw ValidationError("missing --" + what);
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("empty coordinate in --" + what);
    item = item.substr(b, e - b + 1);
    try {
      coords.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw ValidationError("bad rational '" + item + "' in --" + what);
    }
  }
  return Point(std::move(coords));
}

/// Scalar for the rank-1 densities: "2" or "2,-2" (first coordinate).
inline Rational parse_scalar(const std::string& text, const std::string& what) {
  Point p = parse_point(text, what);
  if (p.size() == 1) return p[0];
  if (p.size() == 2 && p[1] == -p[0]) return p[0];
  throw ValidationError("--" + what + " must be a scalar x or a point x,-x");
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("ORBMEAS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("ORBMEAS_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

namespace detail {

inline Point prepare_point(const RootSystem& rs, const std::string& text, const std::string& what, bool center) {
  Point p = parse_point(text, what);
  if (p.size() != rs.ambient_dim()) throw DimensionMismatch(rs.ambient_dim(), p.size());
  if (center && rs.sum_zero_realization()) {
    const Rational mean = p.sum() / Rational(static_cast<unsigned long>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= mean;
  }
  return p;
}

inline void emit_moment(std::ostream& out, const RunConfig& cfg, const MomentResult& r, const std::string& kind) {
  if (cfg.format == "csv")
    out << rational_csv(r.value);
  else
    out << moment_json(r, kind).dump() << '\n';
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = build_root_system(cfg.type);
  if (rs.family() != Family::A) throw ValidationError("verify supports the A-series only");
  const int n = static_cast<int>(rs.ambient_dim());
  const Point a = prepare_point(rs, cfg.a, "a", cfg.center);
  const Polynomial f = parse_polynomial(cfg.poly, rs.ambient_dim());
  const oracle::SamplingOptions opts{cfg.samples, cfg.seed ? *cfg.seed : default_seed(), cfg.threads};

  MomentResult exact;
  oracle::McEstimate est;
  if (cfg.mode == "project") {
    exact = projection_moment(rs, a, f);
    est = oracle::mc_projection_moment(n, a, f, opts);
  } else if (cfg.mode == "convolve") {
    const Point b = prepare_point(rs, cfg.b, "b", cfg.center);
    exact = convolution_moment(rs, a, b, f);
    est = oracle::mc_convolution_moment(n, a, b, f, opts);
  } else {
    throw ValidationError("--mode must be project or convolve");
  }
  const auto report = oracle::compare_estimate(exact.value, est, cfg.threshold);
  json meta{{"mode", cfg.mode}, {"system", rs.name()}, {"a", exact.a.to_string()}, {"polynomial", exact.polynomial}};
  if (exact.b) meta["b"] = exact.b->to_string();
  out << report_json(exact.value, report, std::move(meta)).dump() << '\n';
  return report.pass ? kOk : kVerifyFailed;
}

inline int run_density(const RunConfig& cfg, std::ostream& out) {
  Rank1Density d = [&] {
    if (cfg.kind == "projection") return rank1_projection_density(parse_scalar(cfg.a, "a"));
    if (cfg.kind == "convolution") return rank1_convolution_density(parse_scalar(cfg.a, "a"), parse_scalar(cfg.b, "b"));
    throw ValidationError("--kind must be projection or convolution");
  }();
  Rational reach = 0;
  for (const auto& p : d.pieces) reach = std::max<Rational>(reach, std::max<Rational>(abs(p.lo), abs(p.hi)));
  const Rational lo = cfg.lo.empty() ? Rational(-reach - 1) : parse_scalar(cfg.lo, "lo");
  const Rational hi = cfg.hi.empty() ? Rational(reach + 1) : parse_scalar(cfg.hi, "hi");
  if (!(lo < hi)) throw ValidationError("--lo must be below --hi");
  if (cfg.points < 2) throw ValidationError("--points must be at least 2");
  out << density_csv(d, lo, hi, cfg.points);
  return kOk;
}

}  // namespace detail

/// Dispatches a validated configuration; returns the process exit code.
/// Library errors propagate to the caller.
inline int execute(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "json" && cfg.format != "csv") throw ValidationError("--format must be json or csv");
  if (cfg.subcommand == "gram") {
    const RootSystem rs = build_root_system(cfg.type);
    if (cfg.format == "csv")
      out << rational_csv(rs.gram_delta());
    else
      out << gram_json(rs).dump() << '\n';
    return kOk;
  }
  if (cfg.subcommand == "project") {
    const RootSystem rs = build_root_system(cfg.type);
    const Point a = detail::prepare_point(rs, cfg.a, "a", cfg.center);
    const Polynomial f = parse_polynomial(cfg.poly, rs.ambient_dim());
    detail::emit_moment(out, cfg, projection_moment(rs, a, f), "projection");
    return kOk;
  }
  if (cfg.subcommand == "convolve") {
    const RootSystem rs = build_root_system(cfg.type);
    const Point a = detail::prepare_point(rs, cfg.a, "a", cfg.center);
    const Point b = detail::prepare_point(rs, cfg.b, "b", cfg.center);
    const Polynomial g = parse_polynomial(cfg.poly, rs.ambient_dim());
    detail::emit_moment(out, cfg, convolution_moment(rs, a, b, g), "convolution");
    return kOk;
  }
  if (cfg.subcommand == "density") return detail::run_density(cfg, out);
  if (cfg.subcommand == "verify") return detail::run_verify(cfg, out);
  throw ValidationError("unknown subcommand '" + cfg.subcommand + "'");
}

/// Full command line entry point: parses flags, runs, maps errors to exit
/// codes (0 ok, 1 validation, 2 verification failed, 3 internal).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments and densities of projected and convolved orbital measures", "orbmeas"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_system = [&](CLI::App* sub) { sub->add_option("--type", cfg.type, "Root system, e.g. A2, B3, G2")->required(); };
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", cfg.format, "json or csv"); };
  auto add_center = [&](CLI::App* sub) {
    sub->add_flag("--center", cfg.center, "Subtract the coordinate mean from points (sum-zero realizations)");
  };

  auto* project = app.add_subcommand("project", "Exact moment of the projected orbital measure");
  add_system(project);
  project->add_option("--a", cfg.a, "Orbit point, comma-separated rationals")->required();
  project->add_option("--poly", cfg.poly, "Polynomial in x1..xn");
  add_format(project);
  add_center(project);

  auto* convolve = app.add_subcommand("convolve", "Exact moment of the radial part of a convolution");
  add_system(convolve);
  convolve->add_option("--a", cfg.a)->required();
  convolve->add_option("--b", cfg.b)->required();
  convolve->add_option("--poly", cfg.poly);
  add_format(convolve);
  add_center(convolve);

  auto* gram = app.add_subcommand("gram", "Apolar norm [Δ,Δ] of the discriminant");
  add_system(gram);
  add_format(gram);

  auto* density = app.add_subcommand("density", "Rank-1 density table (CSV)");
  density->add_option("--kind", cfg.kind, "projection or convolution");
  density->add_option("--a", cfg.a)->required();
  density->add_option("--b", cfg.b);
  density->add_option("--lo", cfg.lo);
  density->add_option("--hi", cfg.hi);
  density->add_option("--points", cfg.points);

  auto* verify = app.add_subcommand("verify", "Compare an exact moment with a Monte-Carlo estimate");
  add_system(verify);
  verify->add_option("--mode", cfg.mode, "project or convolve");
  verify->add_option("--a", cfg.a)->required();
  verify->add_option("--b", cfg.b);
  verify->add_option("--poly", cfg.poly);
  verify->add_option("--samples", cfg.samples);
  verify->add_option("--seed", cfg.seed, "Defaults to $ORBMEAS_SEED, else 1");
  verify->add_option("--threads", cfg.threads);
  verify->add_option("--threshold", cfg.threshold, "Largest accepted |z|");
  add_center(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidation;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    return execute(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace orbmeas::cli
