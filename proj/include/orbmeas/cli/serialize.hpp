#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include <json.hpp>

#include "orbmeas/measures.hpp"
#include "orbmeas/oracle/monte_carlo.hpp"
#include "orbmeas/rootsys.hpp"

namespace orbmeas::cli {

using nlohmann::json;

/// Shortest decimal text that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, end);
}

/// Rationals travel as decimal strings so no precision is lost.
inline json rational_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline json moment_json(const MomentResult& r, const std::string& kind) {
  json meta{{"kind", kind}, {"system", r.system}, {"a", r.a.to_string()}, {"polynomial", r.polynomial}};
  if (r.b) meta["b"] = r.b->to_string();
  return json{{"value", rational_json(r.value)}, {"decimal", r.decimal}, {"meta", meta}};
}

inline json gram_json(const RootSystem& rs) {
  return json{{"value", rational_json(rs.gram_delta())},
              {"decimal", rs.gram_delta().get_d()},
              {"meta",
               {{"system", rs.name()},
                {"ambient_dim", rs.ambient_dim()},
                {"positive_roots", rs.positive_roots().size()},
                {"weyl_order", rs.weyl_order()},
                {"discriminant", to_string(rs.delta())}}}};
}

inline json report_json(const Rational& exact, const oracle::ComparisonReport& r, json meta) {
  return json{{"exact", {{"value", rational_json(exact)}, {"decimal", r.exact}}},
              {"estimate",
               {{"mean", r.estimate.mean},
                {"stderr", r.estimate.std_error},
                {"samples", r.estimate.samples},
                {"seed", r.estimate.seed}}},
              {"zscore", r.zscore},
              {"threshold", r.threshold},
              {"pass", r.pass},
              {"meta", std::move(meta)}};
}

inline std::string rational_csv(const Rational& q) {
  return "num,den,decimal\n" + q.get_num().get_str() + "," + q.get_den().get_str() + "," + format_double(q.get_d()) +
         "\n";
}

/// "c,phi" table of a rank-1 density on `points` evenly spaced nodes of [lo, hi].
inline std::string density_csv(const Rank1Density& d, const Rational& lo, const Rational& hi, unsigned points) {
  std::string out = "c,phi\n";
  for (unsigned i = 0; i < points; ++i) {
    Rational c = points == 1 ? lo : Rational(lo + (hi - lo) * i / Rational(points - 1));
    out += format_double(c.get_d()) + "," + format_double(d(c).get_d()) + "\n";
  }
  return out;
}

}  // namespace orbmeas::cli
