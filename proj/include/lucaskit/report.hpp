#pragma once

#include "lucaskit/ratpoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lucaskit {

/// Both sides of a checked identity evaluated at one numeric point.
struct SpotCheck {
  Rational x;
  Rational y;
  Rational lhs;
  Rational rhs;
};

/// Outcome of checking one instance of an identity. Both sides are kept
/// verbatim, so a failing report is its own witness.
struct IdentityReport {
  std::string name;
  long n = 0;
  std::optional<long> aux_k;
  RatPoly lhs;
  RatPoly rhs;
  bool pass = false;
  std::vector<SpotCheck> spot_checks;
};

/// Points at which every report is evaluated for numeric corroboration.
inline const std::vector<std::pair<Rational, Rational>>& spot_points() {
  static const std::vector<std::pair<Rational, Rational>> points{{1, 1}, {2, 1}};
  return points;
}

inline IdentityReport make_report(std::string name, long n, std::optional<long> aux_k, RatPoly lhs,
                                  RatPoly rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.n = n;
  r.aux_k = aux_k;
  r.pass = lhs == rhs;
  for (const auto& [x0, y0] : spot_points()) {
    r.spot_checks.push_back({x0, y0, lhs.eval(x0, y0), rhs.eval(x0, y0)});
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json spots = nlohmann::ordered_json::array();
  for (const auto& s : r.spot_checks) {
    spots.push_back({{"x", to_string(s.x)},
                     {"y", to_string(s.y)},
                     {"lhs", to_string(s.lhs)},
                     {"rhs", to_string(s.rhs)}});
  }
  return {{"name", r.name},
          {"n", r.n},
          {"k", r.aux_k ? nlohmann::ordered_json(*r.aux_k) : nlohmann::ordered_json(nullptr)},
          {"pass", r.pass},
          {"lhs", r.lhs.to_string()},
          {"rhs", r.rhs.to_string()},
          {"spot_checks", std::move(spots)}};
}

/// "PASS ex1 n=3" or "FAIL ... " followed by the witness polynomials.
inline std::string to_text(const IdentityReport& r) {
  std::string out = (r.pass ? "PASS " : "FAIL ") + r.name + " n=" + std::to_string(r.n);
  if (r.aux_k) {
    out += " k=" + std::to_string(*r.aux_k);
  }
  if (!r.pass) {
    out += "\n  lhs: " + r.lhs.to_string() + "\n  rhs: " + r.rhs.to_string();
  }
  return out;
}

}  // namespace lucaskit
