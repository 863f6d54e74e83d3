#pragma once

// Shared helpers for the test and acceptance binaries.

#include <cmath>
#include <random>
#include <string>

#include <json.hpp>

#include "optosq/config.hpp"
#include "optosq/constants.hpp"
#include "optosq/core_model.hpp"
#include "optosq/noise.hpp"
#include "optosq/presets.hpp"

namespace testing {

inline optosq::RunConfig base(const char* name = "paper-default") { return optosq::preset(name); }

inline optosq::SystemParams params_of(const optosq::RunConfig& c) { return optosq::to_system_params(c); }

inline optosq::SystemParams default_params() { return params_of(base()); }

inline double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

/// One random, physically valid configuration around the default system.
struct Draw {
  optosq::SystemParams params;
  optosq::SqueezeSource source;
};

class DrawBox {
 public:
  explicit DrawBox(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  /// Effective detuning in [0.5, 1.5]ω_m, P in [0.5, 20] mW, T in [0, 0.1] K,
  /// DPO or NDPO with κ_p/κ in [0.05, 10], ε/κ_p in [0, 0.45], any φ₀,
  /// α/κ_p in [0, 5]. Only stable draws are returned.
  Draw next() {
    for (;;) {
      auto cfg = base();
      cfg.system.detuning_over_omega_m = uniform(0.5, 1.5);
      cfg.system.power_w = uniform(0.5e-3, 20e-3);
      cfg.system.temperature_k = uniform(0.0, 0.1);
      cfg.source.kind = uniform(0, 1) < 0.5 ? optosq::SqueezeKind::dpo : optosq::SqueezeKind::ndpo;
      cfg.source.kappa_p_over_kappa = std::exp(uniform(std::log(0.05), std::log(10.0)));
      cfg.source.epsilon_over_kappa_p = uniform(0.0, 0.45);
      cfg.source.phi0_over_pi = uniform(0.0, 2.0);
      cfg.source.alpha_over_kappa_p = uniform(0.0, 5.0);
      Draw d{optosq::to_system_params(cfg), optosq::to_source(cfg)};
      const auto ss = optosq::solve_steady_state(d.params);
      if (optosq::check_stability(optosq::drift_matrix(ss, d.params)).stable) return d;
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Validates the subset of JSON Schema used by the shipped schema files:
/// type, const, enum, properties, required, additionalProperties, items,
/// minItems, maxItems, minimum. Returns an empty string on success.
inline std::string validate_schema(const nlohmann::json& v, const nlohmann::json& s, const std::string& at = "$") {
  using nlohmann::json;
  auto type_ok = [&](const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    return false;
  };
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || type_ok(t.get<std::string>());
    } else {
      ok = type_ok(s["type"].get<std::string>());
    }
    if (!ok) return at + ": expected type " + s["type"].dump();
  }
  if (s.contains("const") && v != s["const"]) return at + ": expected " + s["const"].dump();
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) return at + ": value " + v.dump() + " not in enum";
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
    return at + ": below minimum";
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& r : s["required"]) {
        if (!v.contains(r.get<std::string>())) return at + ": missing " + r.get<std::string>();
      }
    }
    for (const auto& [k, child] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(k)) {
        auto e = validate_schema(child, s["properties"][k], at + "." + k);
        if (!e.empty()) return e;
      } else if (s.contains("additionalProperties")) {
        const auto& ap = s["additionalProperties"];
        if (ap.is_boolean()) {
          if (!ap.get<bool>()) return at + ": unexpected property " + k;
        } else {
          auto e = validate_schema(child, ap, at + "." + k);
          if (!e.empty()) return e;
        }
      }
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return at + ": too few items";
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return at + ": too many items";
    if (s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto e = validate_schema(v[i], s["items"], at + "[" + std::to_string(i) + "]");
        if (!e.empty()) return e;
      }
    }
  }
  return {};
}

}  // namespace testing
