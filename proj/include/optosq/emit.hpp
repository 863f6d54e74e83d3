#pragma once

// Deterministic serialisation of results. Numbers are printed as shortest
// round-trip decimals; rows follow grid or sweep order.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "optosq/config.hpp"
#include "optosq/features.hpp"
#include "optosq/moments.hpp"
#include "optosq/spectra.hpp"

namespace optosq {

inline constexpr std::string_view kVersion = "0.1.0";

/// Unit convention embedded in every output file.
inline constexpr std::string_view kUnitsNote =
    "frequencies in rad/s internally, omega_over_omega_m dimensionless; spectra in 1/(rad/s) "
    "so that the integral of S dω/2π is a dimensionless variance; Hz accepted only on *_hz config keys";

const std::vector<std::string_view>& spectrum_columns();
const std::vector<std::string_view>& moment_columns();

std::string spectrum_csv(const SpectrumTable& table);

struct SweepRow {
  std::vector<double> axis_values;
  MomentReport report;
  bool stable = true;  // unstable points carry NaN variances
};

struct SweepTable {
  std::vector<std::string> axis_names;
  std::vector<SweepRow> rows;
};

std::string sweep_csv(const SweepTable& sweep);

/// A scalar result line for the key-value reports (stability, critical power).
struct Field {
  std::string name;
  std::string value;
  std::string unit;
};

std::string fields_csv(const std::vector<Field>& fields);

nlohmann::json to_json(const SystemParams& p);
nlohmann::json to_json(const DerivedParams& d);
nlohmann::json to_json(const SqueezeSource& s);
nlohmann::json to_json(const SteadyState& ss);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const FeatureReport& r);
nlohmann::json to_json(const Conventions& c);

nlohmann::json spectrum_json(const SpectrumTable& table, const FeatureReport& q, const FeatureReport& p);
nlohmann::json sweep_json(const SweepTable& sweep);
nlohmann::json fields_json(std::string_view command, const std::vector<Field>& fields);

/// Two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

/// Writes through a temporary file in the same directory and renames it over
/// `path`. Throws IoError.
void write_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace optosq
