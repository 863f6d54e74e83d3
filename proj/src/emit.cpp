#include "optosq/emit.hpp"

#include <cmath>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "optosq/errors.hpp"

namespace optosq {

using nlohmann::json;

const std::vector<std::string_view>& spectrum_columns() {
  static const std::vector<std::string_view> cols = {
      "omega_over_omega_m", "s_q_total",         "s_q_thermal",       "s_q_photon_number",
      "s_q_two_photon",     "s_q_vacuum_floor",  "s_p_total",         "s_p_thermal",
      "s_p_photon_number",  "s_p_two_photon",    "s_p_vacuum_floor",  "n_omega",
      "m_re",               "m_im"};
  return cols;
}

const std::vector<std::string_view>& moment_columns() {
  static const std::vector<std::string_view> cols = {
      "var_q", "var_p", "uncertainty_product", "squeezed_q", "squeezed_p", "omega_max_over_omega_m"};
  return cols;
}

namespace {

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

std::string header_block(const std::vector<std::string_view>& cols) {
  std::string out = "# units: ";
  out += kUnitsNote;
  out += '\n';
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  return out;
}

std::vector<double> spectrum_row(const SpectrumPoint& pt, double wm) {
  return {pt.omega / wm,      pt.s_q,           pt.q.thermal,     pt.q.photon_number, pt.q.two_photon,
          pt.q.vacuum_floor,  pt.s_p,           pt.p.thermal,     pt.p.photon_number, pt.p.two_photon,
          pt.p.vacuum_floor,  pt.n_omega,       pt.m_omega.real(), pt.m_omega.imag()};
}

std::vector<std::string> moment_cells(const SweepRow& row) {
  const auto& r = row.report;
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  return {format_number(r.var_q), format_number(r.var_p), format_number(r.uncertainty_product),
          flag(r.squeezed_q),     flag(r.squeezed_p),     format_number(r.omega_max_over_omega_m)};
}

}  // namespace

std::string spectrum_csv(const SpectrumTable& table) {
  std::string out = header_block(spectrum_columns());
  const double wm = table.metadata.params.mech_freq;
  std::vector<std::string> cells;
  for (const auto& pt : table.points) {
    cells.clear();
    for (double v : spectrum_row(pt, wm)) cells.push_back(format_number(v));
    append_row(out, cells);
  }
  return out;
}

std::string sweep_csv(const SweepTable& sweep) {
  std::vector<std::string_view> cols(sweep.axis_names.begin(), sweep.axis_names.end());
  cols.insert(cols.end(), moment_columns().begin(), moment_columns().end());
  std::string out = header_block(cols);
  for (const auto& row : sweep.rows) {
    std::vector<std::string> cells;
    for (double v : row.axis_values) cells.push_back(format_number(v));
    for (auto& c : moment_cells(row)) cells.push_back(std::move(c));
    append_row(out, cells);
  }
  return out;
}

std::string fields_csv(const std::vector<Field>& fields) {
  std::string out = header_block({"quantity", "value", "unit"});
  for (const auto& f : fields) append_row(out, {f.name, f.value, f.unit});
  return out;
}

json to_json(const SystemParams& p) {
  return {{"cavity_length_m", p.cavity_length},
          {"mirror_mass_kg", p.mirror_mass},
          {"mech_freq_rad_s", p.mech_freq},
          {"mech_damping_rad_s", p.mech_damping},
          {"cavity_decay_rad_s", p.cavity_decay},
          {"laser_wavelength_m", p.laser_wavelength},
          {"laser_power_w", p.laser_power},
          {"detuning_mode", p.detuning.mode == DetuningMode::bare ? "bare" : "effective"},
          {"detuning_rad_s", p.detuning.value},
          {"temperature_k", p.temperature}};
}

json to_json(const DerivedParams& d) {
  return {{"g0_rad_s", d.g0}, {"eps_c_per_s", d.eps_c}, {"omega_c_rad_s", d.omega_c}, {"quality", d.quality}};
}

json to_json(const SqueezeSource& s) {
  return {{"kind", to_string(s.kind())}, {"kappa_p_rad_s", s.kappa_p()}, {"eps_rad_s", s.eps()},
          {"phi0_rad", s.phi0()},        {"alpha_rad_s", s.alpha()},     {"carrier_rad_s", s.carrier()},
          {"lambda_rad_s", s.lambda()},  {"mu_rad_s", s.mu()},           {"broadband_n", s.broadband_n()},
          {"broadband_m", s.broadband_m()}};
}

json to_json(const SteadyState& ss) {
  json roots = json::array();
  for (const auto& r : ss.branch.roots) {
    roots.push_back({{"photon_number", r.photon_number}, {"delta_eff_rad_s", r.delta_eff}, {"stable", r.stable}});
  }
  return {{"photon_number", ss.photon_number},
          {"q_s", ss.q_s},
          {"p_s", ss.p_s},
          {"delta_eff_rad_s", ss.delta_eff},
          {"delta_bare_rad_s", ss.delta_bare},
          {"g_rad_s", ss.g},
          {"roots", roots},
          {"selected_root", ss.branch.selected},
          {"bistable", ss.branch.bistable}};
}

json to_json(const StabilityReport& r) {
  json eig = json::array();
  for (std::size_t i = 0; i < 4; ++i) eig.push_back({{"re", r.eigen_real_parts[i]}, {"im", r.eigen_imag_parts[i]}});
  return {{"stable", r.stable}, {"routh_hurwitz_stable", r.routh_hurwitz_stable}, {"eigenvalues_rad_s", eig}};
}

json to_json(const MomentReport& r) {
  return {{"var_q", r.var_q},
          {"var_p", r.var_p},
          {"uncertainty_product", r.uncertainty_product},
          {"squeezed_q", r.squeezed_q},
          {"squeezed_p", r.squeezed_p},
          {"omega_max_rad_s", r.omega_max},
          {"omega_max_over_omega_m", r.omega_max_over_omega_m},
          {"last_doubling_delta_q", r.last_doubling_delta_q},
          {"last_doubling_delta_p", r.last_doubling_delta_p},
          {"quadrature_error_estimate", r.quadrature_error_estimate}};
}

json to_json(const FeatureReport& r) {
  json peaks = json::array(), dips = json::array(), bumps = json::array();
  for (const auto& p : r.peaks) peaks.push_back({{"omega_rad_s", p.omega}, {"height", p.height}, {"prominence", p.prominence}});
  for (const auto& d : r.dips) dips.push_back({{"omega_rad_s", d.omega}, {"amount", d.amount}});
  for (const auto& b : r.bumps) bumps.push_back({{"omega_rad_s", b.omega}, {"amount", b.amount}});
  return {{"classification", to_string(r.classification)},
          {"peaks", peaks},
          {"dips", dips},
          {"bumps", bumps},
          {"scan_max", r.scan_max},
          {"carrier_excess", r.carrier_excess},
          {"max_relative_deviation", r.max_relative_deviation}};
}

json to_json(const Conventions& c) {
  return {{"input_coupling", c.input_coupling}, {"sp_photon_weight", c.sp_photon_weight}};
}

json spectrum_json(const SpectrumTable& table, const FeatureReport& q, const FeatureReport& p) {
  const auto& m = table.metadata;
  json rows = json::array();
  for (const auto& pt : table.points) rows.push_back(spectrum_row(pt, m.params.mech_freq));
  json cols = json::array();
  for (auto c : spectrum_columns()) cols.push_back(c);
  return {{"command", "spectrum"},
          {"units", kUnitsNote},
          {"params", to_json(m.params)},
          {"derived", to_json(m.derived)},
          {"steady_state", to_json(m.steady_state)},
          {"source", to_json(m.source)},
          {"conventions", to_json(m.conventions)},
          {"stability", to_json(m.stability)},
          {"features", {{"s_q", to_json(q)}, {"s_p", to_json(p)}}},
          {"columns", cols},
          {"rows", rows}};
}

json sweep_json(const SweepTable& sweep) {
  json rows = json::array();
  for (const auto& row : sweep.rows) {
    json axes = json::object();
    for (std::size_t i = 0; i < row.axis_values.size(); ++i) axes[sweep.axis_names[i]] = row.axis_values[i];
    auto rep = to_json(row.report);
    rep["axes"] = axes;
    rep["stable"] = row.stable;
    rows.push_back(rep);
  }
  return {{"command", "sweep"}, {"units", kUnitsNote}, {"axes", sweep.axis_names}, {"rows", rows}};
}

json fields_json(std::string_view command, const std::vector<Field>& fields) {
  json out = json::object();
  for (const auto& f : fields) out[f.name] = {{"value", f.value}, {"unit", f.unit}};
  return {{"command", command}, {"units", kUnitsNote}, {"results", out}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, std::string_view bytes) {
  namespace fs = std::filesystem;
  const auto dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("output directory does not exist: " + dir.string());

  const auto tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    const auto msg = ec.message();
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string() + ": " + msg);
  }
}

}  // namespace optosq
