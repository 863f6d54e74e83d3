#include "optosq/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <span>
#include <utility>

#include "optosq/constants.hpp"
#include "optosq/errors.hpp"
#include "optosq/presets.hpp"

namespace optosq {

const char* to_string(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::variance: return "variance";
    case Command::sweep: return "sweep";
    case Command::stability: return "stability";
    case Command::critical_power: return "critical-power";
  }
  return "unknown";
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "unknown";
}

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::power_w: return "power_w";
    case SweepAxis::temperature_k: return "temperature_k";
    case SweepAxis::detuning_over_omega_m: return "detuning_over_omega_m";
    case SweepAxis::kappa_p_over_kappa: return "kappa_p_over_kappa";
    case SweepAxis::epsilon_over_kappa_p: return "epsilon_over_kappa_p";
    case SweepAxis::phi0_over_pi: return "phi0_over_pi";
    case SweepAxis::alpha_over_kappa_p: return "alpha_over_kappa_p";
  }
  return "unknown";
}

std::vector<double> SweepAxisSpec::values() const {
  if (steps == 0) throw ConfigError("sweep: steps must be at least 1");
  if (steps == 1) return {min};
  std::vector<double> out(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) out[i] = min + (max - min) * static_cast<double>(i) / last;
  out.back() = max;
  return out;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

enum class Dim { ratio, length, mass, frequency, power, temperature };

struct UnitDef {
  std::string_view symbol;
  double factor;
  bool divide;  // sub-units divide so that e.g. 5 mW is the double nearest 0.005
};

std::span<const UnitDef> units_of(Dim d) {
  static constexpr UnitDef length[] = {{"m", 1, false}, {"mm", 1e3, true}, {"um", 1e6, true},
                                       {"nm", 1e9, true}};
  static constexpr UnitDef mass[] = {{"kg", 1, false}, {"g", 1e3, true}, {"mg", 1e6, true},
                                     {"ug", 1e9, true}, {"ng", 1e12, true}};
  static constexpr UnitDef frequency[] = {{"Hz", 1, false}, {"kHz", 1e3, false},
                                          {"MHz", 1e6, false}, {"GHz", 1e9, false}};
  static constexpr UnitDef power[] = {{"W", 1, false}, {"mW", 1e3, true}, {"uW", 1e6, true}};
  static constexpr UnitDef temperature[] = {{"K", 1, false}, {"mK", 1e3, true}, {"uK", 1e6, true}};
  switch (d) {
    case Dim::length: return length;
    case Dim::mass: return mass;
    case Dim::frequency: return frequency;
    case Dim::power: return power;
    case Dim::temperature: return temperature;
    case Dim::ratio: break;
  }
  return {};
}

const char* base_unit(Dim d) {
  switch (d) {
    case Dim::length: return "m";
    case Dim::mass: return "kg";
    case Dim::frequency: return "Hz";
    case Dim::power: return "W";
    case Dim::temperature: return "K";
    case Dim::ratio: break;
  }
  return "dimensionless";
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::string_view key, const std::string& what) {
  throw ConfigError(std::string(key) + ": " + what);
}

double parse_number(std::string_view key, std::string_view raw, Dim dim) {
  raw = trim(raw);
  if (raw.empty()) fail(key, "missing value");
  double v = 0.0;
  const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (res.ec != std::errc{}) fail(key, "expected a number, got '" + std::string(raw) + "'");
  if (!std::isfinite(v)) fail(key, "value must be finite");
  const auto unit = trim(std::string_view(res.ptr, static_cast<std::size_t>(raw.data() + raw.size() - res.ptr)));
  if (unit.empty()) return v;
  for (const auto& u : units_of(dim)) {
    if (u.symbol == unit) return u.divide ? v / u.factor : v * u.factor;
  }
  fail(key, "unit mismatch: '" + std::string(unit) + "' is not a unit of " + base_unit(dim));
}

std::size_t parse_count(std::string_view key, std::string_view raw) {
  raw = trim(raw);
  unsigned long long v = 0;
  const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (raw.empty() || res.ec != std::errc{} || res.ptr != raw.data() + raw.size()) {
    fail(key, "expected a non-negative integer, got '" + std::string(raw) + "'");
  }
  return static_cast<std::size_t>(v);
}

template <class E>
struct Choice {
  std::string_view name;
  E value;
};

template <class E, std::size_t N>
E parse_choice(std::string_view key, std::string_view raw, const Choice<E> (&table)[N]) {
  raw = trim(raw);
  std::string options;
  for (const auto& c : table) {
    if (c.name == raw) return c.value;
    options += options.empty() ? "" : "|";
    options += c.name;
  }
  fail(key, "expected one of " + options + ", got '" + std::string(raw) + "'");
}

template <class E, std::size_t N>
std::string_view choice_name(E value, const Choice<E> (&table)[N]) {
  for (const auto& c : table) {
    if (c.value == value) return c.name;
  }
  return "unknown";
}

constexpr Choice<Command> kCommands[] = {{"spectrum", Command::spectrum},
                                         {"variance", Command::variance},
                                         {"sweep", Command::sweep},
                                         {"stability", Command::stability},
                                         {"critical-power", Command::critical_power}};
constexpr Choice<DetuningMode> kDetuningModes[] = {{"bare", DetuningMode::bare},
                                                   {"effective", DetuningMode::effective}};
constexpr Choice<BranchSelector> kBranches[] = {{"lowest", BranchSelector::lowest},
                                                {"middle", BranchSelector::middle},
                                                {"highest", BranchSelector::highest}};
constexpr Choice<SqueezeKind> kKinds[] = {{"vacuum", SqueezeKind::vacuum},
                                          {"dpo", SqueezeKind::dpo},
                                          {"ndpo", SqueezeKind::ndpo},
                                          {"broadband", SqueezeKind::broadband}};
constexpr Choice<CarrierMode> kCarrierModes[] = {{"omega_m", CarrierMode::omega_m},
                                                 {"custom", CarrierMode::custom}};
constexpr Choice<OutputFormat> kFormats[] = {{"csv", OutputFormat::csv},
                                             {"json", OutputFormat::json}};
constexpr Choice<SweepAxis> kAxes[] = {
    {"power_w", SweepAxis::power_w},
    {"temperature_k", SweepAxis::temperature_k},
    {"detuning_over_omega_m", SweepAxis::detuning_over_omega_m},
    {"kappa_p_over_kappa", SweepAxis::kappa_p_over_kappa},
    {"epsilon_over_kappa_p", SweepAxis::epsilon_over_kappa_p},
    {"phi0_over_pi", SweepAxis::phi0_over_pi},
    {"alpha_over_kappa_p", SweepAxis::alpha_over_kappa_p},
};

struct KeyDef {
  std::string_view name;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <class Access>
KeyDef number_key(std::string_view name, Dim dim, Access access) {
  return {name,
          [=](RunConfig& c, std::string_view raw) { access(c) = parse_number(name, raw, dim); },
          [=](const RunConfig& c) { return format_number(access(c)); }};
}

template <class Access>
KeyDef count_key(std::string_view name, Access access) {
  return {name, [=](RunConfig& c, std::string_view raw) { access(c) = parse_count(name, raw); },
          [=](const RunConfig& c) { return std::to_string(access(c)); }};
}

template <class E, std::size_t N, class Access>
KeyDef choice_key(std::string_view name, const Choice<E> (&table)[N], Access access) {
  return {name,
          [=, &table](RunConfig& c, std::string_view raw) { access(c) = parse_choice(name, raw, table); },
          [=, &table](const RunConfig& c) { return std::string(choice_name(access(c), table)); }};
}

std::optional<SweepAxisSpec>& axis_slot(RunConfig& c, int which) { return which == 1 ? c.axis1 : c.axis2; }
const std::optional<SweepAxisSpec>& axis_slot(const RunConfig& c, int which) {
  return which == 1 ? c.axis1 : c.axis2;
}

Dim dim_of(SweepAxis a) {
  switch (a) {
    case SweepAxis::power_w: return Dim::power;
    case SweepAxis::temperature_k: return Dim::temperature;
    default: return Dim::ratio;
  }
}

void add_axis_keys(std::vector<KeyDef>& keys, int which, std::string_view axis, std::string_view min,
                   std::string_view max, std::string_view steps) {
  keys.push_back({axis,
                  [=](RunConfig& c, std::string_view raw) {
                    auto& slot = axis_slot(c, which);
                    if (trim(raw) == "none") {
                      slot.reset();
                      return;
                    }
                    const auto a = parse_choice(axis, raw, kAxes);
                    if (!slot) slot.emplace();
                    slot->axis = a;
                  },
                  [=](const RunConfig& c) {
                    const auto& slot = axis_slot(c, which);
                    return slot ? std::string(to_string(slot->axis)) : std::string("none");
                  }});
  auto require = [](RunConfig& c, int w, std::string_view key) -> SweepAxisSpec& {
    auto& slot = axis_slot(c, w);
    if (!slot) fail(key, "set the axis before its range");
    return *slot;
  };
  keys.push_back({min,
                  [=](RunConfig& c, std::string_view raw) {
                    auto& spec = require(c, which, min);
                    spec.min = parse_number(min, raw, dim_of(spec.axis));
                  },
                  [=](const RunConfig& c) { return format_number(axis_slot(c, which)->min); }});
  keys.push_back({max,
                  [=](RunConfig& c, std::string_view raw) {
                    auto& spec = require(c, which, max);
                    spec.max = parse_number(max, raw, dim_of(spec.axis));
                  },
                  [=](const RunConfig& c) { return format_number(axis_slot(c, which)->max); }});
  keys.push_back({steps,
                  [=](RunConfig& c, std::string_view raw) {
                    const auto n = parse_count(steps, raw);
                    if (n == 0) fail(steps, "must be at least 1");
                    require(c, which, steps).steps = n;
                  },
                  [=](const RunConfig& c) { return std::to_string(axis_slot(c, which)->steps); }});
}

const std::vector<KeyDef>& key_table() {
  static const std::vector<KeyDef> keys = [] {
    std::vector<KeyDef> k;
    k.push_back(choice_key("run.command", kCommands, [](auto& c) -> auto& { return c.command; }));

    k.push_back(number_key("system.length_m", Dim::length, [](auto& c) -> auto& { return c.system.length_m; }));
    k.push_back(number_key("system.mass_kg", Dim::mass, [](auto& c) -> auto& { return c.system.mass_kg; }));
    k.push_back(number_key("system.mech_freq_hz", Dim::frequency,
                           [](auto& c) -> auto& { return c.system.mech_freq_hz; }));
    k.push_back(number_key("system.mech_damping_hz", Dim::frequency,
                           [](auto& c) -> auto& { return c.system.mech_damping_hz; }));
    k.push_back(number_key("system.cavity_decay_hz", Dim::frequency,
                           [](auto& c) -> auto& { return c.system.cavity_decay_hz; }));
    k.push_back(number_key("system.laser_wavelength_m", Dim::length,
                           [](auto& c) -> auto& { return c.system.laser_wavelength_m; }));
    k.push_back(number_key("system.power_w", Dim::power, [](auto& c) -> auto& { return c.system.power_w; }));
    k.push_back(choice_key("system.detuning_mode", kDetuningModes,
                           [](auto& c) -> auto& { return c.system.detuning_mode; }));
    k.push_back(number_key("system.detuning_over_omega_m", Dim::ratio,
                           [](auto& c) -> auto& { return c.system.detuning_over_omega_m; }));
    k.push_back(number_key("system.temperature_k", Dim::temperature,
                           [](auto& c) -> auto& { return c.system.temperature_k; }));
    k.push_back(choice_key("system.bistable_branch", kBranches,
                           [](auto& c) -> auto& { return c.system.bistable_branch; }));

    k.push_back(choice_key("source.kind", kKinds, [](auto& c) -> auto& { return c.source.kind; }));
    k.push_back(number_key("source.kappa_p_over_kappa", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.kappa_p_over_kappa; }));
    k.push_back(number_key("source.epsilon_over_kappa_p", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.epsilon_over_kappa_p; }));
    k.push_back(number_key("source.phi0_over_pi", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.phi0_over_pi; }));
    k.push_back(number_key("source.alpha_over_kappa_p", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.alpha_over_kappa_p; }));
    k.push_back(choice_key("source.carrier_offset_mode", kCarrierModes,
                           [](auto& c) -> auto& { return c.source.carrier_offset_mode; }));
    k.push_back(number_key("source.carrier_offset_over_omega_m", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.carrier_offset_over_omega_m; }));
    k.push_back(number_key("source.broadband_n", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.broadband_n; }));
    k.push_back(number_key("source.broadband_m", Dim::ratio,
                           [](auto& c) -> auto& { return c.source.broadband_m; }));

    k.push_back(number_key("grid.omega_over_omega_m_min", Dim::ratio,
                           [](auto& c) -> auto& { return c.grid.omega_over_omega_m_min; }));
    k.push_back(number_key("grid.omega_over_omega_m_max", Dim::ratio,
                           [](auto& c) -> auto& { return c.grid.omega_over_omega_m_max; }));
    k.push_back(count_key("grid.points", [](auto& c) -> auto& { return c.grid.points; }));

    k.push_back(number_key("moments.omega_max_over_omega_m", Dim::ratio,
                           [](auto& c) -> auto& { return c.moments.omega_max_over_omega_m; }));
    k.push_back(number_key("moments.rel_tol", Dim::ratio, [](auto& c) -> auto& { return c.moments.rel_tol; }));

    k.push_back(number_key("model.input_coupling", Dim::ratio,
                           [](auto& c) -> auto& { return c.model.input_coupling; }));
    k.push_back(number_key("model.sp_photon_weight", Dim::ratio,
                           [](auto& c) -> auto& { return c.model.sp_photon_weight; }));

    add_axis_keys(k, 1, "sweep.axis1", "sweep.axis1_min", "sweep.axis1_max", "sweep.axis1_steps");
    add_axis_keys(k, 2, "sweep.axis2", "sweep.axis2_min", "sweep.axis2_max", "sweep.axis2_steps");

    k.push_back({"output.path",
                 [](RunConfig& c, std::string_view raw) { c.output.path = std::string(trim(raw)); },
                 [](const RunConfig& c) { return c.output.path; }});
    k.push_back(choice_key("output.format", kFormats, [](auto& c) -> auto& { return c.output.format; }));
    return k;
  }();
  return keys;
}

const KeyDef& find_key(std::string_view key) {
  const auto& keys = key_table();
  const auto it = std::find_if(keys.begin(), keys.end(), [&](const KeyDef& d) { return d.name == key; });
  if (it == keys.end()) throw ConfigError("unknown key '" + std::string(key) + "'");
  return *it;
}

std::string_view key_for_field(std::string_view field) {
  static constexpr std::pair<std::string_view, std::string_view> map[] = {
      {"cavity_length", "system.length_m"},
      {"mirror_mass", "system.mass_kg"},
      {"mech_freq", "system.mech_freq_hz"},
      {"mech_damping", "system.mech_damping_hz"},
      {"cavity_decay", "system.cavity_decay_hz"},
      {"laser_wavelength", "system.laser_wavelength_m"},
      {"laser_power", "system.power_w"},
      {"temperature", "system.temperature_k"},
      {"detuning", "system.detuning_over_omega_m"},
      {"bistable_branch", "system.bistable_branch"},
      {"kappa_p", "source.kappa_p_over_kappa"},
      {"epsilon", "source.epsilon_over_kappa_p"},
      {"alpha", "source.alpha_over_kappa_p"},
      {"carrier", "source.carrier_offset_over_omega_m"},
      {"broadband_n", "source.broadband_n"},
      {"broadband_m", "source.broadband_m"},
  };
  for (const auto& [f, k] : map) {
    if (f == field) return k;
  }
  return field;
}

template <class F>
auto keyed(F&& f) {
  try {
    return f();
  } catch (const InvalidParameter& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    throw ConfigError(std::string(key_for_field(e.field())) + ": " +
                      (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

void validate_physics(const RunConfig& cfg, const std::string& context) {
  try {
    const auto params = keyed([&] { return to_system_params(cfg); });
    keyed([&] { return derive(params); });
    keyed([&] { return to_source(cfg); });
  } catch (const ConfigError& e) {
    if (context.empty()) throw;
    throw ConfigError(std::string(e.what()) + " (" + context + ")");
  }
}

}  // namespace

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  find_key(trim(key)).set(cfg, value);
}

RunConfig parse_config(std::string_view text) { return parse_config(text, preset("paper-default")); }

RunConfig parse_config(std::string_view text, RunConfig base) {
  apply_document(base, text);
  validate(base);
  return base;
}

void apply_document(RunConfig& cfg, std::string_view text) {
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    // '#' opens a comment at line start or after whitespace.
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'section.key = value'");
    const auto key = trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(where + ": duplicate key '" + std::string(key) + "'");
    }
    try {
      apply_setting(cfg, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

std::string serialize(const RunConfig& cfg) {
  std::string out;
  for (const auto& k : key_table()) {
    const bool sweep_range = k.name.starts_with("sweep.axis") && k.name.find('_') != std::string_view::npos;
    if (sweep_range && !axis_slot(cfg, k.name[10] == '1' ? 1 : 2)) continue;
    out += k.name;
    const auto v = k.get(cfg);
    out += v.empty() ? " =" : " = ";
    out += v;
    out += '\n';
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (cfg.grid.points < 2) fail("grid.points", "at least two points are required");
  if (!(cfg.grid.omega_over_omega_m_min < cfg.grid.omega_over_omega_m_max)) {
    fail("grid.omega_over_omega_m_min", "must be below grid.omega_over_omega_m_max");
  }
  if (!(cfg.moments.omega_max_over_omega_m > 0.0)) fail("moments.omega_max_over_omega_m", "must be positive");
  if (!(cfg.moments.rel_tol > 0.0 && cfg.moments.rel_tol < 1.0)) fail("moments.rel_tol", "must lie in (0, 1)");
  if (!(cfg.model.input_coupling > 0.0)) fail("model.input_coupling", "must be positive");
  if (!(cfg.model.sp_photon_weight >= 0.0)) fail("model.sp_photon_weight", "must be non-negative");
  // The threshold is a property of the ratio itself, checked for every kind.
  if (!(cfg.source.epsilon_over_kappa_p >= 0.0 && cfg.source.epsilon_over_kappa_p < 0.5)) {
    fail("source.epsilon_over_kappa_p", "must lie in [0, 0.5); the parametric oscillator is at or above threshold");
  }
  if (!(cfg.source.carrier_offset_over_omega_m >= 0.0)) {
    fail("source.carrier_offset_over_omega_m", "must be non-negative");
  }

  if (cfg.axis2 && !cfg.axis1) fail("sweep.axis2", "requires sweep.axis1");
  if (cfg.axis1 && cfg.axis2 && cfg.axis1->axis == cfg.axis2->axis) fail("sweep.axis2", "duplicates sweep.axis1");
  if (cfg.command == Command::sweep && !cfg.axis1) fail("sweep.axis1", "the sweep command needs an axis");
  for (int w : {1, 2}) {
    const auto& slot = axis_slot(cfg, w);
    if (!slot) continue;
    const std::string prefix = "sweep.axis" + std::to_string(w);
    if (slot->steps == 0) fail(prefix + "_steps", "must be at least 1");
    if (!std::isfinite(slot->min) || !std::isfinite(slot->max)) fail(prefix, "range must be finite");
  }

  validate_physics(cfg, "");
  if (cfg.command != Command::sweep) return;
  // Every admissible range is an interval, so checking the corners suffices.
  for (double a : {cfg.axis1->min, cfg.axis1->max}) {
    auto c1 = with_axis_value(cfg, cfg.axis1->axis, a);
    const std::string ctx1 = std::string("sweep.axis1 = ") + format_number(a);
    if (!cfg.axis2) {
      validate_physics(c1, ctx1);
      continue;
    }
    for (double b : {cfg.axis2->min, cfg.axis2->max}) {
      validate_physics(with_axis_value(c1, cfg.axis2->axis, b),
                       ctx1 + ", sweep.axis2 = " + format_number(b));
    }
  }
}

SystemParams to_system_params(const RunConfig& cfg) {
  const auto& s = cfg.system;
  SystemParams p;
  p.cavity_length = s.length_m;
  p.mirror_mass = s.mass_kg;
  p.mech_freq = constants::two_pi * s.mech_freq_hz;
  p.mech_damping = constants::two_pi * s.mech_damping_hz;
  p.cavity_decay = constants::two_pi * s.cavity_decay_hz;
  p.laser_wavelength = s.laser_wavelength_m;
  p.laser_power = s.power_w;
  p.temperature = s.temperature_k;
  const double delta = s.detuning_over_omega_m * p.mech_freq;
  p.detuning = s.detuning_mode == DetuningMode::bare ? DetuningSpec::bare(delta) : DetuningSpec::effective(delta);
  p.validate();
  return p;
}

SqueezeSource to_source(const RunConfig& cfg) {
  const auto& s = cfg.source;
  const double wm = constants::two_pi * cfg.system.mech_freq_hz;
  const double kappa = constants::two_pi * cfg.system.cavity_decay_hz;
  const double carrier = s.carrier_offset_mode == CarrierMode::omega_m ? wm : s.carrier_offset_over_omega_m * wm;
  const double kp = s.kappa_p_over_kappa * kappa;
  const double phi0 = s.phi0_over_pi * constants::pi;
  switch (s.kind) {
    case SqueezeKind::vacuum: return SqueezeSource::vacuum();
    case SqueezeKind::dpo: return SqueezeSource::dpo(kp, s.epsilon_over_kappa_p * kp, phi0, carrier);
    case SqueezeKind::ndpo:
      return SqueezeSource::ndpo(kp, s.epsilon_over_kappa_p * kp, phi0, s.alpha_over_kappa_p * kp, carrier);
    case SqueezeKind::broadband: return SqueezeSource::broadband(s.broadband_n, s.broadband_m, phi0, carrier);
  }
  return SqueezeSource::vacuum();
}

GridSpec to_grid(const RunConfig& cfg) {
  const double wm = constants::two_pi * cfg.system.mech_freq_hz;
  return {cfg.grid.omega_over_omega_m_min * wm, cfg.grid.omega_over_omega_m_max * wm, cfg.grid.points};
}

CutoffSpec to_cutoff(const RunConfig& cfg) {
  return {cfg.moments.omega_max_over_omega_m, cfg.moments.rel_tol};
}

Conventions to_conventions(const RunConfig& cfg) {
  return {cfg.model.input_coupling, cfg.model.sp_photon_weight};
}

RunConfig with_axis_value(RunConfig cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::power_w: cfg.system.power_w = value; break;
    case SweepAxis::temperature_k: cfg.system.temperature_k = value; break;
    case SweepAxis::detuning_over_omega_m: cfg.system.detuning_over_omega_m = value; break;
    case SweepAxis::kappa_p_over_kappa: cfg.source.kappa_p_over_kappa = value; break;
    case SweepAxis::epsilon_over_kappa_p: cfg.source.epsilon_over_kappa_p = value; break;
    case SweepAxis::phi0_over_pi: cfg.source.phi0_over_pi = value; break;
    case SweepAxis::alpha_over_kappa_p: cfg.source.alpha_over_kappa_p = value; break;
  }
  return cfg;
}

}  // namespace optosq
