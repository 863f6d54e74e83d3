#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "optosq/config.hpp"
#include "optosq/constants.hpp"
#include "optosq/errors.hpp"
#include "optosq/presets.hpp"

using namespace optosq;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("empty document is the default preset") {
  CHECK(parse_config("") == preset("paper-default"));
  CHECK(parse_config("# only a comment\n\n   \n") == preset("paper-default"));
}

TEST_CASE("default preset holds the reference system") {
  const auto c = preset("paper-default");
  CHECK(c.system.length_m == 25e-3);
  CHECK(c.system.mass_kg == 145e-12);
  CHECK(c.system.mech_freq_hz == 947e3);
  CHECK(c.system.mech_damping_hz == 141.0);
  CHECK(c.system.cavity_decay_hz == 215e3);
  CHECK(c.system.laser_wavelength_m == 1064e-9);
  CHECK(c.system.power_w == 5e-3);
  CHECK(c.system.temperature_k == 0.1);
  CHECK(c.system.detuning_mode == DetuningMode::effective);
  CHECK(c.system.detuning_over_omega_m == 1.0);
  CHECK(c.source.kind == SqueezeKind::vacuum);
  CHECK(c.grid.points == 4001);
  CHECK(c.moments.omega_max_over_omega_m == 20.0);
  CHECK(c.moments.rel_tol == 1e-6);

  const auto p = to_system_params(c);
  CHECK(p.mech_freq == doctest::Approx(constants::two_pi * 947e3).epsilon(1e-15));
  CHECK(p.detuning.value == p.mech_freq);
}

TEST_CASE("assignments and comments") {
  const auto c = parse_config(
      "# header\n"
      "system.power_w = 0.002   # inline comment\n"
      "source.kind = ndpo\n"
      "source.kappa_p_over_kappa=0.1\n"
      "  source.alpha_over_kappa_p  =  2  \n"
      "output.format = json\n");
  CHECK(c.system.power_w == 0.002);
  CHECK(c.source.kind == SqueezeKind::ndpo);
  CHECK(c.source.kappa_p_over_kappa == 0.1);
  CHECK(c.source.alpha_over_kappa_p == 2.0);
  CHECK(c.output.format == OutputFormat::json);
}

TEST_CASE("unit suffixes") {
  auto c = parse_config("system.power_w = 5 mW\nsystem.mech_freq_hz = 947 kHz\nsystem.mass_kg = 145 ng\n"
                        "system.length_m = 25 mm\nsystem.temperature_k = 100 mK\n"
                        "system.laser_wavelength_m = 1064 nm\n");
  CHECK(c.system.power_w == 0.005);
  CHECK(c.system.mech_freq_hz == 947000.0);
  CHECK(c.system.mass_kg == doctest::Approx(145e-12).epsilon(1e-15));
  CHECK(c.system.length_m == 0.025);
  CHECK(c.system.temperature_k == 0.1);
  CHECK(c.system.laser_wavelength_m == doctest::Approx(1064e-9).epsilon(1e-15));

  CHECK(error_of("system.power_w = 5 kHz").find("unit mismatch") != std::string::npos);
  CHECK(error_of("source.phi0_over_pi = 1 mW").find("unit mismatch") != std::string::npos);
  CHECK(error_of("system.mech_freq_hz = 947 furlongs").find("system.mech_freq_hz") != std::string::npos);
}

TEST_CASE("threshold violation names the key") {
  const auto msg = error_of("source.kind = dpo\nsource.epsilon_over_kappa_p = 0.6\n");
  CHECK(msg.find("source.epsilon_over_kappa_p") != std::string::npos);
  CHECK_FALSE(error_of("source.epsilon_over_kappa_p = 0.6").empty());
  CHECK(error_of("source.kind = dpo\nsource.kappa_p_over_kappa = 0.1\nsource.epsilon_over_kappa_p = 0.49").empty());
}

TEST_CASE("malformed documents") {
  CHECK(error_of("system.nonsense = 1").find("system.nonsense") != std::string::npos);
  CHECK(error_of("system.power_w = 1\nsystem.power_w = 2").find("duplicate") != std::string::npos);
  CHECK_FALSE(error_of("system.power_w").empty());
  CHECK_FALSE(error_of("system.power_w = ").empty());
  CHECK_FALSE(error_of("system.power_w = abc").empty());
  CHECK_FALSE(error_of("system.power_w = nan").empty());
  CHECK_FALSE(error_of("system.power_w = -1").empty());
  CHECK_FALSE(error_of("source.kind = laser").empty());
  CHECK_FALSE(error_of("grid.points = 1").empty());
  CHECK_FALSE(error_of("grid.points = 2.5").empty());
  CHECK_FALSE(error_of("grid.omega_over_omega_m_min = 2").empty());
  CHECK_FALSE(error_of("moments.rel_tol = 0").empty());
  CHECK_FALSE(error_of("system.detuning_mode = sideways").empty());
  CHECK_FALSE(error_of("run.command = plot").empty());
}

TEST_CASE("sweep settings") {
  CHECK(error_of("run.command = sweep\nsweep.axis1 = phi0_over_pi\nsweep.axis1_steps = 0\n")
            .find("sweep.axis1_steps") != std::string::npos);
  CHECK_FALSE(error_of("run.command = sweep").empty());
  CHECK_FALSE(error_of("sweep.axis2 = power_w").empty());
  CHECK_FALSE(error_of("sweep.axis1 = phi0_over_pi\nsweep.axis2 = phi0_over_pi").empty());
  CHECK_FALSE(error_of("sweep.axis1 = mass").empty());
  // Sweep corners are validated like single points.
  CHECK_FALSE(error_of("source.kind = dpo\nsweep.axis1 = epsilon_over_kappa_p\nsweep.axis1_min = 0\n"
                       "sweep.axis1_max = 0.7\n")
                  .empty());

  const auto c = parse_config("run.command = sweep\nsweep.axis1 = power_w\nsweep.axis1_min = 1 mW\n"
                              "sweep.axis1_max = 3 mW\nsweep.axis1_steps = 3\n");
  REQUIRE(c.axis1);
  CHECK(c.axis1->axis == SweepAxis::power_w);
  CHECK(c.axis1->values() == std::vector<double>{0.001, 0.002, 0.003});
  CHECK_FALSE(error_of("sweep.axis1 = phi0_over_pi\nsweep.axis1_max = 2 mW").empty());
  CHECK_FALSE(error_of("sweep.axis1_min = 0").empty());
  CHECK(with_axis_value(c, SweepAxis::power_w, 0.004).system.power_w == 0.004);
  CHECK(with_axis_value(c, SweepAxis::phi0_over_pi, 0.25).source.phi0_over_pi == 0.25);

  SweepAxisSpec single{SweepAxis::temperature_k, 0.5, 0.9, 1};
  CHECK(single.values() == std::vector<double>{0.5});
}

TEST_CASE("canonical form round-trips for every preset") {
  for (auto name : preset_names()) {
    CAPTURE(name);
    const auto c = preset(name);
    const auto text = serialize(c);
    const auto back = parse_config(text, preset("paper-default"));
    CHECK(back == c);
    CHECK(serialize(back) == text);
    CHECK(parse_config(text) == c);
  }
}

TEST_CASE("canonical form of a hand-written document") {
  const auto c = parse_config("system.power_w = 2mW\nsource.kind = dpo\nsource.kappa_p_over_kappa = 1\n"
                              "source.phi0_over_pi = 0.1\n");
  const auto text = serialize(c);
  CHECK(text.find("system.power_w = 0.002\n") != std::string::npos);
  CHECK(text.find("source.phi0_over_pi = 0.1\n") != std::string::npos);
  CHECK(text.find("sweep.axis1 = none\n") != std::string::npos);
  CHECK(parse_config(text) == c);
}

TEST_CASE("random configurations round-trip") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    auto c = preset("paper-default");
    c.system.power_w = 0.02 * u(rng);
    c.system.temperature_k = u(rng);
    c.system.detuning_over_omega_m = 0.5 + u(rng);
    c.source.kind = SqueezeKind::ndpo;
    c.source.kappa_p_over_kappa = 10.0 * u(rng) + 1e-3;
    c.source.epsilon_over_kappa_p = 0.49 * u(rng);
    c.source.phi0_over_pi = 2.0 * u(rng);
    c.source.alpha_over_kappa_p = 5.0 * u(rng);
    validate(c);
    REQUIRE(parse_config(serialize(c)) == c);
  }
}

TEST_CASE("presets") {
  const auto names = preset_names();
  CHECK(names.size() == 9);
  CHECK(names.front() == "paper-default");
  for (auto name : names) CHECK_NOTHROW(validate(preset(name)));
  CHECK_THROWS_AS(preset("fig99"), ConfigError);

  const auto fig2 = preset("fig2");
  CHECK(fig2.source.kind == SqueezeKind::dpo);
  CHECK(fig2.source.kappa_p_over_kappa == 0.1);
  CHECK(fig2.source.epsilon_over_kappa_p == 0.4);
  CHECK(fig2.source.phi0_over_pi == 0.0);

  const auto fig9a = preset("fig9a");
  CHECK(fig9a.command == Command::sweep);
  REQUIRE(fig9a.axis1);
  CHECK(fig9a.axis1->axis == SweepAxis::phi0_over_pi);
}

TEST_CASE("preset table is pinned") {
  // Any change to a default value must be deliberate: update this hash with it.
  CHECK(preset_table_hash() == 15000140046435332765ULL);
}

TEST_CASE("conversion to physical quantities") {
  const auto c = parse_config("source.kind = ndpo\nsource.kappa_p_over_kappa = 0.1\n"
                              "source.epsilon_over_kappa_p = 0.4\nsource.phi0_over_pi = 1\n"
                              "source.alpha_over_kappa_p = 2\n");
  const auto p = to_system_params(c);
  const auto s = to_source(c);
  CHECK(s.kind() == SqueezeKind::ndpo);
  CHECK(s.kappa_p() == doctest::Approx(0.1 * p.cavity_decay).epsilon(1e-15));
  CHECK(s.eps() == doctest::Approx(0.04 * p.cavity_decay).epsilon(1e-15));
  CHECK(s.alpha() == doctest::Approx(0.2 * p.cavity_decay).epsilon(1e-15));
  CHECK(s.phi0() == doctest::Approx(constants::pi).epsilon(1e-15));
  CHECK(s.carrier() == p.mech_freq);

  auto custom = c;
  custom.source.carrier_offset_mode = CarrierMode::custom;
  custom.source.carrier_offset_over_omega_m = 1.1;
  CHECK(to_source(custom).carrier() == doctest::Approx(1.1 * p.mech_freq).epsilon(1e-15));

  const auto g = to_grid(c);
  CHECK(g.omega_min == doctest::Approx(0.8 * p.mech_freq).epsilon(1e-15));
  CHECK(g.n_points == 4001);
  CHECK(to_cutoff(c).omega_max_over_omega_m == 20.0);
  CHECK(to_conventions(c) == Conventions{});
}

TEST_CASE("shortest round-trip numbers") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(5e-3) == "0.005");
  CHECK(format_number(1.45e-10) == "1.45e-10");
  CHECK(format_number(4001) == "4001");
  for (double v : {1.0 / 3.0, 2.0 / 7.0 * 1e-200, 6.02214076e23, -0.0625}) {
    CHECK(std::stod(format_number(v)) == v);
  }
}
