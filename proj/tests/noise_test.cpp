#include <doctest.h>

#include <cmath>

#include "optosq/constants.hpp"
#include "optosq/errors.hpp"
#include "optosq/noise.hpp"
#include "support.hpp"

using namespace optosq;
namespace k = optosq::constants;

TEST_CASE("pump rates") {
  const double kp = 0.1;
  auto [l, m] = pump_rates(kp, 0.4 * kp);
  CHECK(l == doctest::Approx(0.9 * kp));
  CHECK(m == doctest::Approx(0.1 * kp));
  std::tie(l, m) = pump_rates(kp, 0.0);
  CHECK(l == kp / 2.0);
  CHECK(m == kp / 2.0);
  CHECK_THROWS_AS(pump_rates(kp, 0.5 * kp), InvalidParameter);
  CHECK_THROWS_AS(pump_rates(kp, 0.7 * kp), InvalidParameter);
  CHECK_THROWS_AS(pump_rates(0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(pump_rates(kp, -0.01), InvalidParameter);
}

TEST_CASE("epsilon from pump power ratio") {
  CHECK(epsilon_from_power_ratio(0.0, 1.0) == 0.0);
  CHECK(epsilon_from_power_ratio(0.64, 0.1) == doctest::Approx(0.4 * 0.1).epsilon(1e-15));
  CHECK(epsilon_from_power_ratio(1.0 - 1e-12, 1.0) < 0.5);
  CHECK_THROWS_AS(epsilon_from_power_ratio(1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(epsilon_from_power_ratio(-0.1, 1.0), InvalidParameter);
}

TEST_CASE("DPO spectrum at the carrier") {
  // In units of κ_p: λ = 0.9, μ = 0.1.
  const auto src = SqueezeSource::dpo(1.0, 0.4, 0.0, 3.0);
  const auto pt = squeeze_spectrum(src, 3.0);
  const double pre = (0.81 - 0.01) / 4.0;
  CHECK(pt.n == doctest::Approx(pre * (1.0 / 0.01 - 1.0 / 0.81)).epsilon(1e-14));
  CHECK(pt.n == doctest::Approx(19.7531).epsilon(1e-5));
  CHECK(pt.m.real() == doctest::Approx(20.2469).epsilon(1e-5));
  CHECK(std::abs(pt.m.imag()) < 1e-12);
  CHECK(std::norm(pt.m) == doctest::Approx(pt.n * (pt.n + 1.0)).epsilon(1e-12));

  const auto rotated = squeeze_spectrum(SqueezeSource::dpo(1.0, 0.4, k::pi / 2.0, 3.0), 3.0);
  CHECK(std::abs(rotated.m.real()) < 1e-12);
  CHECK(rotated.m.imag() == doctest::Approx(pt.m.real()));
}

TEST_CASE("DPO ideality on random draws") {
  testing::DrawBox box(31);
  for (int i = 0; i < 10000; ++i) {
    const double kp = std::exp(box.uniform(-5.0, 5.0));
    const auto src = SqueezeSource::dpo(kp, box.uniform(0.0, 0.4999) * kp, box.uniform(0.0, k::two_pi), 1.0);
    const auto pt = squeeze_spectrum(src, 1.0 + box.uniform(-10.0, 10.0) * kp);
    const double rhs = pt.n * (pt.n + 1.0);
    if (rhs > 1e-300) {
      REQUIRE(std::abs(std::norm(pt.m) - rhs) <= 1e-9 * rhs);
    }
    REQUIRE(pt.n >= 0.0);
  }
}

TEST_CASE("NDPO bound and mirror symmetry") {
  testing::DrawBox box(32);
  for (int i = 0; i < 10000; ++i) {
    const double kp = std::exp(box.uniform(-5.0, 5.0));
    const double alpha = box.uniform(0.0, 10.0) * kp;
    const auto src = SqueezeSource::ndpo(kp, box.uniform(0.0, 0.4999) * kp, box.uniform(0.0, k::two_pi), alpha, 1.0);
    const double off = box.uniform(-15.0, 15.0) * kp;
    const auto pt = squeeze_spectrum(src, 1.0 + off);
    REQUIRE(std::abs(pt.m) <= std::sqrt(pt.n * (pt.n + 1.0)) + 1e-9);
    const auto mirror = squeeze_spectrum(src, 1.0 - off);
    REQUIRE(mirror.n == doctest::Approx(pt.n).epsilon(1e-12));
  }
  const auto src = SqueezeSource::ndpo(1.0, 0.4, 0.0, 2.0, 3.0);
  CHECK(squeeze_spectrum(src, 5.0).n == doctest::Approx(squeeze_spectrum(src, 1.0).n).epsilon(1e-14));
}

TEST_CASE("NDPO written out") {
  const double kp = 1.0, eps = 0.3, alpha = 2.0, carrier = 4.0;
  const double l = kp / 2 + eps, m = kp / 2 - eps, pre = (l * l - m * m) / 8.0;
  const auto src = SqueezeSource::ndpo(kp, eps, 0.0, alpha, carrier);
  for (double w : {carrier, carrier + 0.3, carrier + alpha, carrier - 1.7}) {
    double n = 0.0, mm = 0.0;
    for (double s : {-alpha, alpha}) {
      const double x = w - carrier + s;
      n += pre * (1.0 / (x * x + m * m) - 1.0 / (x * x + l * l));
      mm += pre * (1.0 / (x * x + m * m) + 1.0 / (x * x + l * l));
    }
    const auto pt = squeeze_spectrum(src, w);
    CHECK(pt.n == doctest::Approx(n).epsilon(1e-13));
    CHECK(pt.m.real() == doctest::Approx(mm).epsilon(1e-13));
  }
}

TEST_CASE("no pump, no squeezing") {
  for (const auto& src : {SqueezeSource::dpo(1.0, 0.0, 0.3, 1.0), SqueezeSource::ndpo(1.0, 0.0, 0.3, 2.0, 1.0),
                          SqueezeSource::vacuum(), SqueezeSource{}}) {
    for (double w : {-3.0, 0.0, 1.0, 2.5}) {
      const auto pt = squeeze_spectrum(src, w);
      CHECK(pt.n == 0.0);
      CHECK(pt.m == std::complex<double>(0.0, 0.0));
    }
  }
  CHECK(SqueezeSource{} == SqueezeSource::vacuum());
}

TEST_CASE("broadband source") {
  const double n = 2.0, m = std::sqrt(6.0);
  const auto src = SqueezeSource::broadband(n, m, k::pi, 1.0);
  for (double w : {-10.0, 0.0, 1.0, 50.0}) {
    const auto pt = squeeze_spectrum(src, w);
    CHECK(pt.n == n);
    CHECK(pt.m.real() == doctest::Approx(-m));
  }
  CHECK_THROWS_AS(SqueezeSource::broadband(2.0, 2.5, 0.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(SqueezeSource::broadband(-1.0, 0.0, 0.0, 1.0), InvalidParameter);
}

TEST_CASE("factories reject out-of-range inputs") {
  CHECK_THROWS_AS(SqueezeSource::dpo(1.0, 0.5, 0.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(SqueezeSource::ndpo(1.0, 0.1, 0.0, -1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(SqueezeSource::dpo(1.0, 0.1, std::nan(""), 1.0), InvalidParameter);
}

TEST_CASE("large bandwidth flattens both sources") {
  const auto p = testing::default_params();
  const double wm = p.mech_freq, kp = 1e4 * p.cavity_decay;
  const auto dpo = SqueezeSource::dpo(kp, 0.3 * kp, 0.0, wm);
  const auto ndpo = SqueezeSource::ndpo(kp, 0.3 * kp, 0.0, 0.5 * p.cavity_decay, wm);
  const auto ref = squeeze_spectrum(dpo, wm);
  for (int i = -100; i <= 100; ++i) {
    const double w = wm + i * 0.1 * wm;
    const auto a = squeeze_spectrum(dpo, w), b = squeeze_spectrum(ndpo, w);
    CHECK(std::abs(a.n - ref.n) < 0.01 * ref.n);
    CHECK(std::abs(std::abs(a.m) - std::abs(ref.m)) < 0.01 * std::abs(ref.m));
    CHECK(std::abs(a.n - b.n) < 0.01 * a.n);
    CHECK(std::abs(a.m - b.m) < 0.01 * std::abs(a.m));
  }
}

TEST_CASE("thermal kernel") {
  auto p = testing::default_params();
  const double gm = p.mech_damping, wm = p.mech_freq;
  const double x = k::hbar * wm / (2.0 * k::k_B * p.temperature);
  CHECK(thermal_kernel(0.0, p) == doctest::Approx(2.0 * gm * k::k_B * p.temperature / (k::hbar * wm)).epsilon(1e-14));
  // High-temperature expansion of coth.
  CHECK(thermal_kernel(wm, p) == doctest::Approx(gm * (1.0 / x + x / 3.0)).epsilon(1e-9));
  CHECK(thermal_kernel(wm, p) == doctest::Approx(3.8986e6).epsilon(1e-4));
  for (double f : {1e-9, 1e-3, 0.5, 1.0, 3.0}) {
    CHECK(thermal_kernel(f * wm, p) == thermal_kernel(-f * wm, p));
  }
  CHECK(thermal_kernel(1e-12 * wm, p) == doctest::Approx(thermal_kernel(0.0, p)).epsilon(1e-9));

  p.temperature = 0.0;
  CHECK(thermal_kernel(wm, p) == doctest::Approx(gm).epsilon(1e-15));
  CHECK(thermal_kernel(-wm, p) == doctest::Approx(gm).epsilon(1e-15));
  CHECK(thermal_kernel(0.0, p) == 0.0);
}
