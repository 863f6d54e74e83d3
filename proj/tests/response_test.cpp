#include <doctest.h>

#include <cmath>

#include "optosq/conventions.hpp"
#include "optosq/response.hpp"
#include "support.hpp"

using namespace optosq;

TEST_CASE("denominator at zero frequency") {
  const auto p = testing::default_params();
  const auto ss = solve_steady_state(p);
  const double kap = p.cavity_decay, dl = ss.delta_eff, wm = p.mech_freq;
  const cplx expected = (dl * dl + kap * kap) * wm * wm - ss.g * ss.g * wm * dl;
  CHECK(std::abs(denominator(0.0, ss, p) - expected) <= 1e-14 * std::abs(expected));
}

TEST_CASE("denominator written out at the mechanical frequency") {
  const auto p = testing::default_params();
  const auto ss = solve_steady_state(p);
  const double kap = p.cavity_decay, dl = ss.delta_eff, wm = p.mech_freq, gm = p.mech_damping;
  const double w = wm;
  // [Δ² + (κ − iω)²](ω_m² − ω² − iωγ_m) − g²ω_mΔ, expanded into real and imaginary parts.
  const double opt_re = dl * dl + kap * kap - w * w, opt_im = -2.0 * kap * w;
  const double mech_re = wm * wm - w * w, mech_im = -w * gm;
  const double re = opt_re * mech_re - opt_im * mech_im - ss.g * ss.g * wm * dl;
  const double im = opt_re * mech_im + opt_im * mech_re;
  const cplx d = denominator(w, ss, p);
  CHECK(d.real() == doctest::Approx(re).epsilon(1e-12));
  CHECK(d.imag() == doctest::Approx(im).epsilon(1e-12));
  CHECK(std::abs(d) > 0.0);
}

TEST_CASE("decoupled limit") {
  const auto p = testing::default_params();
  const ResponseModel r(0.0, p.mech_freq, p);
  for (double x : {0.0, 0.5, 0.999, 1.0, 1.3, -2.0}) {
    const double w = x * p.mech_freq;
    const auto s = r.at(w);
    CHECK(s.f2 == cplx(0.0, 0.0));
    CHECK(s.f3 == cplx(0.0, 0.0));
    const cplx chi = p.mech_freq / cplx(p.mech_freq * p.mech_freq - w * w, -w * p.mech_damping);
    CHECK(std::abs(s.f1 - chi) <= 1e-12 * std::abs(chi));
    const auto g0 = r.denominator(w);
    const cplx kw(p.cavity_decay, -w);
    const cplx expected = (p.mech_freq * p.mech_freq + kw * kw) * cplx(p.mech_freq * p.mech_freq - w * w, -w * p.mech_damping);
    CHECK(std::abs(g0 - expected) <= 1e-12 * std::abs(expected));
  }
}

TEST_CASE("momentum responses vanish at zero frequency") {
  const auto p = testing::default_params();
  const auto s = response_set(0.0, solve_steady_state(p), p);
  CHECK(s.e1 == cplx(0.0, 0.0));
  CHECK(s.e2 == cplx(0.0, 0.0));
  CHECK(s.e3 == cplx(0.0, 0.0));
}

TEST_CASE("transfer functions against closed forms on random frequencies") {
  testing::DrawBox box(21);
  for (int i = 0; i < 1000; ++i) {
    const auto d = box.next();
    const auto ss = solve_steady_state(d.params);
    const ResponseModel r(ss, d.params);
    const double wm = d.params.mech_freq, kap = d.params.cavity_decay, dl = ss.delta_eff;
    const double w = box.uniform(-5.0, 5.0) * wm;
    const auto s = r.at(w);
    const cplx kw(kap, -w);
    const cplx f1 = wm * (kw * kw + dl * dl) / s.d;
    const cplx f2 = ss.g * wm * std::sqrt(kap) * cplx(kap, dl - w) / s.d;
    const cplx f3 = ss.g * wm * std::sqrt(kap) * cplx(kap, -(dl + w)) / s.d;
    CHECK(std::abs(s.f1 - f1) <= 1e-12 * std::abs(f1));
    CHECK(std::abs(s.f2 - f2) <= 1e-12 * std::abs(f2));
    CHECK(std::abs(s.f3 - f3) <= 1e-12 * std::abs(f3));
    CHECK(std::abs(s.f3 - std::conj(r.f2(-w))) <= 1e-12 * std::abs(f3));
    const cplx m(0.0, -w / wm);
    CHECK(std::abs(s.e1 - m * f1) <= 1e-12 * std::abs(s.e1));
    CHECK(std::abs(s.e2 - m * f2) <= 1e-12 * std::abs(s.e2));
    CHECK(std::abs(s.e3 - m * f3) <= 1e-12 * std::abs(s.e3));
    // Real parameters: F1(−ω) = F1(ω)*.
    CHECK(std::abs(r.f1(-w) - std::conj(s.f1)) <= 1e-12 * std::abs(s.f1));
  }
}

TEST_CASE("input coupling convention scales the optical responses") {
  const auto p = testing::default_params();
  const auto ss = solve_steady_state(p);
  const ResponseModel plain(ss, p);
  const ResponseModel doubled(ss, p, Conventions{kTwoKappaInputCoupling, kConsistentSpPhotonWeight});
  const double w = 1.01 * p.mech_freq;
  CHECK(std::abs(doubled.f2(w) - plain.f2(w) * std::sqrt(2.0)) <= 1e-15 * std::abs(doubled.f2(w)));
  CHECK(std::abs(doubled.f3(w) - plain.f3(w) * std::sqrt(2.0)) <= 1e-15 * std::abs(doubled.f3(w)));
  CHECK(doubled.f1(w) == plain.f1(w));
}

TEST_CASE("large-frequency decay of the mechanical response") {
  const auto p = testing::default_params();
  const auto ss = solve_steady_state(p);
  const ResponseModel r(ss, p);
  const double top = 10.0 * std::max({p.mech_freq, p.cavity_decay, std::abs(ss.delta_eff)});
  // |F1| → ω_m/ω², so |F1|ω²/ω_m approaches one and stays bounded.
  double prev_err = 1.0;
  for (double scale : {1.0, 10.0, 100.0}) {
    const double w = scale * top;
    const double c = std::abs(r.f1(w)) * w * w / p.mech_freq;
    CHECK(c < 1.1);
    const double err = std::abs(c - 1.0);
    CHECK(err <= prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-3);
}

TEST_CASE("no real poles for a stable steady state") {
  const auto p = testing::default_params();
  const auto ss = solve_steady_state(p);
  const ResponseModel r(ss, p);
  const double scale = std::pow(p.mech_freq, 4);
  double smallest = std::abs(r.denominator(0.0));
  for (int i = -200000; i <= 200000; ++i) {
    smallest = std::min(smallest, std::abs(r.denominator(i * 3e-5 * p.mech_freq)));
  }
  CHECK(smallest > 1e-6 * scale);
}
