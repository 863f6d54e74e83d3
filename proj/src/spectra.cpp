#include "optosq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "optosq/errors.hpp"

namespace optosq {

SpectrumModel::SpectrumModel(const SteadyState& ss, const SystemParams& params,
                             const SqueezeSource& src, const Conventions& conv)
    : params_(params), src_(src), conv_(conv), response_(ss, params, conv) {}

SpectrumPoint SpectrumModel::at(double w) const {
  const auto& r = response_;
  const double wm = params_.mech_freq;
  const double ws = src_.carrier();

  const cplx f2_pos = r.f2(w);
  const cplx f2_neg = r.f2(-w);
  const cplx f3_pos = std::conj(f2_neg);
  const cplx f2_pair = r.f2(-2.0 * ws - w);  // partner of δa†(−ω) in ⟨a†a†⟩
  const cplx f3_pair = r.f3(2.0 * ws - w);   // partner of δa(ω) in ⟨aa⟩

  const auto sq_pos = squeeze_spectrum(src_, w);
  const auto sq_neg = squeeze_spectrum(src_, -w);

  const double f1_abs2 = std::norm(r.f1(w));
  const double f2p = std::norm(f2_pos);
  const double f2n = std::norm(f2_neg);

  const cplx corr_dagger = std::conj(sq_neg.m) * f2_pos * f2_pair;
  const cplx corr_plain = sq_pos.m * f3_pos * f3_pair;

  SpectrumPoint pt;
  pt.omega = w;
  pt.n_omega = sq_pos.n;
  pt.m_omega = sq_pos.m;

  pt.q.thermal = f1_abs2 * thermal_kernel(w, params_);
  pt.q.photon_number = f2p * sq_neg.n + f2n * sq_pos.n;
  pt.q.two_photon = std::real(corr_dagger + corr_plain);
  pt.q.vacuum_floor = 0.5 * (f2p + f2n);

  const double ratio2 = (w / wm) * (w / wm);
  const double wm2 = wm * wm;
  pt.p.thermal = ratio2 * pt.q.thermal;
  pt.p.photon_number = ratio2 * conv_.sp_photon_weight * pt.q.photon_number;
  pt.p.two_photon = std::real((-w * (-2.0 * ws - w) / wm2) * corr_dagger +
                              (w * (w - 2.0 * ws) / wm2) * corr_plain);
  pt.p.vacuum_floor = ratio2 * pt.q.vacuum_floor;

  pt.s_q = pt.q.total();
  pt.s_p = pt.p.total();
  return pt;
}

SpectrumPoint spectra_at(double omega, const SteadyState& ss, const SystemParams& params,
                         const SqueezeSource& src, const Conventions& conv) {
  return SpectrumModel(ss, params, src, conv).at(omega);
}

void GridSpec::validate() const {
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max)) {
    throw ConfigError("grid: bounds must be finite");
  }
  if (!(omega_min < omega_max)) throw ConfigError("grid: omega_min must be below omega_max");
  if (n_points < 2) throw ConfigError("grid: at least two points are required");
}

std::vector<double> GridSpec::nodes() const {
  validate();
  std::vector<double> out(n_points);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) out[i] = omega_min + (omega_max - omega_min) * static_cast<double>(i) / last;
  out.back() = omega_max;
  return out;
}

std::vector<double> SpectrumTable::s_q() const {
  std::vector<double> v(points.size());
  std::transform(points.begin(), points.end(), v.begin(), [](const auto& p) { return p.s_q; });
  return v;
}

std::vector<double> SpectrumTable::s_p() const {
  std::vector<double> v(points.size());
  std::transform(points.begin(), points.end(), v.begin(), [](const auto& p) { return p.s_p; });
  return v;
}

SpectrumTable spectrum_scan(const GridSpec& grid, const SystemParams& params,
                            const SqueezeSource& src, const Conventions& conv,
                            BranchSelector branch, unsigned threads) {
  SpectrumTable table;
  table.grid = grid.nodes();
  auto& meta = table.metadata;
  meta.params = params;
  meta.derived = derive(params);
  meta.steady_state = solve_steady_state(params, meta.derived, branch);
  meta.source = src;
  meta.conventions = conv;
  meta.stability = check_stability(drift_matrix(meta.steady_state, params));

  const SpectrumModel model(meta.steady_state, params, src, conv);
  const std::size_t n = table.grid.size();
  table.points.resize(n);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 512));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) table.points[i] = model.at(table.grid[i]);
  };
  if (workers <= 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(work, b, std::min(n, b + chunk));
  }
  return table;
}

}  // namespace optosq
