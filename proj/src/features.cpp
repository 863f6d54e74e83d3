#include "optosq/features.hpp"

#include <algorithm>
#include <cmath>

#include "optosq/errors.hpp"

namespace optosq {

const char* to_string(SpectralShape s) {
  switch (s) {
    case SpectralShape::no_peak: return "no_peak";
    case SpectralShape::single_peak: return "single_peak";
    case SpectralShape::two_peak_nms: return "two_peak_NMS";
    case SpectralShape::three_peak: return "three_peak";
    case SpectralShape::four_peak: return "four_peak";
    case SpectralShape::hole_burning: return "hole_burning";
    case SpectralShape::pimple: return "pimple";
    case SpectralShape::dispersive: return "dispersive";
  }
  return "unknown";
}

std::vector<Peak> find_peaks(const std::vector<double>& grid, const std::vector<double>& y,
                             double min_prominence) {
  std::vector<Peak> out;
  const std::size_t n = y.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1])) continue;
    std::size_t j = i;
    while (j + 1 < n && y[j + 1] == y[i]) ++j;
    if (j + 1 >= n || !(y[j + 1] < y[i])) {
      i = j;
      continue;
    }
    const double h = y[i];
    double left_min = h;
    for (std::size_t k = i; k-- > 0;) {
      if (y[k] > h) break;
      left_min = std::min(left_min, y[k]);
    }
    double right_min = h;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (y[k] > h) break;
      right_min = std::min(right_min, y[k]);
    }
    const double prominence = h - std::max(left_min, right_min);
    if (prominence > min_prominence) out.push_back({grid[i], h, prominence});
    i = j;
  }
  return out;
}

namespace {

std::vector<double> values_of(const SpectrumTable& t, Quadrature which) {
  return which == Quadrature::q ? t.s_q() : t.s_p();
}

std::vector<BaselineFeature> extrema_beyond(const std::vector<double>& grid,
                                            const std::vector<double>& signal, double thr) {
  std::vector<BaselineFeature> out;
  for (const auto& pk : find_peaks(grid, signal, thr)) {
    if (pk.height > thr) out.push_back({pk.omega, pk.height});
  }
  return out;
}

SpectralShape by_peak_count(std::size_t n) {
  switch (n) {
    case 0: return SpectralShape::no_peak;
    case 1: return SpectralShape::single_peak;
    case 2: return SpectralShape::two_peak_nms;
    case 3: return SpectralShape::three_peak;
    default: return SpectralShape::four_peak;
  }
}

}  // namespace

FeatureReport detect_features(const SpectrumTable& table, Quadrature which,
                              const SpectrumTable& baseline, const FeatureOptions& opts) {
  if (table.grid.size() != baseline.grid.size()) {
    throw ConfigError("detect_features: table and baseline grids differ in length");
  }
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    const double a = table.grid[i];
    const double b = baseline.grid[i];
    if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
      throw ConfigError("detect_features: table and baseline grids differ");
    }
  }

  const auto& grid = table.grid;
  const auto y = values_of(table, which);
  const auto base = values_of(baseline, which);
  const std::size_t n = y.size();

  FeatureReport rep;
  if (n == 0) return rep;
  rep.scan_max = *std::max_element(y.begin(), y.end());
  const double thr = opts.threshold_fraction * rep.scan_max;

  std::vector<double> excess(n), deficit(n);
  for (std::size_t i = 0; i < n; ++i) {
    excess[i] = y[i] - base[i];
    deficit[i] = -excess[i];
    if (base[i] != 0.0) {
      rep.max_relative_deviation =
          std::max(rep.max_relative_deviation, std::abs(excess[i]) / std::abs(base[i]));
    }
  }

  rep.peaks = find_peaks(grid, y, thr);
  rep.dips = extrema_beyond(grid, deficit, thr);
  rep.bumps = extrema_beyond(grid, excess, thr);

  const auto& src = table.metadata.source;
  const bool narrowband = src.kind() == SqueezeKind::dpo || src.kind() == SqueezeKind::ndpo;
  const double carrier = src.carrier();
  const bool carrier_on_grid = narrowband && carrier >= grid.front() && carrier <= grid.back();

  if (carrier_on_grid) {
    const auto c = static_cast<std::size_t>(
        std::min_element(grid.begin(), grid.end(),
                         [&](double a, double b) { return std::abs(a - carrier) < std::abs(b - carrier); }) -
        grid.begin());
    rep.carrier_excess = excess[c];

    if (excess[c] < -thr) {
      rep.classification = SpectralShape::hole_burning;
      return rep;
    }

    // Opposite-sign excursions on either side of the carrier.
    const double window = src.lambda() + src.alpha();
    double left_max = 0.0, left_min = 0.0, right_max = 0.0, right_min = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double off = grid[i] - carrier;
      if (std::abs(off) > window || i == c) continue;
      if (off < 0.0) {
        left_max = std::max(left_max, excess[i]);
        left_min = std::min(left_min, excess[i]);
      } else {
        right_max = std::max(right_max, excess[i]);
        right_min = std::min(right_min, excess[i]);
      }
    }
    const bool up_down = left_max > thr && right_min < -thr;
    const bool down_up = left_min < -thr && right_max > thr;
    if ((up_down || down_up) && std::abs(excess[c]) < thr) {
      rep.classification = SpectralShape::dispersive;
      return rep;
    }

    if (rep.peaks.size() < 2 && excess[c] > 0.0 &&
        excess[c] < opts.pimple_max_fraction * rep.scan_max) {
      auto excess_at = [&](double w) {
        const auto it = std::lower_bound(grid.begin(), grid.end(), w);
        if (it == grid.end()) return excess.back();
        return excess[static_cast<std::size_t>(it - grid.begin())];
      };
      const double flank = src.lambda();
      if (excess[c] > excess_at(carrier - flank) && excess[c] > excess_at(carrier + flank)) {
        rep.classification = SpectralShape::pimple;
        return rep;
      }
    }
  }

  rep.classification = by_peak_count(rep.peaks.size());
  return rep;
}

}  // namespace optosq
