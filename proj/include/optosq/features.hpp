#pragma once

// Qualitative feature detection on scanned spectra: resolved peaks, holes
// burnt below a reference (usually vacuum-input) spectrum, pimples and
// dispersive excursions at the squeezing carrier.

#include <string>
#include <vector>

#include "optosq/spectra.hpp"

namespace optosq {

enum class Quadrature { q, p };

enum class SpectralShape {
  no_peak,
  single_peak,
  two_peak_nms,
  three_peak,
  four_peak,
  hole_burning,
  pimple,
  dispersive,
};

const char* to_string(SpectralShape s);

struct FeatureOptions {
  /// Minimum prominence of a peak, and minimum depth/height of a feature
  /// relative to the baseline, as a fraction of the scan maximum.
  double threshold_fraction = 0.02;
  /// A positive excursion at the carrier counts as a pimple only while it
  /// stays below this fraction of the scan maximum; larger excursions are
  /// resolved lines and are classified by peak count.
  double pimple_max_fraction = 0.5;
};

struct Peak {
  double omega = 0.0;
  double height = 0.0;
  double prominence = 0.0;
};

/// Local extremum of S − S_baseline. `amount` is the depth below (dips) or
/// the height above (bumps) the baseline.
struct BaselineFeature {
  double omega = 0.0;
  double amount = 0.0;
};

struct FeatureReport {
  std::vector<Peak> peaks;
  std::vector<BaselineFeature> dips;
  std::vector<BaselineFeature> bumps;
  SpectralShape classification = SpectralShape::no_peak;
  double scan_max = 0.0;
  double carrier_excess = 0.0;          // (S − S_baseline) at the node nearest the carrier
  double max_relative_deviation = 0.0;  // max |S − S_baseline| / S_baseline
};

/// Peaks with topographic prominence above `min_prominence`. Plateaus report
/// their left-most node.
std::vector<Peak> find_peaks(const std::vector<double>& grid, const std::vector<double>& values,
                             double min_prominence);

FeatureReport detect_features(const SpectrumTable& table, Quadrature which,
                              const SpectrumTable& baseline, const FeatureOptions& opts = {});

}  // namespace optosq
