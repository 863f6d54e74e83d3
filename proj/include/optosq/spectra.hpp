#pragma once

// Symmetrised displacement and momentum fluctuation spectra of the mirror.
//
// Spectra are in the native units of the dimensionless quadratures, i.e.
// 1/(rad/s): ∫ dω/2π S(ω) is a dimensionless variance.

#include <cstddef>
#include <vector>

#include "optosq/conventions.hpp"
#include "optosq/core_model.hpp"
#include "optosq/noise.hpp"
#include "optosq/response.hpp"

namespace optosq {

/// Additive breakdown of one spectrum. total() is the plain sum.
struct SpectrumComponents {
  double thermal = 0.0;
  double photon_number = 0.0;
  double two_photon = 0.0;
  double vacuum_floor = 0.0;

  double total() const { return thermal + photon_number + two_photon + vacuum_floor; }
};

struct SpectrumPoint {
  double omega = 0.0;
  double s_q = 0.0;
  double s_p = 0.0;
  SpectrumComponents q;
  SpectrumComponents p;
  double n_omega = 0.0;        // N(ω) of the source
  std::complex<double> m_omega{};  // M(ω) of the source
};

/// Everything needed to evaluate the spectra, bundled once per scan.
class SpectrumModel {
 public:
  SpectrumModel(const SteadyState& ss, const SystemParams& params, const SqueezeSource& src,
                const Conventions& conv = {});

  SpectrumPoint at(double omega) const;

  const ResponseModel& response() const { return response_; }
  const SqueezeSource& source() const { return src_; }
  const SystemParams& params() const { return params_; }
  const Conventions& conventions() const { return conv_; }

 private:
  SystemParams params_;
  SqueezeSource src_;
  Conventions conv_;
  ResponseModel response_;
};

SpectrumPoint spectra_at(double omega, const SteadyState& ss, const SystemParams& params,
                         const SqueezeSource& src, const Conventions& conv = {});

struct GridSpec {
  double omega_min = 0.0;  // rad/s
  double omega_max = 0.0;  // rad/s
  std::size_t n_points = 4001;

  void validate() const;
  std::vector<double> nodes() const;
};

struct SpectrumMetadata {
  SystemParams params;
  DerivedParams derived;
  SteadyState steady_state;
  SqueezeSource source;
  Conventions conventions;
  StabilityReport stability;
};

struct SpectrumTable {
  std::vector<double> grid;
  std::vector<SpectrumPoint> points;
  SpectrumMetadata metadata;

  std::vector<double> s_q() const;
  std::vector<double> s_p() const;
};

/// Evaluates the spectra on a linear grid. Nodes are split across worker
/// threads; output order always follows the grid.
SpectrumTable spectrum_scan(const GridSpec& grid, const SystemParams& params,
                            const SqueezeSource& src, const Conventions& conv = {},
                            BranchSelector branch = BranchSelector::lowest,
                            unsigned threads = 0);

}  // namespace optosq
