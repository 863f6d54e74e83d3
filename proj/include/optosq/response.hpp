#pragma once

// Frequency-domain transfer functions from the thermal force ξ and the optical
// input noise δa_in to the mirror quadratures:
//   δq(ω) = F₁ξ(ω) + F₂δa_in†(−ω) + F₃δa_in(ω),  δp(ω) = E₁ξ(ω) + ...

#include <complex>

#include "optosq/conventions.hpp"
#include "optosq/core_model.hpp"

namespace optosq {

using cplx = std::complex<double>;

struct ResponseSet {
  double omega = 0.0;
  cplx f1, f2, f3;
  cplx e1, e2, e3;
  cplx d;
};

/// Precomputed scalar parameters; evaluating at a frequency is allocation-free.
class ResponseModel {
 public:
  ResponseModel(const SteadyState& ss, const SystemParams& params, const Conventions& conv = {});
  ResponseModel(double g, double delta, const SystemParams& params, const Conventions& conv = {});

  cplx denominator(double omega) const;
  cplx f1(double omega) const;
  cplx f2(double omega) const;
  cplx f3(double omega) const { return std::conj(f2(-omega)); }
  ResponseSet at(double omega) const;

  double mech_freq() const { return wm_; }

 private:
  double wm_, gm_, kappa_, delta_, g_, f2_scale_;
};

cplx denominator(double omega, const SteadyState& ss, const SystemParams& params);

ResponseSet response_set(double omega, const SteadyState& ss, const SystemParams& params,
                         const Conventions& conv = {});

}  // namespace optosq
