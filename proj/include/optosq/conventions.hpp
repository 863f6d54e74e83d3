#pragma once

#include <numbers>

namespace optosq {

// Two prefactors of the model are ambiguous by a factor of two. Both are
// switchable so results can be compared across conventions.

/// Scale applied to the √κ input-coupling factor of F₂. 1 keeps the plain √κ;
/// √2 corresponds to the √(2κ) coupling of the field equation.
inline constexpr double kPlainInputCoupling = 1.0;
inline constexpr double kTwoKappaInputCoupling = std::numbers::sqrt2;

/// Weight of the photon-number terms in S_p relative to S_q. 0.5 is the
/// alternative weighting; 1 follows from E_l = −i(ω/ω_m) F_l and keeps S_p ≥ 0 for
/// broadband squeezing.
inline constexpr double kHalfSpPhotonWeight = 0.5;
inline constexpr double kConsistentSpPhotonWeight = 1.0;

struct Conventions {
  double input_coupling = kPlainInputCoupling;
  double sp_photon_weight = kConsistentSpPhotonWeight;

  friend bool operator==(const Conventions&, const Conventions&) = default;
};

}  // namespace optosq
