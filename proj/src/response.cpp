#include "optosq/response.hpp"

#include <cmath>

namespace optosq {

ResponseModel::ResponseModel(double g, double delta, const SystemParams& params,
                             const Conventions& conv)
    : wm_(params.mech_freq),
      gm_(params.mech_damping),
      kappa_(params.cavity_decay),
      delta_(delta),
      g_(g),
      f2_scale_(g * params.mech_freq * std::sqrt(params.cavity_decay) * conv.input_coupling) {}

ResponseModel::ResponseModel(const SteadyState& ss, const SystemParams& params,
                             const Conventions& conv)
    : ResponseModel(ss.g, ss.delta_eff, params, conv) {}

cplx ResponseModel::denominator(double w) const {
  const cplx kw(kappa_, -w);  // κ − iω
  const cplx optical = delta_ * delta_ + kw * kw;
  const cplx mechanical(wm_ * wm_ - w * w, -w * gm_);
  return optical * mechanical - g_ * g_ * wm_ * delta_;
}

cplx ResponseModel::f1(double w) const {
  const cplx kw(kappa_, -w);
  return wm_ * (kw * kw + delta_ * delta_) / denominator(w);
}

cplx ResponseModel::f2(double w) const {
  return f2_scale_ * cplx(kappa_, delta_ - w) / denominator(w);
}

ResponseSet ResponseModel::at(double w) const {
  ResponseSet r;
  r.omega = w;
  r.d = denominator(w);
  const cplx kw(kappa_, -w);
  r.f1 = wm_ * (kw * kw + delta_ * delta_) / r.d;
  r.f2 = f2_scale_ * cplx(kappa_, delta_ - w) / r.d;
  r.f3 = f3(w);
  const cplx factor(0.0, -w / wm_);
  r.e1 = factor * r.f1;
  r.e2 = factor * r.f2;
  r.e3 = factor * r.f3;
  return r;
}

cplx denominator(double omega, const SteadyState& ss, const SystemParams& params) {
  return ResponseModel(ss, params).denominator(omega);
}

ResponseSet response_set(double omega, const SteadyState& ss, const SystemParams& params,
                         const Conventions& conv) {
  return ResponseModel(ss, params, conv).at(omega);
}

}  // namespace optosq
