#include "landau/interaction.hpp"

#include <cmath>

namespace landau {

InteractionKernel InteractionKernel::coulomb(int sign) {
  if (sign != 1 && sign != -1) throw argument_error("coulomb: sign must be +1 or -1");
  InteractionKernel w;
  w.kind_ = InteractionKind::Coulomb;
  w.sign_ = sign;
  w.gamma_ = 2.0;
  return w;
}

InteractionKernel InteractionKernel::screened() {
  InteractionKernel w;
  w.kind_ = InteractionKind::Screened;
  w.gamma_ = 2.0;
  return w;
}

InteractionKernel InteractionKernel::power_law(double gamma, int sign) {
  if (!(gamma > 0.0)) throw argument_error("power_law: gamma must be positive");
  if (sign != 1 && sign != -1) throw argument_error("power_law: sign must be +1 or -1");
  InteractionKernel w;
  w.kind_ = InteractionKind::PowerLaw;
  w.sign_ = sign;
  w.gamma_ = gamma;
  return w;
}

InteractionKernel InteractionKernel::custom(std::map<int, double> by_abs_k) {
  InteractionKernel w;
  w.kind_ = InteractionKind::Custom;
  w.table_ = std::move(by_abs_k);
  return w;
}

double InteractionKernel::symbol(const IntVec& k) const {
  if (k.is_zero()) throw argument_error("interaction symbol: k = 0 has no field");
  const double k2 = k.norm2();
  switch (kind_) {
    case InteractionKind::Coulomb: return sign_ / k2;
    case InteractionKind::Screened: return 1.0 / (1.0 + k2);
    case InteractionKind::PowerLaw: return sign_ * std::pow(k2, -0.5 * gamma_);
    case InteractionKind::Custom: {
      const int a = static_cast<int>(std::lround(std::sqrt(k2)));
      auto it = table_.find(a);
      return it == table_.end() ? 0.0 : it->second;
    }
  }
  return 0.0;
}

InteractionKernel::DecayEstimate InteractionKernel::decay_estimate(int k_probe_max) const {
  // fit log|W^| against -gamma log|k| over k = 1..k_probe_max, then report the
  // smallest constant making the bound hold on the probe range
  std::vector<double> lx, ly;
  for (int k = 1; k <= k_probe_max; ++k) {
    const double w = std::abs(symbol(IntVec{k}));
    if (w <= 0.0) continue;
    lx.push_back(std::log(static_cast<double>(k)));
    ly.push_back(std::log(w));
  }
  DecayEstimate est;
  if (lx.size() < 2) {
    est.gamma = 0.0;
    est.constant = lx.empty() ? 0.0 : std::exp(ly[0]);
    return est;
  }
  const LineFit fit = fit_line(lx, ly);
  est.gamma = -fit.slope;
  double c = 0.0;
  for (size_t i = 0; i < lx.size(); ++i) c = std::max(c, std::exp(ly[i] + est.gamma * lx[i]));
  est.constant = c;
  return est;
}

}  // namespace landau
