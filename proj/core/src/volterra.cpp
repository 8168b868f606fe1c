#include "landau/volterra.hpp"

#include <cmath>

namespace landau {

std::vector<complexd> solve_volterra(const VolterraProblem& p) {
  if (!(p.dt > 0.0)) throw argument_error("solve_volterra: dt must be positive");
  if (p.H.size() != p.K.size() || p.H.empty())
    throw argument_error("solve_volterra: H and K must have equal nonzero length");
  const size_t n = p.H.size();
  const complexd denom = 1.0 - 0.5 * p.dt * p.K[0];
  if (std::abs(denom) < 1e-12)
    throw numerical_error("solve_volterra: implicit step singular, reduce dt");
  std::vector<complexd> rho(n);
  rho[0] = p.H[0];
  for (size_t j = 1; j < n; ++j) {
    complexd s = 0.5 * p.K[j] * rho[0];
    for (size_t i = 1; i < j; ++i) s += p.K[j - i] * rho[i];
    rho[j] = (p.H[j] + p.dt * s) / denom;
  }
  return rho;
}

std::vector<complexd> apply_resolvent(const std::vector<complexd>& R,
                                      const std::vector<complexd>& H, double dt) {
  if (R.size() != H.size()) throw argument_error("apply_resolvent: grid length mismatch");
  if (!(dt > 0.0)) throw argument_error("apply_resolvent: dt must be positive");
  const size_t n = H.size();
  std::vector<complexd> rho(n);
  if (n == 0) return rho;
  rho[0] = H[0];
  for (size_t j = 1; j < n; ++j) {
    complexd s = 0.5 * (R[j] * H[0] + R[0] * H[j]);
    for (size_t i = 1; i < j; ++i) s += R[j - i] * H[i];
    rho[j] = H[j] + dt * s;
  }
  return rho;
}

std::vector<double> resolvent_closed_form(double alpha, double lambda,
                                          const std::vector<double>& t_grid) {
  if (alpha == 0.0) throw argument_error("resolvent_closed_form: alpha = 0 has no resolvent (K == 0)");
  if (lambda < 0.0) throw argument_error("resolvent_closed_form: lambda must be >= 0");
  std::vector<double> R(t_grid.size());
  if (alpha < 0.0) {
    const double w = std::sqrt(-alpha);
    for (size_t i = 0; i < t_grid.size(); ++i)
      R[i] = -w * std::exp(-lambda * t_grid[i]) * std::sin(w * t_grid[i]);
  } else {
    const double w = std::sqrt(alpha);
    for (size_t i = 0; i < t_grid.size(); ++i)
      R[i] = w * std::exp(-lambda * t_grid[i]) * std::sinh(w * t_grid[i]);
  }
  return R;
}

std::vector<complexd> resolvent_bromwich(const std::function<complexd(complexd)>& Ktilde,
                                         const std::vector<double>& t_grid,
                                         const BromwichOptions& opt,
                                         const std::function<complexd(double)>* Ktime) {
  if (opt.n_omega < 8) throw argument_error("resolvent_bromwich: n_omega too small");
  const int n = opt.n_omega;
  const double dw = 2.0 * opt.omega_max / n;

  // contour samples of the piece to invert numerically
  std::vector<complexd> piece(static_cast<size_t>(n) + 1);
  std::vector<double> margins(piece.size());
  parallel_for(piece.size(), [&](size_t i) {
    const double w = -opt.omega_max + static_cast<double>(i) * dw;
    const complexd K = Ktilde(complexd(opt.gamma, w));
    const complexd one_minus = 1.0 - K;
    margins[i] = std::abs(one_minus);
    piece[i] = Ktime ? K * K / one_minus : K / one_minus;
  });
  double min_margin = std::numeric_limits<double>::infinity();
  for (double m : margins) min_margin = std::min(min_margin, m);
  if (min_margin < opt.margin_floor)
    throw numerical_error("resolvent_bromwich: |1 - K~| fell to " + std::to_string(min_margin) +
                          " on the contour; Penrose margin violated");

  // analytic tail estimate from the quadratic symbol decay: |K~| ~ C2/|w|^2
  const double wprobe = opt.omega_max;
  const double C2 = std::abs(Ktilde(complexd(opt.gamma, wprobe))) * wprobe * wprobe;
  double tail;
  if (Ktime) {
    const double C4 = C2 * C2 / min_margin;  // |K~^2/(1-K~)| ~ C4 / |w|^4
    tail = C4 / (3.0 * pi * wprobe * wprobe * wprobe);
  } else {
    tail = C2 / (min_margin * pi * wprobe);
  }
  if (tail > opt.tail_tolerance)
    throw accuracy_error("resolvent_bromwich: contour truncation tail above tolerance", tail);

  std::vector<complexd> R(t_grid.size());
  parallel_for(t_grid.size(), [&](size_t j) {
    const double t = t_grid[j];
    // trapezoid in omega;端 samples carry half weight
    complexd acc = 0.5 * (piece.front() * std::exp(complexd(0.0, -opt.omega_max * t)) +
                          piece.back() * std::exp(complexd(0.0, opt.omega_max * t)));
    for (size_t i = 1; i < piece.size() - 1; ++i) {
      const double w = -opt.omega_max + static_cast<double>(i) * dw;
      acc += piece[i] * std::exp(complexd(0.0, w * t));
    }
    complexd val = acc * dw / (2.0 * pi) * std::exp(opt.gamma * t);
    if (Ktime) val += (*Ktime)(t);
    R[j] = opt.real_kernel ? complexd(val.real(), 0.0) : val;
  });
  return R;
}

}  // namespace landau
