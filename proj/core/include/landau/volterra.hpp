#pragma once

// Scalar complex Volterra equations rho = H + K * rho on uniform time grids,
// their resolvent kernels R (so rho = H + R * H), and numerical inverse
// Laplace transforms of R~ = K~ / (1 - K~) along Bromwich contours.
//
// The time-domain solver is product-trapezoidal (implicit in the diagonal
// term): second order, unconditionally stable for decaying kernels.

#include <functional>
#include <optional>
#include <vector>

#include "landau/common.hpp"

namespace landau {

struct VolterraProblem {
  double dt = 0.0;
  std::vector<complexd> H;  // samples H(j dt), j = 0..n_t
  std::vector<complexd> K;  // samples K(j dt)
};

/// March rho = H + K * rho; rho(0) = H(0) always.
std::vector<complexd> solve_volterra(const VolterraProblem& p);

/// Trapezoidal convolution rho = H + R * H on matching grids.
std::vector<complexd> apply_resolvent(const std::vector<complexd>& R,
                                      const std::vector<complexd>& H, double dt);

/// Resolvent of K(t) = alpha t e^{-lambda t} (alpha != 0, lambda >= 0):
///   alpha < 0:  R(t) = -sqrt(-alpha) e^{-lambda t} sin(sqrt(-alpha) t)
///   alpha > 0:  R(t) = +sqrt(alpha)  e^{-lambda t} sinh(sqrt(alpha) t)
/// The alpha < 0 sign is pinned by the rho = cos t oracle (H == 1, alpha = -1,
/// lambda = 0 forces 1 + int_0^t R = cos t, i.e. R = -sin t).
std::vector<double> resolvent_closed_form(double alpha, double lambda,
                                          const std::vector<double>& t_grid);

/// Bromwich inversion of R~ = K~/(1 - K~) along Re z = gamma, trapezoid in
/// omega on [-omega_max, omega_max] with n_omega + 1 samples.
///
/// When the time-domain kernel K(t) is supplied, the identity
///   R~ = K~ + K~^2/(1 - K~)
/// is used: the first term inverts exactly to K(t) and the remainder decays
/// like |omega|^-4, so modest contours already reach ~1e-8 tails. Without it
/// the full R~ (decay |omega|^-2) is inverted directly, which needs much
/// larger omega_max for the same tail.
struct BromwichOptions {
  double gamma = 0.0;
  double omega_max = 300.0;
  int n_omega = 1 << 14;
  double margin_floor = 1e-6;   // stability error if |1-K~| dips below this
  double tail_tolerance = 1e-6; // truncation error if the tail estimate exceeds this
  bool real_kernel = true;      // drop the imaginary part (real K(t))
};
std::vector<complexd> resolvent_bromwich(const std::function<complexd(complexd)>& Ktilde,
                                         const std::vector<double>& t_grid,
                                         const BromwichOptions& opt,
                                         const std::function<complexd(double)>* Ktime = nullptr);

}  // namespace landau
