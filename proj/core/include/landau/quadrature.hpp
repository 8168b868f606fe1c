#pragma once

// Composite Gauss-Legendre quadrature on [0, T] with panel counts sized for
// oscillatory integrands e^{-i w t} g(t), plus node caching so a whole contour
// of frequencies can reuse one node set.

#include <functional>
#include <vector>

#include "landau/common.hpp"

namespace landau {

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);  // cached, order in [2, 64]

/// Nodes and weights of a composite rule on [0, t_end] with `panels` panels.
struct CompositeNodes {
  std::vector<double> t;
  std::vector<double> w;
};
CompositeNodes composite_gauss(double t_end, int panels, int order = 16);

/// Panels needed so that GL(order) resolves e^{-i omega t} on [0, t_end] to
/// ~1e-12: about 2.5 oscillations per 16-point panel.
int panels_for_oscillation(double t_end, double omega_max, int order = 16);

/// integral_0^t_end f(t) dt with a residual estimate from panel doubling.
struct QuadratureResult {
  complexd value{0.0, 0.0};
  double residual = 0.0;
};
QuadratureResult integrate_complex(const std::function<complexd(double)>& f, double t_end,
                                   double omega_scale);

}  // namespace landau
