#include "landau/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace landau {

namespace {

GaussRule build_rule(int n) {
  // Newton iteration on Legendre P_n from the Chebyshev initial guess.
  GaussRule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[static_cast<size_t>(i)] = x;
    r.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

CompositeNodes composite_gauss(double t_end, int panels, int order) {
  const GaussRule& g = gauss_legendre(order);
  CompositeNodes out;
  out.t.reserve(static_cast<size_t>(panels * order));
  out.w.reserve(static_cast<size_t>(panels * order));
  const double h = t_end / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * h, mid = a + 0.5 * h, half = 0.5 * h;
    for (int i = 0; i < order; ++i) {
      out.t.push_back(mid + half * g.nodes[static_cast<size_t>(i)]);
      out.w.push_back(half * g.weights[static_cast<size_t>(i)]);
    }
  }
  return out;
}

int panels_for_oscillation(double t_end, double omega_max, int order) {
  const double oscillations = std::abs(omega_max) * t_end / (2.0 * pi);
  const double per_panel = 0.15 * order;  // conservative for ~1e-12 accuracy
  return std::max(4, static_cast<int>(std::ceil(oscillations / per_panel)) + 4);
}

QuadratureResult integrate_complex(const std::function<complexd(double)>& f, double t_end,
                                   double omega_scale) {
  QuadratureResult out;
  if (!(t_end > 0.0)) return out;
  const int p1 = panels_for_oscillation(t_end, omega_scale);
  auto eval = [&](int panels) {
    const CompositeNodes n = composite_gauss(t_end, panels);
    complexd acc{0.0, 0.0};
    for (size_t i = 0; i < n.t.size(); ++i) acc += n.w[i] * f(n.t[i]);
    return acc;
  };
  const complexd coarse = eval(p1);
  const complexd fine = eval(2 * p1);
  out.value = fine;
  out.residual = std::abs(fine - coarse);
  return out;
}

}  // namespace landau
