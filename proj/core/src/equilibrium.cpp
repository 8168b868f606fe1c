#include "landau/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace landau {

namespace {

double maxwellian_value(const MaxwellianParams& p, const Vec& v, int d) {
  if (p.n0 == 0.0) return 0.0;
  double q2 = 0.0;
  for (int i = 0; i < d; ++i) {
    const double dv = v[i] - p.v0[i];
    q2 += dv * dv;
  }
  const double norm = std::pow(2.0 * pi * p.T, -0.5 * d);
  return p.n0 * norm * std::exp(-q2 / (2.0 * p.T));
}

complexd maxwellian_fourier(const MaxwellianParams& p, const Vec& eta, int d) {
  if (p.n0 == 0.0) return {0.0, 0.0};
  double e2 = 0.0, phase = 0.0;
  for (int i = 0; i < d; ++i) {
    e2 += eta[i] * eta[i];
    phase += p.v0[i] * eta[i];
  }
  return p.n0 * std::exp(-0.5 * p.T * e2) * std::exp(complexd(0.0, -phase));
}

}  // namespace

EquilibriumSpec EquilibriumSpec::maxwellian(double n0, double T, Vec v0, int d) {
  if (!(T > 0.0) || n0 < 0.0 || d < 1 || d > 3) throw argument_error("maxwellian: need T > 0, n0 >= 0, 1 <= d <= 3");
  EquilibriumSpec s;
  s.kind_ = EquilibriumKind::Maxwellian;
  s.d_ = d;
  s.mx_a_ = {n0, T, v0};
  return s;
}

EquilibriumSpec EquilibriumSpec::double_maxwellian(MaxwellianParams a, MaxwellianParams b, int d) {
  if (!(a.T > 0.0) || !(b.T > 0.0) || a.n0 < 0.0 || b.n0 < 0.0 || d < 1 || d > 3)
    throw argument_error("double_maxwellian: need T > 0, n0 >= 0, 1 <= d <= 3");
  EquilibriumSpec s;
  s.kind_ = EquilibriumKind::DoubleMaxwellian;
  s.d_ = d;
  s.mx_a_ = a;
  s.mx_b_ = b;
  return s;
}

EquilibriumSpec EquilibriumSpec::poisson(double n0, int exponent) {
  if (n0 < 0.0 || (exponent != 1 && exponent != 2))
    throw argument_error("poisson: exponent must be 1 or 2 (d=1 family)");
  EquilibriumSpec s;
  s.kind_ = EquilibriumKind::Poisson;
  s.d_ = 1;
  s.pois_ = {n0, exponent};
  return s;
}

EquilibriumSpec EquilibriumSpec::custom(CustomTabulation tab) {
  if (tab.values.size() < 2 || !(tab.v_max > tab.v_min))
    throw argument_error("custom: need >= 2 samples on a nonempty range");
  EquilibriumSpec s;
  s.kind_ = EquilibriumKind::Custom;
  s.d_ = 1;
  s.tab_ = std::move(tab);
  return s;
}

EquilibriumSpec EquilibriumSpec::tabulate(const EquilibriumSpec& src, double v_max, int n_points) {
  if (src.dimension() != 1) throw argument_error("tabulate: d=1 only");
  CustomTabulation tab;
  tab.v_min = -v_max;
  tab.v_max = v_max;
  tab.values.resize(static_cast<size_t>(n_points));
  const double dv = 2.0 * v_max / (n_points - 1);
  for (int i = 0; i < n_points; ++i) tab.values[static_cast<size_t>(i)] = src.eval(Vec{-v_max + i * dv});
  tab.lambda0 = src.analyticity_rate();
  return custom(std::move(tab));
}

double EquilibriumSpec::number_density() const {
  switch (kind_) {
    case EquilibriumKind::Maxwellian: return mx_a_.n0;
    case EquilibriumKind::DoubleMaxwellian: return mx_a_.n0 + mx_b_.n0;
    case EquilibriumKind::Poisson: return pois_.n0;
    case EquilibriumKind::Custom: {
      // trapezoid on the tabulated grid
      const auto& t = tab_;
      const double dv = (t.v_max - t.v_min) / (static_cast<double>(t.values.size()) - 1);
      double s = 0.5 * (t.values.front() + t.values.back());
      for (size_t i = 1; i + 1 < t.values.size(); ++i) s += t.values[i];
      return s * dv;
    }
  }
  return 0.0;
}

double EquilibriumSpec::analyticity_rate() const {
  // Gaussians beat any exponential; report a large finite proxy.
  constexpr double gaussian_proxy = 1e12;
  switch (kind_) {
    case EquilibriumKind::Maxwellian:
    case EquilibriumKind::DoubleMaxwellian: return gaussian_proxy;
    case EquilibriumKind::Poisson: return 1.0;  // f0^ ~ e^{-|eta|}
    case EquilibriumKind::Custom: return tab_.lambda0 > 0 ? tab_.lambda0 : 0.0;
  }
  return 0.0;
}

double EquilibriumSpec::eval(const Vec& v) const {
  switch (kind_) {
    case EquilibriumKind::Maxwellian: return maxwellian_value(mx_a_, v, d_);
    case EquilibriumKind::DoubleMaxwellian:
      return maxwellian_value(mx_a_, v, d_) + maxwellian_value(mx_b_, v, d_);
    case EquilibriumKind::Poisson: {
      const double u2 = 1.0 + v[0] * v[0];
      if (pois_.exponent == 1) return pois_.n0 / (pi * u2);
      return 2.0 * pois_.n0 / (pi * u2 * u2);
    }
    case EquilibriumKind::Custom: {
      const auto& t = tab_;
      if (v[0] < t.v_min || v[0] > t.v_max) throw domain_error("custom equilibrium: v outside tabulated range");
      const double dv = (t.v_max - t.v_min) / (static_cast<double>(t.values.size()) - 1);
      const double s = (v[0] - t.v_min) / dv;
      const size_t i = std::min(static_cast<size_t>(s), t.values.size() - 2);
      const double w = s - static_cast<double>(i);
      return (1.0 - w) * t.values[i] + w * t.values[i + 1];
    }
  }
  return 0.0;
}

namespace {

// Riemann sum of e^{-i v eta} w(v) f(v) over the tabulation; spectrally accurate
// for smooth samples decaying below roundoff at the endpoints.
complexd custom_quadrature(const CustomTabulation& t, double eta, int v_power) {
  const size_t n = t.values.size();
  const double dv = (t.v_max - t.v_min) / (static_cast<double>(n) - 1);
  complexd acc{0.0, 0.0};
  for (size_t i = 0; i < n; ++i) {
    const double v = t.v_min + static_cast<double>(i) * dv;
    double w = t.values[i];
    for (int p = 0; p < v_power; ++p) w *= v;
    const double edge = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    acc += edge * w * std::exp(complexd(0.0, -v * eta));
  }
  return acc * dv;
}

// residual estimate: difference against the half-resolution sum
double custom_residual(const CustomTabulation& t, double eta, int v_power) {
  CustomTabulation half;
  half.v_min = t.v_min;
  half.v_max = t.v_max;
  for (size_t i = 0; i < t.values.size(); i += 2) half.values.push_back(t.values[i]);
  if (half.values.size() < 2) return 0.0;
  // only valid when the coarse grid still spans the range
  const double dv = (t.v_max - t.v_min) / (static_cast<double>(t.values.size()) - 1);
  half.v_max = t.v_min + dv * 2.0 * (static_cast<double>(half.values.size()) - 1);
  return std::abs(custom_quadrature(t, eta, v_power) - custom_quadrature(half, eta, v_power));
}

}  // namespace

complexd EquilibriumSpec::fourier(const Vec& eta) const {
  switch (kind_) {
    case EquilibriumKind::Maxwellian: return maxwellian_fourier(mx_a_, eta, d_);
    case EquilibriumKind::DoubleMaxwellian:
      return maxwellian_fourier(mx_a_, eta, d_) + maxwellian_fourier(mx_b_, eta, d_);
    case EquilibriumKind::Poisson: {
      const double a = std::abs(eta[0]);
      if (pois_.exponent == 1) return pois_.n0 * std::exp(-a);
      return pois_.n0 * (1.0 + a) * std::exp(-a);
    }
    case EquilibriumKind::Custom: {
      const complexd val = custom_quadrature(tab_, eta[0], 0);
      const double res = custom_residual(tab_, eta[0], 0);
      if (res > 1e-10) throw accuracy_error("custom equilibrium transform did not converge", res);
      return val;
    }
  }
  return {0.0, 0.0};
}

complexd EquilibriumSpec::fourier_d1(double eta) const {
  switch (kind_) {
    case EquilibriumKind::Maxwellian:
    case EquilibriumKind::DoubleMaxwellian: {
      // d/deta [n e^{-i v0 eta - T eta^2/2}] = (-i v0 - T eta) f0^
      complexd total{0.0, 0.0};
      const MaxwellianParams* parts[2] = {&mx_a_, kind_ == EquilibriumKind::DoubleMaxwellian ? &mx_b_ : nullptr};
      for (const auto* p : parts)
        if (p) total += (complexd(0.0, -p->v0[0]) - p->T * eta) * maxwellian_fourier(*p, Vec{eta}, 1);
      return total;
    }
    case EquilibriumKind::Poisson: {
      const double a = std::abs(eta);
      const double sgn = eta >= 0 ? 1.0 : -1.0;
      if (pois_.exponent == 1) return -sgn * pois_.n0 * std::exp(-a);
      return -sgn * pois_.n0 * a * std::exp(-a);
    }
    case EquilibriumKind::Custom: return complexd(0.0, -1.0) * custom_quadrature(tab_, eta, 1);
  }
  return {0.0, 0.0};
}

complexd EquilibriumSpec::fourier_d2(double eta) const {
  switch (kind_) {
    case EquilibriumKind::Maxwellian:
    case EquilibriumKind::DoubleMaxwellian: {
      complexd total{0.0, 0.0};
      const MaxwellianParams* parts[2] = {&mx_a_, kind_ == EquilibriumKind::DoubleMaxwellian ? &mx_b_ : nullptr};
      for (const auto* p : parts)
        if (p) {
          const complexd g = complexd(0.0, -p->v0[0]) - p->T * eta;
          total += (g * g - p->T) * maxwellian_fourier(*p, Vec{eta}, 1);
        }
      return total;
    }
    case EquilibriumKind::Poisson: {
      const double a = std::abs(eta);
      if (pois_.exponent == 1) return pois_.n0 * std::exp(-a);
      return pois_.n0 * (a - 1.0) * std::exp(-a);
    }
    case EquilibriumKind::Custom: return -custom_quadrature(tab_, eta, 2);
  }
  return {0.0, 0.0};
}

bool EquilibriumSpec::is_even() const {
  switch (kind_) {
    case EquilibriumKind::Maxwellian: return mx_a_.v0.norm2() == 0.0;
    case EquilibriumKind::DoubleMaxwellian:
      // symmetric pair: equal weights/temperatures at opposite centers
      return (mx_a_.n0 == mx_b_.n0 && mx_a_.T == mx_b_.T && mx_a_.v0[0] == -mx_b_.v0[0]) ||
             (mx_a_.v0.norm2() == 0.0 && mx_b_.v0.norm2() == 0.0);
    case EquilibriumKind::Poisson: return true;
    case EquilibriumKind::Custom: {
      const auto& v = tab_.values;
      if (tab_.v_min != -tab_.v_max) return false;
      for (size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i] - v[v.size() - 1 - i]) > 1e-14) return false;
      return true;
    }
  }
  return false;
}

EquilibriumSpec::AnalyticityReport EquilibriumSpec::verify_analyticity_bound(
    double lambda0, const std::vector<double>& eta_samples, double log_constant_cap) const {
  if (eta_samples.empty()) throw argument_error("verify_analyticity_bound: empty sample set");
  if (!(lambda0 > 0.0)) throw argument_error("verify_analyticity_bound: lambda0 must be positive");
  if (d_ != 1) throw argument_error("verify_analyticity_bound: d=1 only");
  AnalyticityReport rep;
  double best = -std::numeric_limits<double>::infinity();
  for (double eta : eta_samples) {
    const double b =
        std::abs(fourier(Vec{eta})) + std::abs(fourier_d1(eta)) + std::abs(fourier_d2(eta));
    // log-space so a hopeless lambda0 cannot overflow
    const double log_c = (b > 0 ? std::log(b) : -745.0) + lambda0 * std::abs(eta);
    best = std::max(best, log_c);
  }
  rep.best_log_constant = best;
  rep.worst_margin = log_constant_cap - best;
  rep.holds = rep.worst_margin > 0.0;
  return rep;
}

const MaxwellianParams& EquilibriumSpec::maxwellian_params(int which) const {
  if (kind_ != EquilibriumKind::Maxwellian && kind_ != EquilibriumKind::DoubleMaxwellian)
    throw argument_error("maxwellian_params: wrong kind");
  return which == 0 ? mx_a_ : mx_b_;
}

}  // namespace landau
