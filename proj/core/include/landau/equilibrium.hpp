#pragma once

// Homogeneous velocity backgrounds f0(v), their transforms f0^(eta) and
// analyticity certificates |f0^| + |grad f0^| + |grad^2 f0^| <= C e^{-l0|eta|}.
//
// Kinds:
//   Maxwellian(n0, T, v0):  f0(v) = n0 (2 pi T)^{-d/2} exp(-|v - v0|^2 / 2T)
//                           f0^(eta) = n0 exp(-i v0.eta - T |eta|^2 / 2)
//   DoubleMaxwellian:       sum of two Maxwellian components
//   Poisson (d=1 only):     exponent p in {1,2} of the normalized family
//                             p=1: n0 / (pi (1+v^2)),      f0^ = n0 e^{-|eta|}
//                             p=2: 2 n0 / (pi (1+v^2)^2),  f0^ = n0 (1+|eta|) e^{-|eta|}
//   Custom (d=1):           tabulated samples on a uniform v grid, transforms
//                           by quadrature.
//
// All transforms are unit-mass normalized: f0^(0) = integral f0 = n0.

#include <optional>
#include <vector>

#include "landau/common.hpp"

namespace landau {

enum class EquilibriumKind { Maxwellian, DoubleMaxwellian, Poisson, Custom };

struct MaxwellianParams {
  double n0 = 1.0;
  double T = 1.0;
  Vec v0{0.0};
};

struct PoissonParams {
  double n0 = 1.0;
  int exponent = 2;  // 1 or 2
};

struct CustomTabulation {
  double v_min = 0.0;
  double v_max = 0.0;          // grid is uniform on [v_min, v_max], endpoints included
  std::vector<double> values;  // f0 samples, size >= 2
  double lambda0 = 0.0;        // claimed analyticity rate, 0 = unknown
};

class EquilibriumSpec {
 public:
  static EquilibriumSpec maxwellian(double n0, double T, Vec v0 = Vec{0.0}, int d = 1);
  static EquilibriumSpec double_maxwellian(MaxwellianParams a, MaxwellianParams b, int d = 1);
  static EquilibriumSpec poisson(double n0, int exponent = 2);
  static EquilibriumSpec custom(CustomTabulation tab);
  /// Tabulate any d=1 spec onto a uniform grid (testing aid for the quadrature path).
  static EquilibriumSpec tabulate(const EquilibriumSpec& src, double v_max, int n_points);

  EquilibriumKind kind() const { return kind_; }
  int dimension() const { return d_; }
  double number_density() const;  // n0 = integral of f0

  /// Largest lambda0 for which e^{-lambda0 |eta|} bounds hold (infinity proxy
  /// for Gaussian kinds, used to gate Laplace-transform domains).
  double analyticity_rate() const;

  /// f0(v) >= 0. Custom kind throws for v outside the tabulated range.
  double eval(const Vec& v) const;

  /// f0^(eta) = int e^{-i v.eta} f0(v) dv. Closed form except for Custom.
  complexd fourier(const Vec& eta) const;

  /// d=1 derivatives of f0^ (closed form / quadrature), for bound checks.
  complexd fourier_d1(double eta) const;
  complexd fourier_d2(double eta) const;

  bool is_even() const;  // f0(v) = f0(-v), so f0^ is real and even

  struct AnalyticityReport {
    bool holds = false;
    double best_log_constant = 0.0;  // log of smallest C with the sampled bound
    double worst_margin = 0.0;       // log C_cap - log C (positive = holds)
  };
  /// Check |f0^| + |f0^'| + |f0^''| <= C e^{-lambda0 |eta|} over eta samples
  /// (d=1); holds iff the best constant stays below cap.
  AnalyticityReport verify_analyticity_bound(double lambda0, const std::vector<double>& eta_samples,
                                             double log_constant_cap = std::log(1e6)) const;

  const MaxwellianParams& maxwellian_params(int which = 0) const;
  const PoissonParams& poisson_params() const { return pois_; }
  const CustomTabulation& tabulation() const { return tab_; }

 private:
  EquilibriumKind kind_ = EquilibriumKind::Maxwellian;
  int d_ = 1;
  MaxwellianParams mx_a_, mx_b_;
  PoissonParams pois_;
  CustomTabulation tab_;
};

}  // namespace landau
