#pragma once

// Shared conventions for the whole toolkit.
//
// Geometry: x lives on the torus [0,2pi)^d, v on R^d (truncated to
// [-v_max, v_max)^d on grids). Fourier conventions, fixed once and used
// everywhere:
//
//   x (series):    u(x) = sum_k  u_k e^{i k.x},   u_k = (2pi)^-d int u e^{-i k.x} dx
//   v (transform): f^(eta) = int e^{-i v.eta} f(v) dv      (no prefactor)
//   Laplace:       F(z) = int_0^inf e^{-z t} f(t) dt,  f(t) = (1/2pi i) int_G e^{z t} F dz
//                  so that L[f * g] = L[f] L[g] with (f*g)(t) = int_0^t f(t-s)g(s) ds.
//
// Mixed phase-space coefficients g^(k,eta) combine both, so the density
// fluctuation of free transport is rho^(t,k) = g_in^(k, kt) with no dangling
// 2pi powers.
//
// Field/force convention (electron form): the state F obeys
//   dF/dt + v.grad_x F - E.grad_v F = 0,     E^(k) = i k W^(k) rho^(k),
// which for W^ > 0 is repulsive and makes the linearized Volterra kernel
//   K(t,k) = -|k|^2 W^(k) t f0^(kt).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace landau {

using complexd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Japanese bracket <x> = sqrt(1 + |x|^2), the standard inhomogeneous weight.
inline double bracket(double x) { return std::sqrt(1.0 + x * x); }
inline double bracket2(double x, double y) { return std::sqrt(1.0 + x * x + y * y); }

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct accuracy_error : std::runtime_error {
  double residual = 0.0;
  accuracy_error(const std::string& what, double res)
      : std::runtime_error(what + " (residual " + std::to_string(res) + ")"), residual(res) {}
};
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Small integer lattice vector, d <= 3. Unused trailing components are zero.
struct IntVec {
  std::array<int, 3> c{0, 0, 0};
  int d = 1;

  IntVec() = default;
  IntVec(int k) : c{k, 0, 0}, d(1) {}
  IntVec(int k0, int k1) : c{k0, k1, 0}, d(2) {}
  IntVec(int k0, int k1, int k2) : c{k0, k1, k2}, d(3) {}

  int operator[](int i) const { return c[static_cast<size_t>(i)]; }
  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  double norm2() const {
    return static_cast<double>(c[0]) * c[0] + static_cast<double>(c[1]) * c[1] +
           static_cast<double>(c[2]) * c[2];
  }
  double norm() const { return std::sqrt(norm2()); }
};

/// Real d-vector companion to IntVec.
struct Vec {
  std::array<double, 3> c{0.0, 0.0, 0.0};
  int d = 1;

  Vec() = default;
  Vec(double v) : c{v, 0, 0}, d(1) {}
  Vec(double v0, double v1) : c{v0, v1, 0}, d(2) {}
  Vec(double v0, double v1, double v2) : c{v0, v1, v2}, d(3) {}
  static Vec scaled(const IntVec& k, double t) {
    Vec r;
    r.d = k.d;
    for (int i = 0; i < k.d; ++i) r.c[static_cast<size_t>(i)] = k[i] * t;
    return r;
  }

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double norm2() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2]; }
  double norm() const { return std::sqrt(norm2()); }
};

/// Number of worker threads: LANDAU_KIT_THREADS caps hardware concurrency.
unsigned worker_threads();

/// Static-partition parallel map over [0, n). Tasks must write disjoint state;
/// result ordering (and therefore any downstream reduction order) is fixed by
/// the index, never by thread scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Least-squares straight-line fit y ~ a + b x; returns {a, b, r2}.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r2 = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Indices of strict local maxima of y (interior points only).
std::vector<std::size_t> local_maxima(const std::vector<double>& y);

}  // namespace landau
