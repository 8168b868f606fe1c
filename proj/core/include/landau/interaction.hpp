#pragma once

// Mean-field interaction potentials, given by their Fourier symbol W^(k) on
// the integer lattice (k != 0). Coulomb is +/- |k|^-2 (repulsive/attractive),
// screened is (1+|k|^2)^-1, power laws |k|^-gamma, plus user tabulations.

#include <map>

#include "landau/common.hpp"

namespace landau {

enum class InteractionKind { Coulomb, Screened, PowerLaw, Custom };

class InteractionKernel {
 public:
  static InteractionKernel coulomb(int sign = +1);  // W^(k) = sign / |k|^2
  static InteractionKernel screened();              // W^(k) = 1 / (1 + |k|^2)
  static InteractionKernel power_law(double gamma, int sign = +1);
  /// Tabulated W^ by |k|; outside the table the symbol is 0.
  static InteractionKernel custom(std::map<int, double> by_abs_k);

  InteractionKind kind() const { return kind_; }
  int sign() const { return sign_; }
  double gamma() const { return gamma_; }

  double symbol(const IntVec& k) const;  // W^(k), throws for k = 0

  /// Smallest (C, gamma) with |W^(k)| <= C |k|^-gamma over a probe range.
  struct DecayEstimate {
    double constant = 0.0;
    double gamma = 0.0;
  };
  DecayEstimate decay_estimate(int k_probe_max = 64) const;

 private:
  InteractionKind kind_ = InteractionKind::Coulomb;
  int sign_ = +1;
  double gamma_ = 2.0;
  std::map<int, double> table_;
};

}  // namespace landau
