#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "onewave/symbol_calc.hpp"

namespace onewave {

/// Periodic lateral grid: n nodes x_j = x0 + j dx, domain length n*dx,
/// discrete wavenumbers xi_k = 2 pi k / (n dx), k = -n/2 .. n/2 - 1, stored
/// in DFT index order (0, 1, ..., n/2-1, -n/2, ..., -1).
struct LateralGrid {
  int n = 0;
  double dx = 1.0;
  double x0 = 0.0;

  void validate() const;
  double length() const { return static_cast<double>(n) * dx; }
  double x(int j) const { return x0 + static_cast<double>(j) * dx; }
  double xi(int k) const;
  double xi_nyquist() const;

  friend bool operator==(const LateralGrid&, const LateralGrid&) = default;
};

/// One temporal-frequency slice u(x; tau) at depth z.
struct FreqField {
  LateralGrid grid;
  double tau = 1.0;
  double z = 0.0;
  Eigen::VectorXcd values;

  void validate() const;
};

/// Kohn-Nirenberg quadrature matrix of a symbol at fixed (z, tau): applying
/// the result to nodal values equals (1/n) sum_k sym(z, x_j, xi_k, tau)
/// e^{i xi_k x_j} fhat_k, which is exact on discrete plane waves.
Eigen::MatrixXcd assemble_matrix(const SymbolFn& sym, double z, double tau,
                                 const LateralGrid& g);

/// Fourier-multiplier fast path for x-independent symbols: values must hold
/// sym(xi_k) in DFT index order.
FreqField apply_multiplier(std::span<const std::complex<double>> sym_values,
                           const FreqField& f);

/// (M + M^H) / 2.
Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& m);

/// Zero all modes with |xi_k| > xi_max (in place).
void band_limit(FreqField& f, double xi_max);

}  // namespace onewave
