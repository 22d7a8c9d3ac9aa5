#include "onewave/psdo.hpp"

#include <cmath>
#include <numbers>

#include "onewave/errors.hpp"
#include "onewave/fft.hpp"

namespace onewave {

void LateralGrid::validate() const {
  if (n < 16 || n % 2 != 0)
    throw ConfigError("lateral grid: n must be even and >= 16");
  if (!(dx > 0.0)) throw ConfigError("lateral grid: dx must be positive");
}

double LateralGrid::xi(int k) const {
  const int half = n / 2;
  const int kk = k < half ? k : k - n;
  return 2.0 * std::numbers::pi * static_cast<double>(kk) / length();
}

double LateralGrid::xi_nyquist() const {
  return 2.0 * std::numbers::pi * static_cast<double>(n / 2) / length();
}

void FreqField::validate() const {
  grid.validate();
  if (values.size() != grid.n)
    throw ConfigError("freq field: value count != grid size");
  if (tau == 0.0) throw ConfigError("freq field: tau must be nonzero");
}

Eigen::MatrixXcd assemble_matrix(const SymbolFn& sym, double z, double tau,
                                 const LateralGrid& g) {
  g.validate();
  if (tau == 0.0) throw ConfigError("assemble_matrix: tau must be nonzero");
  const int n = g.n;
  const Dft dft(n);
  const double two_pi_over_n = 2.0 * std::numbers::pi / static_cast<double>(n);

  // Row j of the matrix is the forward DFT (index k -> column l) of
  //   P[j,k] = (1/n) sym(z, x_j, xi_k, tau) e^{2 pi i j k / n}.
  Eigen::MatrixXcd m(n, n);
  Eigen::VectorXcd row(n), row_hat(n);
  for (int j = 0; j < n; ++j) {
    const double xj = g.x(j);
    for (int k = 0; k < n; ++k) {
      // j*k reduced mod n keeps the phase in [0, 2 pi); exact on plane waves.
      const auto jk = static_cast<std::int64_t>(j) * k % n;
      const double phase = two_pi_over_n * static_cast<double>(jk);
      row[k] = sym(z, xj, g.xi(k), tau) *
               std::complex<double>(std::cos(phase), std::sin(phase)) /
               static_cast<double>(n);
    }
    dft.forward(row.data(), row_hat.data());
    m.row(j) = row_hat.transpose();
  }
  return m;
}

FreqField apply_multiplier(std::span<const std::complex<double>> sym_values,
                           const FreqField& f) {
  f.validate();
  const int n = f.grid.n;
  if (static_cast<int>(sym_values.size()) != n)
    throw ConfigError("apply_multiplier: symbol value count != grid size");
  const Dft dft(n);
  Eigen::VectorXcd hat = dft.forward(f.values);
  for (int k = 0; k < n; ++k) hat[k] *= sym_values[static_cast<std::size_t>(k)];
  FreqField out = f;
  out.values = dft.backward(hat) / static_cast<double>(n);
  return out;
}

Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& m) {
  return 0.5 * (m + m.adjoint());
}

void band_limit(FreqField& f, double xi_max) {
  f.validate();
  const Dft dft(f.grid.n);
  Eigen::VectorXcd hat = dft.forward(f.values);
  for (int k = 0; k < f.grid.n; ++k)
    if (std::abs(f.grid.xi(k)) > xi_max) hat[k] = 0.0;
  f.values = dft.backward(hat) / static_cast<double>(f.grid.n);
}

}  // namespace onewave
