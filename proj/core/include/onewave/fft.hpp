#pragma once

#include <complex>
#include <memory>

#include <Eigen/Dense>

namespace onewave {

/// One-size complex DFT (FFTW behind the scenes). Unnormalized:
///   forward:  out_k = sum_j in_j exp(-2 pi i j k / n)
///   backward: out_j = sum_k in_k exp(+2 pi i j k / n)
/// Each instance owns its buffers; use one instance per thread.
class Dft {
 public:
  explicit Dft(int n);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  int size() const { return n_; }

  void forward(const std::complex<double>* in, std::complex<double>* out) const;
  void backward(const std::complex<double>* in, std::complex<double>* out) const;

  Eigen::VectorXcd forward(const Eigen::VectorXcd& in) const;
  Eigen::VectorXcd backward(const Eigen::VectorXcd& in) const;

 private:
  struct Impl;
  int n_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace onewave
