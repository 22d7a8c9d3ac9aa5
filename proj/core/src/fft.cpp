#include "onewave/fft.hpp"

#include <cstring>
#include <mutex>

#include <fftw3.h>

#include "onewave/errors.hpp"

namespace onewave {

namespace {
// The FFTW planner is not thread-safe; executing distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct Dft::Impl {
  fftw_complex* buf_in = nullptr;
  fftw_complex* buf_out = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

Dft::Dft(int n) : n_(n), impl_(std::make_unique<Impl>()) {
  if (n <= 0) throw ConfigError("Dft: size must be positive");
  std::lock_guard<std::mutex> lock(planner_mutex());
  impl_->buf_in = fftw_alloc_complex(static_cast<std::size_t>(n));
  impl_->buf_out = fftw_alloc_complex(static_cast<std::size_t>(n));
  impl_->fwd = fftw_plan_dft_1d(n, impl_->buf_in, impl_->buf_out, FFTW_FORWARD,
                                FFTW_ESTIMATE);
  impl_->bwd = fftw_plan_dft_1d(n, impl_->buf_in, impl_->buf_out, FFTW_BACKWARD,
                                FFTW_ESTIMATE);
  if (!impl_->fwd || !impl_->bwd) throw NumericError("Dft: fftw plan failed");
}

Dft::~Dft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
  if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
  fftw_free(impl_->buf_in);
  fftw_free(impl_->buf_out);
}

void Dft::forward(const std::complex<double>* in,
                  std::complex<double>* out) const {
  std::memcpy(impl_->buf_in, in, sizeof(fftw_complex) * static_cast<std::size_t>(n_));
  fftw_execute(impl_->fwd);
  std::memcpy(out, impl_->buf_out, sizeof(fftw_complex) * static_cast<std::size_t>(n_));
}

void Dft::backward(const std::complex<double>* in,
                   std::complex<double>* out) const {
  std::memcpy(impl_->buf_in, in, sizeof(fftw_complex) * static_cast<std::size_t>(n_));
  fftw_execute(impl_->bwd);
  std::memcpy(out, impl_->buf_out, sizeof(fftw_complex) * static_cast<std::size_t>(n_));
}

Eigen::VectorXcd Dft::forward(const Eigen::VectorXcd& in) const {
  if (in.size() != n_) throw ConfigError("Dft::forward: size mismatch");
  Eigen::VectorXcd out(n_);
  forward(in.data(), out.data());
  return out;
}

Eigen::VectorXcd Dft::backward(const Eigen::VectorXcd& in) const {
  if (in.size() != n_) throw ConfigError("Dft::backward: size mismatch");
  Eigen::VectorXcd out(n_);
  backward(in.data(), out.data());
  return out;
}

}  // namespace onewave
