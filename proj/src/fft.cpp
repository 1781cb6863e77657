#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <numbers>

#include "kdvlab/errors.hpp"

namespace kdvlab::detail {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("fft size must be positive");
  std::lock_guard lock(planner_mutex());
  auto* in = fftw_alloc_complex(n);
  auto* out = fftw_alloc_complex(n);
  in_ = in;
  out_ = out;
  const int size = static_cast<int>(n);
  forward_plan_ = fftw_plan_dft_1d(size, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_1d(size, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(in_);
  fftw_free(out_);
}

void Fft::forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  std::memcpy(in_, in.data(), n_ * sizeof(fftw_complex));
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  std::memcpy(out.data(), out_, n_ * sizeof(fftw_complex));
}

void Fft::inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  std::memcpy(in_, in.data(), n_ * sizeof(fftw_complex));
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  std::memcpy(out.data(), out_, n_ * sizeof(fftw_complex));
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : out) v *= scale;
}

std::vector<double> wavenumbers(std::size_t n, double length) {
  std::vector<double> k(n);
  const double base = 2.0 * std::numbers::pi / length;
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<long long>(j);
    const auto nn = static_cast<long long>(n);
    const long long signed_j = (2 * jj < nn) ? jj : jj - nn;
    k[j] = base * static_cast<double>(signed_j);
  }
  if (n % 2 == 0) k[n / 2] = 0.0;
  return k;
}

}  // namespace kdvlab::detail
