#pragma once

// Thin RAII wrapper over an FFTW complex-to-complex plan pair. Internal to
// the library; plan creation is serialized because FFTW's planner is not
// thread-safe, execution is.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace kdvlab::detail {

class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  [[nodiscard]] std::size_t size() const { return n_; }

  /// Unnormalized forward transform, X_k = sum_j x_j e^{-2 pi i jk/n}.
  void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
  /// Inverse transform including the 1/n factor.
  void inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

 private:
  std::size_t n_;
  void* in_;
  void* out_;
  void* forward_plan_;
  void* inverse_plan_;
};

/// Angular wavenumbers 2 pi j / length in FFT order; the Nyquist entry (even
/// n) is set to zero so odd derivatives of real data stay real.
std::vector<double> wavenumbers(std::size_t n, double length);

}  // namespace kdvlab::detail
