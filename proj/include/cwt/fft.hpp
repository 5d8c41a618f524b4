#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "cwt/torus.hpp"

namespace cwt::detail {

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 FFT. sign = -1 forward, +1 inverse (unscaled).
inline void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
  const int n = static_cast<int>(a.size());
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * pi / len;
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (int k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

/// Derivative of order `order` (1 or 2) of periodic samples on [0, 2*pi),
/// by Fourier multiplier. The Nyquist mode is zeroed for odd orders.
inline std::vector<double> spectral_derivative(const std::vector<double>& f, int order) {
  const int n = static_cast<int>(f.size());
  std::vector<std::complex<double>> a(f.begin(), f.end());
  fft_radix2(a, -1);
  for (int j = 0; j < n; ++j) {
    const int k = (j <= n / 2) ? j : j - n;
    std::complex<double> mult;
    if (order == 1) {
      mult = (j == n / 2) ? 0.0 : std::complex<double>(0.0, k);
    } else if (order == 2) {
      mult = -static_cast<double>(k) * static_cast<double>(k);
    } else {
      throw std::invalid_argument("spectral_derivative: order must be 1 or 2");
    }
    a[j] *= mult;
  }
  fft_radix2(a, +1);
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) out[j] = a[j].real() / n;
  return out;
}

}  // namespace cwt::detail
