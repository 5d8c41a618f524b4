#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace cwt {

/// Result of a Richardson-extrapolated central difference. `raw[j]` is the
/// 5-point stencil value at step h0*2^{-j}; `diagonal[j]` the extrapolated
/// value using levels 0..j. `value` is the last diagonal entry.
struct FdResult {
  double value = 0.0;
  double error_bar = 0.0;
  bool converged = false;
  std::vector<double> raw;
  std::vector<double> diagonal;
};

namespace detail {

// Both 5-point central stencils have even error series h^4, h^6, ...; the
// Romberg weights for halved steps are 2^4, 2^6, ...
inline FdResult richardson_table(std::vector<double> raw, double abs_floor) {
  const int nlev = static_cast<int>(raw.size());
  std::vector<std::vector<double>> a(nlev);
  for (int j = 0; j < nlev; ++j) {
    a[j].resize(j + 1);
    a[j][0] = raw[j];
    double q = 16.0;
    for (int m = 1; m <= j; ++m, q *= 4.0) a[j][m] = (q * a[j][m - 1] - a[j - 1][m - 1]) / (q - 1.0);
  }
  FdResult res;
  res.raw = std::move(raw);
  for (int j = 0; j < nlev; ++j) res.diagonal.push_back(a[j][j]);
  res.value = res.diagonal.back();
  if (nlev >= 2) res.error_bar = std::fabs(res.diagonal[nlev - 1] - res.diagonal[nlev - 2]);
  res.error_bar = std::max(res.error_bar, abs_floor);
  if (nlev >= 3) {
    const double last = std::fabs(res.diagonal[nlev - 1] - res.diagonal[nlev - 2]);
    const double prev = std::fabs(res.diagonal[nlev - 2] - res.diagonal[nlev - 3]);
    res.converged = last <= std::max(0.1 * prev, abs_floor);
  } else {
    res.converged = res.error_bar <= abs_floor;
  }
  return res;
}

}  // namespace detail

/// Second derivative of f at 0 by the 5-point stencil
///   (-f(2h) + 16 f(h) - 30 f(0) + 16 f(-h) - f(-2h)) / (12 h^2)
/// at steps h0*2^{-j}, j = 0..levels, Richardson-extrapolated.
inline FdResult richardson_second(const std::function<double(double)>& f, double h0, int levels,
                                  double abs_floor = 1e-8) {
  const double f0 = f(0.0);
  std::vector<double> raw;
  for (int j = 0; j <= levels; ++j) {
    const double h = h0 * std::pow(2.0, -j);
    raw.push_back((-f(2 * h) + 16 * f(h) - 30 * f0 + 16 * f(-h) - f(-2 * h)) / (12 * h * h));
  }
  return detail::richardson_table(std::move(raw), abs_floor);
}

/// First derivative of f at 0 by the 5-point stencil
///   (f(-2h) - 8 f(-h) + 8 f(h) - f(2h)) / (12 h), Richardson-extrapolated.
inline FdResult richardson_first(const std::function<double(double)>& f, double h0, int levels,
                                 double abs_floor = 1e-10) {
  std::vector<double> raw;
  for (int j = 0; j <= levels; ++j) {
    const double h = h0 * std::pow(2.0, -j);
    raw.push_back((f(-2 * h) - 8 * f(-h) + 8 * f(h) - f(2 * h)) / (12 * h));
  }
  return detail::richardson_table(std::move(raw), abs_floor);
}

}  // namespace cwt
