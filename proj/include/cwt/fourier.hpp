#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

#include "cwt/torus.hpp"

namespace cwt {

enum class Parity { cos, sin };

/// Real-valued finite Fourier series on Sigma_r,
///   f(u,v) = sum_{(k,l)} c_{k,l} exp(i(k u/r + l v/s)),
/// stored as a sparse map over (k,l) in Z^2 with the conjugate symmetry
/// c_{-k,-l} = conj(c_{k,l}). All derivative operators are diagonal
/// multipliers; products convolve the coefficient maps.
class FourierField {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, std::complex<double>>;

  explicit FourierField(const TorusParameter& t) : r_(t.r), s_(t.s) {}
  FourierField(double r, double s) : r_(r), s_(s) {}

  double r() const { return r_; }
  double s() const { return s_; }
  double area() const { return 4.0 * pi * pi * r_ * s_; }
  const Map& coeffs() const { return c_; }
  bool empty() const { return c_.empty(); }

  /// Sets c_{k,l} and its conjugate partner. The (0,0) coefficient of a real
  /// field is real; any imaginary part is discarded there.
  void set_coeff(int k, int l, std::complex<double> z) {
    if (k == 0 && l == 0) z = z.real();
    c_[{k, l}] = z;
    c_[{-k, -l}] = std::conj(z);
    prune();
  }

  std::complex<double> coeff(int k, int l) const {
    auto it = c_.find({k, l});
    return it == c_.end() ? std::complex<double>(0.0) : it->second;
  }

  /// Element of the trigonometric basis A_{k,l}: u-factor cos(k u/r) or
  /// sin(k u/r), v-factor cos(l v/s) or sin(l v/s). sin at frequency 0 is
  /// rejected (identically zero).
  static FourierField basis(const TorusParameter& t, int k, int l, Parity pu, Parity pv) {
    if (k < 0 || l < 0) throw std::domain_error("basis: frequencies must be >= 0");
    if ((k == 0 && pu == Parity::sin) || (l == 0 && pv == Parity::sin))
      throw std::domain_error("basis: sin at frequency 0 is identically zero");
    FourierField f(t);
    // cos(a) = (E_a + E_-a)/2, sin(a) = (E_a - E_-a)/(2i)
    const std::complex<double> I(0.0, 1.0);
    auto add = [&f](int kk, int ll, std::complex<double> z) { f.c_[{kk, ll}] += z; };
    const std::complex<double> up = (pu == Parity::cos) ? 0.5 : std::complex<double>(0.0, -0.5);
    const std::complex<double> um = (pu == Parity::cos) ? 0.5 : std::complex<double>(0.0, 0.5);
    const std::complex<double> vp = (pv == Parity::cos) ? 0.5 : std::complex<double>(0.0, -0.5);
    const std::complex<double> vm = (pv == Parity::cos) ? 0.5 : std::complex<double>(0.0, 0.5);
    if (k == 0 && l == 0) {
      add(0, 0, 1.0);
    } else if (k == 0) {
      add(0, l, 2.0 * vp);
      add(0, -l, 2.0 * vm);
    } else if (l == 0) {
      add(k, 0, 2.0 * up);
      add(-k, 0, 2.0 * um);
    } else {
      add(k, l, up * vp);
      add(k, -l, up * vm);
      add(-k, l, um * vp);
      add(-k, -l, um * vm);
    }
    f.prune();
    return f;
  }

  static FourierField constant(const TorusParameter& t, double value) {
    FourierField f(t);
    if (value != 0.0) f.c_[{0, 0}] = value;
    return f;
  }

  FourierField& operator+=(const FourierField& o) {
    check_same_torus(o);
    for (const auto& [key, z] : o.c_) c_[key] += z;
    prune();
    return *this;
  }
  FourierField& operator-=(const FourierField& o) {
    check_same_torus(o);
    for (const auto& [key, z] : o.c_) c_[key] -= z;
    prune();
    return *this;
  }
  FourierField& operator*=(double a) {
    for (auto& [key, z] : c_) z *= a;
    prune();
    return *this;
  }
  friend FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
  friend FourierField operator-(FourierField a, const FourierField& b) { return a -= b; }
  friend FourierField operator*(FourierField a, double x) { return a *= x; }
  friend FourierField operator*(double x, FourierField a) { return a *= x; }
  friend FourierField operator-(FourierField a) { return a *= -1.0; }

  /// Pointwise product (convolution of coefficients).
  friend FourierField operator*(const FourierField& a, const FourierField& b) {
    a.check_same_torus(b);
    FourierField out(a.r_, a.s_);
    for (const auto& [ka, za] : a.c_)
      for (const auto& [kb, zb] : b.c_)
        out.c_[{ka.first + kb.first, ka.second + kb.second}] += za * zb;
    out.prune();
    return out;
  }

  FourierField d1() const { return derivative(1); }
  FourierField d2() const { return derivative(2); }

  FourierField laplacian() const {
    FourierField out(r_, s_);
    for (const auto& [key, z] : c_) out.c_[key] = -symbol(key) * z;
    out.prune();
    return out;
  }

  /// Solves Laplace u = *this with zero mean. A nonzero constant component of
  /// the right-hand side makes the problem unsolvable and is rejected.
  FourierField solve_poisson() const {
    double scale = max_abs_coeff();
    auto it = c_.find({0, 0});
    if (it != c_.end() && std::abs(it->second) > 1e-13 * std::max(1.0, scale))
      throw std::domain_error("solve_poisson: right-hand side has a nonzero mean");
    FourierField out(r_, s_);
    for (const auto& [key, z] : c_) {
      if (key.first == 0 && key.second == 0) continue;
      out.c_[key] = -z / symbol(key);
    }
    out.prune();
    return out;
  }

  double eval(double u, double v) const {
    std::complex<double> acc(0.0);
    for (const auto& [key, z] : c_) {
      const double phase = key.first * u / r_ + key.second * v / s_;
      acc += z * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc.real();
  }

  double mean() const { return coeff(0, 0).real(); }
  double integral() const { return area() * mean(); }

  /// L^2(Sigma_r) pairing; by Parseval equals area * sum_k a_k conj(b_k).
  friend double l2_inner(const FourierField& a, const FourierField& b) {
    a.check_same_torus(b);
    std::complex<double> acc(0.0);
    for (const auto& [key, za] : a.c_) {
      auto it = b.c_.find(key);
      if (it != b.c_.end()) acc += za * std::conj(it->second);
    }
    return a.area() * acc.real();
  }
  friend double l2_norm2(const FourierField& a) { return l2_inner(a, a); }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, z] : c_) m = std::max(m, std::abs(z));
    return m;
  }

 private:
  FourierField derivative(int dir) const {
    FourierField out(r_, s_);
    const std::complex<double> I(0.0, 1.0);
    for (const auto& [key, z] : c_) {
      const double freq = (dir == 1) ? key.first / r_ : key.second / s_;
      if (freq != 0.0) out.c_[key] = I * freq * z;
    }
    out.prune();
    return out;
  }

  double symbol(const Key& key) const {
    const double a = key.first / r_, b = key.second / s_;
    return a * a + b * b;
  }

  void check_same_torus(const FourierField& o) const {
    if (r_ != o.r_ || s_ != o.s_)
      throw std::invalid_argument("FourierField: operands live on different tori");
  }

  void prune() {
    for (auto it = c_.begin(); it != c_.end();) {
      if (it->second == std::complex<double>(0.0, 0.0))
        it = c_.erase(it);
      else
        ++it;
    }
  }

  double r_, s_;
  Map c_;
};

}  // namespace cwt
