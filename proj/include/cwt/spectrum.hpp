#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwt/fourier.hpp"
#include "cwt/rootfind.hpp"
#include "cwt/tensor.hpp"
#include "cwt/torus.hpp"

namespace cwt {

/// Fourier mode (k,l) of Sigma_r with parity labels for the u/v factors.
struct ModeIndex {
  int k = 0;
  int l = 0;
  Parity parity_u = Parity::cos;
  Parity parity_v = Parity::cos;

  ModeIndex() = default;
  ModeIndex(int k_, int l_, Parity pu = Parity::cos, Parity pv = Parity::cos)
      : k(k_), l(l_), parity_u(pu), parity_v(pv) {
    if (k < 0 || l < 0) throw std::domain_error("ModeIndex: frequencies must be >= 0");
    if ((k == 0 && parity_u == Parity::sin) || (l == 0 && parity_v == Parity::sin))
      throw std::domain_error("ModeIndex: sin parity is disallowed at frequency 0");
  }

  /// Dimension of the A_{k,l} eigenspace spanned by the parity choices.
  int multiplicity() const { return (k > 0 ? 2 : 1) * (l > 0 ? 2 : 1); }
};

enum class SpectrumSign { negative, zero, positive };

inline const char* to_string(SpectrumSign s) {
  switch (s) {
    case SpectrumSign::negative: return "negative";
    case SpectrumSign::zero: return "zero";
    default: return "positive";
  }
}

/// One mode of the constrained stability operator L_r = L^W - lambda*L^B.
/// e is the eigenvalue of the second-variation quadratic form: for a unit
/// direction phi in A_{k,l}, d^2/dt^2 W = e * ||phi n||^2_{L^2} along
/// constraint-preserving variations. The factored polynomial route is
///   e = bigN / (2 r^4 s^4 (k^2 s^2 + l^2 r^2)),
/// where the factor 2 in the denominator is pinned by the finite-difference
/// oracle (oracle.hpp) and by the closed-form second derivative of the
/// constant-profile energy.
struct SpectrumEntry {
  ModeIndex mode;
  double c = 0.0;              // c_r(k,l)
  double laplace_symbol = 0.0; // m = k^2/r^2 + l^2/s^2
  double lw = 0.0;             // symbol of the Willmore Hessian operator
  double lb = 0.0;             // symbol of the constraint Hessian operator
  double lambda = 0.0;         // Lagrange multiplier
  double bigN = 0.0;           // factored numerator polynomial N(k,l;r)
  double e = 0.0;              // eigenvalue of the constrained form
  SpectrumSign sign = SpectrumSign::zero;
};

/// lambda(r) = -pi^2 (r^2 - s^2)/s^2; zero at the square torus r = 1/sqrt(2).
inline double lagrange_multiplier(const TorusParameter& t) {
  return -pi * pi * (t.r * t.r - t.s * t.s) / (t.s * t.s);
}

/// Symbol of the Willmore Hessian on A_{k,l}: with m = k^2/r^2 + l^2/s^2,
///   (1/2)(m^2 - m/(2 r^2 s^2)) - k^2/r^4 - l^2/s^4 + (r^4+s^4)/(2 r^4 s^4).
inline double lw_symbol(const TorusParameter& t, const ModeIndex& mode) {
  if (mode.k == 0 && mode.l == 0)
    throw std::domain_error("lw_symbol: the (0,0) mode is not admissible");
  const double r2 = t.r * t.r, s2 = t.s * t.s;
  const double m = mode.k * mode.k / r2 + mode.l * mode.l / s2;
  const double r4 = r2 * r2, s4 = s2 * s2;
  return 0.5 * (m * m - m / (2.0 * r2 * s2)) - mode.k * mode.k / r4 - mode.l * mode.l / s4 +
         (r4 + s4) / (2.0 * r4 * s4);
}

/// Symbol of the constraint Hessian on A_{k,l}:
///   -(1/(4 pi^2 r^2)) * (k^2/r^2 - l^2/s^2 + (r^2 - s^2 + c_r(k,l))/(r^2 s^2)).
inline double lb_symbol(const TorusParameter& t, const ModeIndex& mode) {
  if (mode.k == 0 && mode.l == 0)
    throw std::domain_error("lb_symbol: the (0,0) mode is not admissible");
  const double r2 = t.r * t.r, s2 = t.s * t.s;
  const double c = c_constant(t, mode.k, mode.l);
  return -(1.0 / (4.0 * pi * pi * r2)) *
         (mode.k * mode.k / r2 - mode.l * mode.l / s2 + (r2 - s2 + c) / (r2 * s2));
}

namespace detail {

// Prefactor (k^4-k^2) s^4 + (l^4-l^2) r^4 + 2 k^2 l^2 r^2 s^2. The integer
// factors make it exactly zero for (1,0) and (0,1).
inline double spectrum_prefactor(const TorusParameter& t, int k, int l) {
  const double r2 = t.r * t.r, s2 = t.s * t.s;
  const double k2 = static_cast<double>(k) * k, l2 = static_cast<double>(l) * l;
  return (k2 * k2 - k2) * s2 * s2 + (l2 * l2 - l2) * r2 * r2 + 2.0 * k2 * l2 * r2 * s2;
}

// Sign factor k^2 s^2 + l^2 r^2 - 1, rearranged with s^2 = 1 - r^2 as
// (k^2 - 1) + (l^2 - k^2) r^2 so that (1,1) vanishes exactly.
inline double spectrum_sign_factor(const TorusParameter& t, int k, int l) {
  const double k2 = static_cast<double>(k) * k, l2 = static_cast<double>(l) * l;
  return (k2 - 1.0) + (l2 - k2) * t.r * t.r;
}

}  // namespace detail

inline SpectrumEntry eigenvalue(const TorusParameter& t, const ModeIndex& mode) {
  if (mode.k == 0 && mode.l == 0)
    throw std::domain_error("eigenvalue: the (0,0) mode is not tangent to the constraint");
  SpectrumEntry out;
  out.mode = mode;
  const double r2 = t.r * t.r, s2 = t.s * t.s;
  out.c = c_constant(t, mode.k, mode.l);
  out.laplace_symbol = mode.k * mode.k / r2 + mode.l * mode.l / s2;
  out.lw = lw_symbol(t, mode);
  out.lb = lb_symbol(t, mode);
  out.lambda = lagrange_multiplier(t);

  const double p = detail::spectrum_prefactor(t, mode.k, mode.l);
  const double d = detail::spectrum_sign_factor(t, mode.k, mode.l);
  const double mtilde = mode.k * mode.k * s2 + mode.l * mode.l * r2;
  out.bigN = p * d + 0.0;  // +0.0 flushes the negative zero of p*d
  out.e = out.bigN / (2.0 * r2 * r2 * s2 * s2 * mtilde);
  out.sign = (p == 0.0 || d == 0.0) ? SpectrumSign::zero
             : (d < 0.0)            ? SpectrumSign::negative
                                    : SpectrumSign::positive;
  return out;
}

struct StabilityMode {
  int k, l;
  double e;
  int multiplicity;
};

struct StabilityReport {
  double r = 0.0;
  double b = 0.0;
  bool stable = false;
  std::vector<StabilityMode> negative_modes;
  std::vector<StabilityMode> zero_modes;
  int morse_index = 0;           // distinct (k,l) pairs with e < 0
  int morse_index_weighted = 0;  // sum of eigenspace multiplicities
};

/// Classifies T_r. Only modes with k^2 s^2 + l^2 r^2 <= 1 are enumerated; all
/// others have nonnegative eigenvalue, so the enumeration is finite and exact
/// (k <= 1/s, l <= 1/r), with no cutoff heuristic.
inline StabilityReport morse_index(const TorusParameter& t) {
  StabilityReport rep;
  rep.r = t.r;
  rep.b = t.b;
  const double s2 = t.s * t.s;
  for (int k = 0; static_cast<double>(k) * k * s2 <= 1.0; ++k) {
    for (int l = 0;; ++l) {
      if (k == 0 && l == 0) continue;
      const double d = detail::spectrum_sign_factor(t, k, l);
      if (d > 0.0) break;  // increasing in l; all further modes are positive
      const SpectrumEntry entry = eigenvalue(t, ModeIndex(k, l));
      const StabilityMode m{k, l, entry.e, entry.mode.multiplicity()};
      if (entry.sign == SpectrumSign::negative) {
        rep.negative_modes.push_back(m);
      } else if (entry.sign == SpectrumSign::zero) {
        rep.zero_modes.push_back(m);
      }
    }
  }
  rep.morse_index = static_cast<int>(rep.negative_modes.size());
  for (const auto& m : rep.negative_modes) rep.morse_index_weighted += m.multiplicity;
  rep.stable = rep.negative_modes.empty();
  return rep;
}

struct Threshold {
  std::string family;   // "l=2", "k=3", ...
  double r_closed;      // closed-form zero crossing
  double r_bisection;   // crossing located by bisection on e(r)
};

/// Zero-crossing radii of the mode families: r = 1/l for the (0,l) family and
/// r = sqrt(k^2-1)/k for the (k,0) family, each confirmed by bisection on
/// r -> e(k,l;r) to |dr| <= 1e-12.
inline std::vector<Threshold> thresholds(int max_k) {
  if (max_k < 2) throw std::domain_error("thresholds: max_k must be >= 2");
  std::vector<Threshold> out;
  const double tol = 1e-12;
  for (int l = 2; l <= max_k; ++l) {
    const double rc = 1.0 / l;
    auto f = [l](double r) { return eigenvalue(make_torus(r), ModeIndex(0, l)).e; };
    const double lo = std::max(1e-6, rc * (1.0 - 1e-3));
    const double hi = std::min(1.0 - 1e-6, rc * (1.0 + 1e-3));
    out.push_back({"l=" + std::to_string(l), rc, bisect(f, lo, hi, tol)});
  }
  for (int k = 2; k <= max_k; ++k) {
    const double rc = std::sqrt(static_cast<double>(k) * k - 1.0) / k;
    auto f = [k](double r) { return eigenvalue(make_torus(r), ModeIndex(k, 0)).e; };
    const double lo = std::max(1e-6, rc - 1e-3);
    const double hi = std::min(1.0 - 1e-6, rc + 1e-3);
    out.push_back({"k=" + std::to_string(k), rc, bisect(f, lo, hi, tol)});
  }
  return out;
}

enum class OperatorKind { W, B, full };

/// Applies the chosen Fourier-multiplier operator to a normal field given by
/// its scalar Fourier coefficients. The field must have no (0,0) component.
inline FourierField apply_operator(const TorusParameter& t, const FourierField& field,
                                   OperatorKind which) {
  if (std::abs(field.coeff(0, 0)) != 0.0)
    throw std::domain_error("apply_operator: field must have no (0,0) component");
  const double lambda = lagrange_multiplier(t);
  FourierField out(t);
  for (const auto& [key, z] : field.coeffs()) {
    const ModeIndex mode(std::abs(key.first), std::abs(key.second));
    double sym = 0.0;
    switch (which) {
      case OperatorKind::W: sym = lw_symbol(t, mode); break;
      case OperatorKind::B: sym = lb_symbol(t, mode); break;
      case OperatorKind::full: sym = lw_symbol(t, mode) - lambda * lb_symbol(t, mode); break;
    }
    if (sym != 0.0 && z != std::complex<double>(0.0))
      out.set_coeff(key.first, key.second, sym * z);
  }
  return out;
}

}  // namespace cwt
