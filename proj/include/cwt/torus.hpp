#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cwt {

inline constexpr double pi = std::numbers::pi;

/// Product torus T_r = rS^1 x sS^1 in S^3 with r^2 + s^2 = 1, parametrized
/// isometrically over Sigma_r = R^2 / (2*pi*r Z x 2*pi*s Z).
struct TorusParameter {
  double r;     // first radius, in (0,1)
  double s;     // second radius, s = sqrt(1 - r^2)
  double b;     // Teichmueller coordinate s/r
  double rho;   // latitude arccos(r), in (0, pi/2)
  double area;  // |Sigma_r| = 4*pi^2*r*s
};

inline TorusParameter make_torus(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error("make_torus: r must lie in (0,1)");
  }
  TorusParameter t;
  t.r = r;
  t.s = std::sqrt(1.0 - r * r);
  t.b = t.s / t.r;
  t.rho = std::acos(r);
  t.area = 4.0 * pi * pi * t.r * t.s;
  return t;
}

/// Second-fundamental-form data of the torus. Every normal-valued tensor is a
/// scalar multiple of the unit normal, so only the coefficients are stored:
/// A11 = a11*n, A22 = a22*n, A12 = 0, trace-free part Ao11 = -atf*n = -Ao22.
struct GeometricData {
  double a11;    // -s/r
  double a22;    // r/s
  double h;      // mean-curvature scalar (r^2 - s^2)/(r s)
  double atf;    // |Ao11| = |Ao22| = 1/(2 r s)
  double wgrad;  // Willmore-gradient coefficient (r^2 - s^2)/(2 r^3 s^3)
};

inline GeometricData geometric_data(const TorusParameter& t) {
  GeometricData g;
  g.a11 = -t.s / t.r;
  g.a22 = t.r / t.s;
  g.h = g.a11 + g.a22;
  g.atf = 1.0 / (2.0 * t.r * t.s);
  g.wgrad = (t.r * t.r - t.s * t.s) / (2.0 * std::pow(t.r, 3) * std::pow(t.s, 3));
  return g;
}

/// Willmore energy of T_r. With h = (r^2-s^2)/(rs) and area 4*pi^2*r*s,
/// (h^2/4 + 1)*area collapses to pi^2/(r s).
inline double willmore_energy_clifford(const TorusParameter& t) {
  return pi * pi / (t.r * t.s);
}

/// Residual of the constrained-Willmore identity
/// W = ((r^2-s^2)/(2 r^2 s^2)) * g(Ao, q2), where g(Ao, q2) has normal
/// coefficient 1/(r s). Vanishes identically in exact arithmetic.
inline double constrained_residual(const TorusParameter& t) {
  const GeometricData g = geometric_data(t);
  const double rhs = ((t.r * t.r - t.s * t.s) / (2.0 * t.r * t.r * t.s * t.s)) *
                     (1.0 / (t.r * t.s));
  return std::fabs(g.wgrad - rhs);
}

/// Normal coefficient of g(Ao, q1) = 2*Ao12; zero since A12 = A21 = 0.
inline double isothermic_residual(const TorusParameter& t) {
  (void)t;
  const double ao12 = 0.0;
  return 2.0 * ao12;
}

}  // namespace cwt
