#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cwt/fft.hpp"
#include "cwt/torus.hpp"

namespace cwt {

struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Periodic profile curve gamma: S^1 -> (0, pi/2) sampled at v_j = 2*pi*j/n,
/// defining the surface of revolution
///   h_gamma(u,v) = (cos(gamma(v)) e^{iu}, sin(gamma(v)) e^{iv})  in  S^3.
struct Profile {
  int n = 0;
  std::vector<double> values;

  Profile() = default;
  Profile(int n_, std::vector<double> vals) : n(n_), values(std::move(vals)) {
    if (n < 16 || !detail::is_power_of_two(n))
      throw std::invalid_argument("Profile: n must be a power of two >= 16");
    if (static_cast<int>(values.size()) != n)
      throw std::invalid_argument("Profile: sample count does not match n");
    for (double g : values)
      if (!(g > 0.0 && g < 0.5 * pi))
        throw geometry_error("Profile: samples must lie in (0, pi/2)");
  }

  double v_at(int j) const { return 2.0 * pi * j / n; }
};

/// Constant profile at rho = arccos(r), the profile of the torus T_r.
inline Profile clifford_profile(const TorusParameter& t, int n = 256) {
  return Profile(n, std::vector<double>(static_cast<size_t>(n), t.rho));
}

/// Per-sample geometry of h_gamma along one profile period (the u-direction
/// is homogeneous; all samples are taken at u = 0). Ambient coordinates are
/// (Re z1, Im z1, Re z2, Im z2) in R^4.
struct SurfaceData {
  int n = 0;
  std::vector<double> v, gamma, gamma_p, gamma_pp;
  std::vector<double> E, F, G, area_element;
  std::vector<double> a11, a12, a22;  // second fundamental form against the unit normal
  std::vector<double> h;              // mean curvature g^{ij} A_ij
  std::vector<std::array<double, 4>> embedding;
  std::vector<std::array<double, 4>> normal;
  double max_sphere_residual = 0.0;      // max | |p| - 1 |
  double max_orthogonality_residual = 0.0;  // normal vs {p, du h, dv h} and unit length
  double max_f_residual = 0.0;           // max |F|
};

namespace detail {

inline double dot4(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace detail

inline SurfaceData surface_data(const Profile& p) {
  for (double g : p.values)
    if (g < 1e-6 || g > 0.5 * pi - 1e-6)
      throw geometry_error("surface_data: profile degenerates at the coordinate axes");

  SurfaceData d;
  d.n = p.n;
  d.v.resize(p.n);
  d.gamma = p.values;
  d.gamma_p = detail::spectral_derivative(p.values, 1);
  d.gamma_pp = detail::spectral_derivative(p.values, 2);
  d.E.resize(p.n);
  d.F.resize(p.n);
  d.G.resize(p.n);
  d.area_element.resize(p.n);
  d.a11.resize(p.n);
  d.a12.resize(p.n);
  d.a22.resize(p.n);
  d.h.resize(p.n);
  d.embedding.resize(p.n);
  d.normal.resize(p.n);

  for (int j = 0; j < p.n; ++j) {
    const double v = p.v_at(j);
    const double g = d.gamma[j], gp = d.gamma_p[j], gpp = d.gamma_pp[j];
    const double c = std::cos(g), st = std::sin(g);
    const double cv = std::cos(v), sv = std::sin(v);

    const std::array<double, 4> pos{c, 0.0, st * cv, st * sv};
    const std::array<double, 4> tu{0.0, c, 0.0, 0.0};
    const std::array<double, 4> tv{-gp * st, 0.0, gp * c * cv - st * sv, gp * c * sv + st * cv};
    const std::array<double, 4> huu{-c, 0.0, 0.0, 0.0};
    const std::array<double, 4> huv{0.0, -gp * st, 0.0, 0.0};
    const double w_re = gpp * c - (gp * gp + 1.0) * st;  // d^2/dv^2 of z2, times e^{iv}
    const double w_im = 2.0 * gp * c;
    const std::array<double, 4> hvv{-gpp * st - gp * gp * c, 0.0, w_re * cv - w_im * sv,
                                    w_re * sv + w_im * cv};

    // Unit normal by Gram-Schmidt against {pos, tu, tv}, seeded with the
    // gamma' = 0 normal direction (sin(g) e^{iu}, -cos(g) e^{iv}).
    std::array<double, 4> w{st, 0.0, -c * cv, -c * sv};
    const double eu = detail::dot4(tu, tu), ev = detail::dot4(tv, tv);
    const double wp = detail::dot4(w, pos), wu = detail::dot4(w, tu) / eu,
                 wv = detail::dot4(w, tv) / ev;
    for (int i = 0; i < 4; ++i) w[i] -= wp * pos[i] + wu * tu[i] + wv * tv[i];
    const double wn = std::sqrt(detail::dot4(w, w));
    for (int i = 0; i < 4; ++i) w[i] /= wn;

    d.v[j] = v;
    d.embedding[j] = pos;
    d.normal[j] = w;
    d.E[j] = eu;
    d.F[j] = detail::dot4(tu, tv);
    d.G[j] = ev;
    const double det = d.E[j] * d.G[j] - d.F[j] * d.F[j];
    d.area_element[j] = std::sqrt(det);
    d.a11[j] = detail::dot4(huu, w);
    d.a12[j] = detail::dot4(huv, w);
    d.a22[j] = detail::dot4(hvv, w);
    d.h[j] = (d.G[j] * d.a11[j] - 2.0 * d.F[j] * d.a12[j] + d.E[j] * d.a22[j]) / det;

    d.max_sphere_residual =
        std::max(d.max_sphere_residual, std::fabs(std::sqrt(detail::dot4(pos, pos)) - 1.0));
    d.max_f_residual = std::max(d.max_f_residual, std::fabs(d.F[j]));
    const double orto = std::max({std::fabs(detail::dot4(w, pos)),
                                  std::fabs(detail::dot4(w, tu)) / std::sqrt(eu),
                                  std::fabs(detail::dot4(w, tv)) / std::sqrt(ev),
                                  std::fabs(detail::dot4(w, w) - 1.0)});
    d.max_orthogonality_residual = std::max(d.max_orthogonality_residual, orto);
  }
  return d;
}

/// Willmore energy W = int (h^2/4 + 1) dmu by uniform trapezoid in v (exact
/// factor 2*pi in u). Spectrally convergent for analytic profiles.
inline double willmore_energy(const Profile& p) {
  const SurfaceData d = surface_data(p);
  double sum = 0.0;
  for (int j = 0; j < p.n; ++j)
    sum += (0.25 * d.h[j] * d.h[j] + 1.0) * d.area_element[j];
  return 2.0 * pi * sum * (2.0 * pi / p.n);
}

/// Conformal class omega = (1/2pi) int sqrt(gamma'^2 + sin^2 gamma)/cos gamma dv,
/// the b-coordinate of h_gamma. Equals s/r for the constant profile.
inline double conformal_class(const Profile& p) {
  for (double g : p.values)
    if (g < 1e-6 || g > 0.5 * pi - 1e-6)
      throw geometry_error("conformal_class: profile degenerates at the coordinate axes");
  const std::vector<double> gp = detail::spectral_derivative(p.values, 1);
  double sum = 0.0;
  for (int j = 0; j < p.n; ++j) {
    const double st = std::sin(p.values[j]);
    sum += std::sqrt(gp[j] * gp[j] + st * st) / std::cos(p.values[j]);
  }
  return sum / p.n;
}

}  // namespace cwt
