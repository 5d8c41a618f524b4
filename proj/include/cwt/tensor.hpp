#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "cwt/fourier.hpp"
#include "cwt/torus.hpp"

namespace cwt {

/// Constant-coefficient metric on the flat torus. Perturbations of the metric
/// are Fourier fields (SymTensorField); the base metric itself is constant.
struct FlatMetric {
  double g11 = 1.0, g12 = 0.0, g22 = 1.0;

  static FlatMetric euclidean() { return {}; }

  /// Chart of flat metrics du^2 + 2a(r/s) du dv + (a^2+b^2)(r/s)^2 dv^2 on
  /// Sigma_r, parametrized over the upper half-plane a + ib. The point
  /// (a,b) = (0, s/r) is the euclidean metric.
  static FlatMetric teichmueller_chart(const TorusParameter& t, double a, double b) {
    if (!(b > 0.0)) throw std::domain_error("teichmueller_chart: b must be positive");
    const double q = t.r / t.s;
    return {1.0, a * q, (a * a + b * b) * q * q};
  }

  double det() const { return g11 * g22 - g12 * g12; }

  bool positive_definite() const { return g11 > 0.0 && det() > 0.0; }

  bool is_euclidean(double tol = 1e-14) const {
    return std::fabs(g11 - 1.0) <= tol && std::fabs(g12) <= tol && std::fabs(g22 - 1.0) <= tol;
  }

  /// Inverse components (G11, G12, G22).
  std::array<double, 3> inverse() const {
    if (!positive_definite()) throw std::domain_error("FlatMetric: degenerate metric");
    const double d = det();
    return {g22 / d, -g12 / d, g11 / d};
  }

  double inv(int i, int j) const {
    const auto g = inverse();
    if (i == 0 && j == 0) return g[0];
    if (i == 1 && j == 1) return g[2];
    return g[1];
  }
};

/// Symmetric 2-tensor field with Fourier component fields t11, t12, t22.
struct SymTensorField {
  FourierField t11, t12, t22;

  explicit SymTensorField(const TorusParameter& t) : t11(t), t12(t), t22(t) {}
  SymTensorField(FourierField a, FourierField b, FourierField c)
      : t11(std::move(a)), t12(std::move(b)), t22(std::move(c)) {}

  /// alpha1*q1 + alpha2*q2 with q1 = du dv + dv du, q2 = dv^2 - du^2:
  /// components (-alpha2, alpha1, alpha2). Trace-free by construction.
  static SymTensorField from_tt_components(const FourierField& alpha1, const FourierField& alpha2) {
    return SymTensorField(-1.0 * alpha2, alpha1, alpha2);
  }

  const FourierField& comp(int i, int j) const {
    if (i == 0 && j == 0) return t11;
    if (i == 1 && j == 1) return t22;
    return t12;
  }

  double tracefree_residual() const {
    FourierField tr = t11 + t22;
    return tr.max_abs_coeff();
  }

  bool is_tracefree(double tol = 1e-13) const {
    const double scale = std::max({1.0, t11.max_abs_coeff(), t22.max_abs_coeff()});
    return tracefree_residual() <= tol * scale;
  }

  friend SymTensorField operator+(const SymTensorField& a, const SymTensorField& b) {
    return SymTensorField(a.t11 + b.t11, a.t12 + b.t12, a.t22 + b.t22);
  }
  friend SymTensorField operator-(const SymTensorField& a, const SymTensorField& b) {
    return SymTensorField(a.t11 - b.t11, a.t12 - b.t12, a.t22 - b.t22);
  }
  friend SymTensorField operator*(double x, const SymTensorField& a) {
    return SymTensorField(x * a.t11, x * a.t12, x * a.t22);
  }
};

struct OneFormField {
  FourierField a1, a2;

  explicit OneFormField(const TorusParameter& t) : a1(t), a2(t) {}
  OneFormField(FourierField x, FourierField y) : a1(std::move(x)), a2(std::move(y)) {}

  const FourierField& comp(int m) const { return m == 0 ? a1 : a2; }

  double max_abs_coeff() const { return std::max(a1.max_abs_coeff(), a2.max_abs_coeff()); }

  friend OneFormField operator+(const OneFormField& a, const OneFormField& b) {
    return OneFormField(a.a1 + b.a1, a.a2 + b.a2);
  }
  friend OneFormField operator-(const OneFormField& a, const OneFormField& b) {
    return OneFormField(a.a1 - b.a1, a.a2 - b.a2);
  }
};

/// The constant TT tensors q1 = du dv + dv du and q2 = dv^2 - du^2.
inline SymTensorField q1_tensor(const TorusParameter& t) {
  return SymTensorField::from_tt_components(FourierField::constant(t, 1.0),
                                            FourierField::constant(t, 0.0));
}
inline SymTensorField q2_tensor(const TorusParameter& t) {
  return SymTensorField::from_tt_components(FourierField::constant(t, 0.0),
                                            FourierField::constant(t, 1.0));
}

/// Pointwise tensor pairing <q,p> = sum_ij q_ij p_ij integrated over Sigma_r.
inline double l2_inner(const SymTensorField& q, const SymTensorField& p) {
  return l2_inner(q.t11, p.t11) + 2.0 * l2_inner(q.t12, p.t12) + l2_inner(q.t22, p.t22);
}
inline double l2_norm2(const SymTensorField& q) { return l2_inner(q, q); }

/// tr_g q = g^{ij} q_ij.
inline FourierField trace(const FlatMetric& g, const SymTensorField& q) {
  const auto gi = g.inverse();
  return gi[0] * q.t11 + 2.0 * gi[1] * q.t12 + gi[2] * q.t22;
}

/// (div_g q)_m = g^{ij} d_i q_{jm}; Christoffel symbols of a constant metric
/// vanish, so this is exact for every FlatMetric.
inline OneFormField divergence(const FlatMetric& g, const SymTensorField& q) {
  const auto gi = g.inverse();
  auto inv = [&gi](int i, int j) { return (i == j) ? (i == 0 ? gi[0] : gi[2]) : gi[1]; };
  auto d = [](const FourierField& f, int i) { return i == 0 ? f.d1() : f.d2(); };
  OneFormField out(FourierField(q.t11.r(), q.t11.s()), FourierField(q.t11.r(), q.t11.s()));
  for (int m = 0; m < 2; ++m) {
    FourierField acc(q.t11.r(), q.t11.s());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc += inv(i, j) * d(q.comp(j, m), i);
    (m == 0 ? out.a1 : out.a2) = acc;
  }
  return out;
}

/// Metric derivative of the trace: D_1 tr(g,q) h = -g^{ij} g^{kl} q_ik h_jl.
inline FourierField d_trace(const FlatMetric& g, const SymTensorField& q, const SymTensorField& h) {
  FourierField acc(q.t11.r(), q.t11.s());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          acc += (-g.inv(i, j) * g.inv(k, l)) * (q.comp(i, k) * h.comp(j, l));
  return acc;
}

/// Metric derivative of the divergence at the euclidean base metric:
/// (D_1 div(g,q) h)_m = -h_ik d_i q_km - (div h)_k q_km
///                      + (1/2) d_k(tr h) q_km - (1/2) d_m(h_ik) q_ik.
/// Only g = euclidean is supported (the base Christoffel symbols must vanish
/// for the plain-derivative form used here).
inline OneFormField d_divergence(const FlatMetric& g, const SymTensorField& q,
                                 const SymTensorField& h) {
  if (!g.is_euclidean())
    throw std::invalid_argument("d_divergence: only the euclidean base metric is supported");
  auto d = [](const FourierField& f, int i) { return i == 0 ? f.d1() : f.d2(); };
  const double r = q.t11.r(), s = q.t11.s();

  FourierField divh[2] = {FourierField(r, s), FourierField(r, s)};
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i) divh[k] += d(h.comp(i, k), i);
  const FourierField trh = h.t11 + h.t22;

  OneFormField out(FourierField(r, s), FourierField(r, s));
  for (int m = 0; m < 2; ++m) {
    FourierField acc(r, s);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) acc -= h.comp(i, k) * d(q.comp(k, m), i);
    for (int k = 0; k < 2; ++k) acc -= divh[k] * q.comp(k, m);
    for (int k = 0; k < 2; ++k) acc += 0.5 * (d(trh, k) * q.comp(k, m));
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) acc -= 0.5 * (d(h.comp(i, k), m) * q.comp(i, k));
    (m == 0 ? out.a1 : out.a2) = acc;
  }
  return out;
}

/// First-order change eta° of the TT tensor q2 under a trace-free metric
/// perturbation alpha = alpha1*q1 + alpha2*q2. Solves the mode-wise Poisson
/// problems
///   Lap u1 = (d1^2 - d2^2) alpha1 + 2 d1 d2 alpha2,
///   Lap u2 = 2 d1 d2 alpha1 - (d1^2 - d2^2) alpha2,
/// normalized to zero mean, and returns eta° = u1*q1 + u2*q2. The zero-mean
/// choice makes <eta°, q_mu>_{L^2} = 0.
inline SymTensorField tt_perturbation(const SymTensorField& alpha) {
  if (!alpha.is_tracefree())
    throw std::domain_error("tt_perturbation: input tensor must be trace-free");
  const FourierField& a1 = alpha.t12;
  const FourierField& a2 = alpha.t22;

  auto dminus = [](const FourierField& f) {
    FourierField g = f.d1().d1();
    return g - f.d2().d2();
  };
  FourierField rhs1 = dminus(a1) + 2.0 * a2.d1().d2();
  FourierField rhs2 = 2.0 * a1.d1().d2() - dminus(a2);

  // Constant components of alpha produce zero right-hand sides; drop them so
  // the Poisson solve sees a clean mean-free source.
  rhs1.set_coeff(0, 0, 0.0);
  rhs2.set_coeff(0, 0, 0.0);

  return SymTensorField::from_tt_components(rhs1.solve_poisson(), rhs2.solve_poisson());
}

/// c_r(k,l) = (k^2 s^2 - l^2 r^2)/(k^2 s^2 + l^2 r^2), the multiplier produced
/// by the Poisson solve on the mode (k,l).
inline double c_constant(const TorusParameter& t, int k, int l) {
  if (k == 0 && l == 0) throw std::domain_error("c_constant: (0,0) has zero denominator");
  if (k < 0 || l < 0) throw std::domain_error("c_constant: frequencies must be >= 0");
  const double ks = static_cast<double>(k) * k * t.s * t.s;
  const double lr = static_cast<double>(l) * l * t.r * t.r;
  return (ks - lr) / (ks + lr);
}

}  // namespace cwt
