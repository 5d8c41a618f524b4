#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cwt/finite_difference.hpp"
#include "cwt/revolution.hpp"
#include "cwt/rootfind.hpp"
#include "cwt/spectrum.hpp"
#include "cwt/torus.hpp"

namespace cwt {

struct correction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Profile perturbation direction delta(v).
struct Direction {
  enum class Kind { sine, cosine, constant };
  Kind kind = Kind::constant;
  int l = 0;

  static Direction sine(int l) {
    if (l < 1) throw std::domain_error("Direction: sin requires l >= 1");
    return {Kind::sine, l};
  }
  static Direction cosine(int l) {
    if (l < 0) throw std::domain_error("Direction: l must be >= 0");
    if (l == 0) return constant();
    return {Kind::cosine, l};
  }
  static Direction constant() { return {Kind::constant, 0}; }

  double eval(double v) const {
    switch (kind) {
      case Kind::sine: return std::sin(l * v);
      case Kind::cosine: return std::cos(l * v);
      default: return 1.0;
    }
  }
  double mean() const { return kind == Kind::constant ? 1.0 : 0.0; }
  std::string name() const {
    switch (kind) {
      case Kind::sine: return "sin(" + std::to_string(l) + "v)";
      case Kind::cosine: return "cos(" + std::to_string(l) + "v)";
      default: return "const";
    }
  }
};

/// One finite-difference variation experiment around T_r.
struct VariationSpec {
  TorusParameter torus;
  Direction direction;
  double step = 1e-2;
  int richardson_levels = 3;
  int n = 256;

  VariationSpec(const TorusParameter& t, Direction dir) : torus(t), direction(dir) { validate(); }
  VariationSpec(const TorusParameter& t, Direction dir, double step_, int levels, int n_)
      : torus(t), direction(dir), step(step_), richardson_levels(levels), n(n_) {
    validate();
  }

  void validate() const {
    const double dist = std::min(torus.rho, 0.5 * pi - torus.rho);
    if (!(step > 0.0 && step < 0.1 * dist))
      throw std::domain_error("VariationSpec: step must lie in (0, 0.1*dist(rho,{0,pi/2}))");
    if (richardson_levels < 1 || richardson_levels > 12)
      throw std::domain_error("VariationSpec: richardson_levels out of range");
    if (n < 16 || !detail::is_power_of_two(n))
      throw std::domain_error("VariationSpec: n must be a power of two >= 16");
  }
};

/// Profile v -> tau(t) + rho + t*delta(v), where the uniform shift tau(t)
/// restores the conformal class to its Clifford value, located by safeguarded
/// Newton/bisection inside (-rho/2, (pi/2 - rho)/2). tau(0) = 0.
inline Profile corrected_profile(const VariationSpec& spec, double t, double* tau_out = nullptr) {
  const double rho = spec.torus.rho;
  const int n = spec.n;

  std::vector<double> delta(n), ddelta(n);
  for (int j = 0; j < n; ++j) {
    const double v = 2.0 * pi * j / n;
    delta[j] = spec.direction.eval(v);
    switch (spec.direction.kind) {
      case Direction::Kind::sine: ddelta[j] = spec.direction.l * std::cos(spec.direction.l * v); break;
      case Direction::Kind::cosine: ddelta[j] = -spec.direction.l * std::sin(spec.direction.l * v); break;
      default: ddelta[j] = 0.0;
    }
  }

  const double target = conformal_class(clifford_profile(spec.torus, n));

  auto build = [&](double tau) {
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = rho + tau + t * delta[j];
    return Profile(n, std::move(vals));
  };
  auto g = [&](double tau) {
    try {
      return conformal_class(build(tau)) - target;
    } catch (const geometry_error&) {
      throw correction_error("corrected_profile: family leaves (0, pi/2) inside the bracket");
    }
  };
  // d(omega)/d(tau) for a uniform shift; gamma' = t*delta' does not move.
  auto dg = [&](double tau) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double gam = rho + tau + t * delta[j];
      const double st = std::sin(gam), c = std::cos(gam);
      const double gp = t * ddelta[j];
      const double sq = std::sqrt(gp * gp + st * st);
      sum += st / sq + sq * st / (c * c);
    }
    return sum / n;
  };

  double tau = 0.0;
  if (t != 0.0) {
    const double lo = -0.5 * rho, hi = 0.5 * (0.5 * pi - rho);
    const double tol = 1e-14 * std::max(1.0, target);
    if ((g(lo) > 0.0) == (g(hi) > 0.0))
      throw correction_error("corrected_profile: constraint root not bracketed");
    tau = newton_safeguarded(g, dg, lo, hi, 0.0, tol);
  }
  if (tau_out) *tau_out = tau;
  return build(tau);
}

/// Finite-difference second variation of the Willmore energy along the
/// constraint-corrected family.
struct OracleReport {
  double r = 0.0;
  std::string direction;
  int l = 0;
  double predicted = 0.0;
  double measured = 0.0;
  double rel_error = 0.0;
  double constraint_residual = 0.0;
  double error_bar = 0.0;
  bool converged = false;
  bool inconsistent = false;
  std::vector<std::pair<double, double>> tau_values;  // (t, tau) per stencil point
};

inline OracleReport second_variation_fd(const VariationSpec& spec) {
  OracleReport rep;
  rep.r = spec.torus.r;
  rep.direction = spec.direction.name();
  rep.l = spec.direction.l;

  if (spec.direction.kind == Direction::Kind::constant) {
    rep.predicted = 0.0;  // the corrected family of a constant direction is stationary
  } else {
    const SpectrumEntry entry = eigenvalue(spec.torus, ModeIndex(0, spec.direction.l));
    // ||sin(lv) n||^2_{L^2} = 2 pi^2 r s
    rep.predicted = 2.0 * pi * pi * spec.torus.r * spec.torus.s * entry.e;
  }

  const double target = conformal_class(clifford_profile(spec.torus, spec.n));
  auto f = [&](double t) {
    double tau = 0.0;
    const Profile p = corrected_profile(spec, t, &tau);
    rep.tau_values.emplace_back(t, tau);
    rep.constraint_residual =
        std::max(rep.constraint_residual, std::fabs(conformal_class(p) - target));
    return willmore_energy(p);
  };
  const double floor = 1e-8 * std::max(1.0, std::fabs(rep.predicted));
  const FdResult fd = richardson_second(f, spec.step, spec.richardson_levels, floor);

  rep.measured = fd.value;
  rep.error_bar = fd.error_bar;
  rep.converged = fd.converged;
  rep.rel_error = std::fabs(rep.measured - rep.predicted) / std::max(1.0, std::fabs(rep.predicted));
  rep.inconsistent = std::fabs(rep.measured) < 1e-8 && std::fabs(rep.predicted) > 1e-4;
  return rep;
}

/// First variation of the energy along the uncorrected family rho + t*delta.
/// The velocity of +delta is -delta*n (the profile flow points against the
/// unit normal), so the prediction carries a minus sign:
///   d/dt W = -(1/2) * wgrad * int delta dmu.
struct FirstVariationResult {
  double measured = 0.0;
  double predicted = 0.0;
};

inline FirstVariationResult first_variation_fd(const TorusParameter& t, const Direction& dir,
                                               double step = 1e-3, int levels = 2, int n = 256) {
  FirstVariationResult res;
  auto f = [&](double tt) {
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = t.rho + tt * dir.eval(2.0 * pi * j / n);
    return willmore_energy(Profile(n, std::move(vals)));
  };
  res.measured = richardson_first(f, step, levels).value;
  res.predicted = -0.5 * geometric_data(t).wgrad * t.area * dir.mean();
  return res;
}

/// First variation of the conformal class, compared against the two candidate
/// constants for D(class)(phi) = C * int <phi, n> dmu: the chain-rule value
/// 1/(4 pi^2 r^3 s) and the alternative 1/(16 pi^2 r^3 s). For delta = const
/// the measurement is decisive and also reproduces the Lagrange multiplier
/// through lambda = ||W||^2 / (2 DB(W)).
struct DbReport {
  double measured = 0.0;
  double candidate_chain = 0.0;    // 1/(4 pi^2 r^3 s)
  double candidate_display = 0.0;  // 1/(16 pi^2 r^3 s)
  std::string matched;
  double lambda_quotient = std::numeric_limits<double>::quiet_NaN();
  double lambda_closed = 0.0;
};

inline DbReport db_fd(const TorusParameter& t, const Direction& dir, double step = 1e-3,
                      int levels = 2, int n = 256) {
  DbReport rep;
  auto f = [&](double tt) {
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = t.rho + tt * dir.eval(2.0 * pi * j / n);
    return conformal_class(Profile(n, std::move(vals)));
  };
  rep.measured = richardson_first(f, step, levels).value;

  // phi = -delta*n, so DB(phi) = -C*int<phi,n> = C * area * mean(delta).
  const double flux = t.area * dir.mean();
  rep.candidate_chain = flux / (4.0 * pi * pi * std::pow(t.r, 3) * t.s);
  rep.candidate_display = flux / (16.0 * pi * pi * std::pow(t.r, 3) * t.s);
  rep.lambda_closed = lagrange_multiplier(t);

  if (dir.mean() == 0.0) {
    rep.matched = "degenerate (mean-zero direction)";
  } else {
    auto close = [&](double cand) {
      return std::fabs(rep.measured - cand) <= 1e-6 * std::max(1.0, std::fabs(cand));
    };
    if (close(rep.candidate_chain))
      rep.matched = "1/(4 pi^2 r^3 s)";
    else if (close(rep.candidate_display))
      rep.matched = "1/(16 pi^2 r^3 s)";
    else
      rep.matched = "neither";
    // DB(n) = -measured for delta = const; lambda = ||W||^2/(2 DB(W)).
    const double wgrad = geometric_data(t).wgrad;
    rep.lambda_quotient = -wgrad * t.area / (2.0 * rep.measured);
  }
  return rep;
}

/// Runs second_variation_fd for both sin(lv) and cos(lv) and checks the match
/// against the spectrum, sign expectations, and rotational isotropy.
struct ModeVerification {
  OracleReport sin_report;
  OracleReport cos_report;
  bool expected_negative = false;
  bool pass = false;
  std::string diagnostics;
};

inline ModeVerification verify_mode(const TorusParameter& t, int l, double tolerance,
                                    double step = 1e-2, int levels = 3, int n = 256) {
  if (l < 1) throw std::domain_error("verify_mode: l must be >= 1");
  ModeVerification out;
  out.sin_report = second_variation_fd(VariationSpec(t, Direction::sine(l), step, levels, n));
  out.cos_report = second_variation_fd(VariationSpec(t, Direction::cosine(l), step, levels, n));
  out.expected_negative = l >= 2 && static_cast<double>(l) * l * t.r * t.r < 1.0;

  out.pass = true;
  auto fail = [&out](const std::string& msg) {
    out.pass = false;
    if (!out.diagnostics.empty()) out.diagnostics += "; ";
    out.diagnostics += msg;
  };
  for (const OracleReport* rep : {&out.sin_report, &out.cos_report}) {
    if (!rep->converged) fail(rep->direction + ": Richardson sequence not converged");
    if (rep->rel_error > tolerance) fail(rep->direction + ": relative error above tolerance");
    if (rep->constraint_residual > 1e-12) fail(rep->direction + ": constraint residual too large");
    if (rep->predicted == 0.0) {
      if (std::fabs(rep->measured) > std::max(10.0 * rep->error_bar, 1e-6))
        fail(rep->direction + ": zero mode above noise floor");
    } else if (out.expected_negative && !(rep->measured < 0.0)) {
      fail(rep->direction + ": expected a negative second variation");
    } else if (!out.expected_negative && rep->predicted > 0.0 && !(rep->measured > 0.0)) {
      fail(rep->direction + ": expected a positive second variation");
    }
  }
  const double iso = std::fabs(out.sin_report.measured - out.cos_report.measured);
  if (iso > 1e-6 * std::max({1.0, std::fabs(out.sin_report.measured),
                             std::fabs(out.cos_report.measured)}))
    fail("sin/cos isotropy violated");
  return out;
}

}  // namespace cwt
