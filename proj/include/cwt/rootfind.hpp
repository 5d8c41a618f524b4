#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace cwt {

/// Bisection on a sign-changing bracket [lo, hi], run until hi - lo <= tol_x.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double tol_x,
                     int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw std::domain_error("bisect: no sign change on bracket");
  for (int i = 0; i < max_iter && (hi - lo) > tol_x; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Newton iteration safeguarded by a sign-changing bracket: steps that leave
/// the bracket, or fail to shrink |f|, fall back to bisection. Converges when
/// |f(x)| <= tol_f.
inline double newton_safeguarded(const std::function<double(double)>& f,
                                 const std::function<double(double)>& df, double lo, double hi,
                                 double x0, double tol_f, int max_iter = 100) {
  double flo = f(lo), fhi = f(hi);
  if (std::fabs(flo) <= tol_f) return lo;
  if (std::fabs(fhi) <= tol_f) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::domain_error("newton_safeguarded: no sign change on bracket");
  double x = (x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
  double fx = f(x);
  for (int i = 0; i < max_iter; ++i) {
    if (std::fabs(fx) <= tol_f) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double dfx = df(x);
    double xn = (dfx != 0.0) ? x - fx / dfx : lo;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    const double fn = f(xn);
    if (std::fabs(fn) > 0.5 * std::fabs(fx)) {
      // slow progress; force a bisection step
      const double xb = 0.5 * (lo + hi);
      const double fb = f(xb);
      if (std::fabs(fb) < std::fabs(fn)) {
        x = xb;
        fx = fb;
        continue;
      }
    }
    x = xn;
    fx = fn;
  }
  return x;
}

}  // namespace cwt
