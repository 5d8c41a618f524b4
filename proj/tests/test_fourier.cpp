#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cwt/fourier.hpp"

using namespace cwt;

namespace {

FourierField random_field(const TorusParameter& t, int kmax, int lmax, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  FourierField f(t);
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l)
      for (Parity pu : {Parity::cos, Parity::sin})
        for (Parity pv : {Parity::cos, Parity::sin}) {
          if ((k == 0 && pu == Parity::sin) || (l == 0 && pv == Parity::sin)) continue;
          f += u(rng) * FourierField::basis(t, k, l, pu, pv);
        }
  return f;
}

// trapezoid quadrature on a periodic grid; exact for trig polynomials whose
// frequencies stay below the grid Nyquist, so it is an independent route to
// the L^2 pairing.
double grid_inner(const FourierField& a, const FourierField& b, int nu = 64, int nv = 64) {
  const double lu = 2.0 * pi * a.r(), lv = 2.0 * pi * a.s();
  double acc = 0.0;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      const double u = lu * i / nu, v = lv * j / nv;
      acc += a.eval(u, v) * b.eval(u, v);
    }
  return acc * (lu / nu) * (lv / nv);
}

}  // namespace

TEST_CASE("basis functions evaluate to the advertised trig products") {
  const TorusParameter t = make_torus(0.6);
  const FourierField f = FourierField::basis(t, 3, 2, Parity::cos, Parity::sin);
  for (double u : {0.1, 1.7, 3.9})
    for (double v : {0.2, 2.8}) {
      const double expect = std::cos(3.0 * u / t.r) * std::sin(2.0 * v / t.s);
      CHECK(f.eval(u, v) == doctest::Approx(expect).epsilon(1e-14));
    }
  CHECK_THROWS_AS(FourierField::basis(t, 0, 2, Parity::sin, Parity::cos), std::domain_error);
  CHECK_THROWS_AS(FourierField::basis(t, 1, 0, Parity::cos, Parity::sin), std::domain_error);
}

TEST_CASE("products agree pointwise with evaluated factors") {
  const TorusParameter t = make_torus(0.43);
  std::mt19937 rng(123);
  for (int trial = 0; trial < 3; ++trial) {
    const FourierField f = random_field(t, 2, 2, rng);
    const FourierField g = random_field(t, 2, 2, rng);
    const FourierField fg = f * g;
    for (double u : {0.3, 2.1})
      for (double v : {0.9, 4.4})
        CHECK(fg.eval(u, v) == doctest::Approx(f.eval(u, v) * g.eval(u, v)).epsilon(1e-12));
  }
}

TEST_CASE("derivatives are diagonal multipliers") {
  const TorusParameter t = make_torus(0.71);
  const FourierField f = FourierField::basis(t, 2, 3, Parity::sin, Parity::cos);
  // d/du sin(2u/r)cos(3v/s) = (2/r) cos(2u/r) cos(3v/s)
  const FourierField expect1 =
      (2.0 / t.r) * FourierField::basis(t, 2, 3, Parity::cos, Parity::cos);
  CHECK((f.d1() - expect1).max_abs_coeff() <= 1e-15);
  const FourierField expect2 =
      (-3.0 / t.s) * FourierField::basis(t, 2, 3, Parity::sin, Parity::sin);
  CHECK((f.d2() - expect2).max_abs_coeff() <= 1e-15);

  // integration by parts: <f', g> = -<f, g'>
  std::mt19937 rng(99);
  const FourierField a = random_field(t, 3, 3, rng);
  const FourierField b = random_field(t, 3, 3, rng);
  CHECK(l2_inner(a.d1(), b) == doctest::Approx(-l2_inner(a, b.d1())).epsilon(1e-12));
  CHECK(l2_inner(a.d2(), b) == doctest::Approx(-l2_inner(a, b.d2())).epsilon(1e-12));
}

TEST_CASE("Parseval pairing matches grid quadrature") {
  const TorusParameter t = make_torus(0.38);
  std::mt19937 rng(2024);
  const FourierField a = random_field(t, 3, 3, rng);
  const FourierField b = random_field(t, 3, 3, rng);
  const double direct = grid_inner(a, b);
  CHECK(l2_inner(a, b) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(l2_norm2(a) == doctest::Approx(grid_inner(a, a)).epsilon(1e-12));
  CHECK(a.integral() == doctest::Approx(grid_inner(a, FourierField::constant(t, 1.0))).epsilon(1e-12));
}

TEST_CASE("Poisson solve inverts the Laplacian on mean-free fields") {
  const TorusParameter t = make_torus(0.52);
  std::mt19937 rng(7);
  FourierField f = random_field(t, 3, 3, rng);
  f.set_coeff(0, 0, 0.0);
  const FourierField u = f.solve_poisson();
  CHECK((u.laplacian() - f).max_abs_coeff() <= 1e-13);
  CHECK(std::fabs(u.mean()) == 0.0);

  FourierField bad = f + FourierField::constant(t, 0.5);
  CHECK_THROWS_AS(bad.solve_poisson(), std::domain_error);
}

TEST_CASE("mismatched tori are rejected") {
  const FourierField a = FourierField::basis(make_torus(0.5), 1, 1, Parity::cos, Parity::cos);
  const FourierField b = FourierField::basis(make_torus(0.6), 1, 1, Parity::cos, Parity::cos);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(l2_inner(a, b), std::invalid_argument);
}
