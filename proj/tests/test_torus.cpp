#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cwt/torus.hpp"

using namespace cwt;

TEST_CASE("make_torus populates derived quantities") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const TorusParameter t = make_torus(inv_sqrt2);
  CHECK(t.s == doctest::Approx(inv_sqrt2).epsilon(1e-15));
  CHECK(t.b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.rho == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(t.area == doctest::Approx(4.0 * pi * pi * t.r * t.s));

  CHECK(make_torus(0.5).b == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(make_torus(std::sqrt(3.0) / 2.0).b == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  CHECK_THROWS_AS(make_torus(0.0), std::domain_error);
  CHECK_THROWS_AS(make_torus(1.0), std::domain_error);
  CHECK_THROWS_AS(make_torus(-0.2), std::domain_error);
  CHECK_THROWS_AS(make_torus(1.7), std::domain_error);
}

TEST_CASE("r^2 + s^2 = 1 across the range") {
  for (int i = 1; i < 1000; ++i) {
    const TorusParameter t = make_torus(i / 1000.0);
    CHECK(std::fabs(t.r * t.r + t.s * t.s - 1.0) <= 1e-15);
  }
}

TEST_CASE("geometric data of the Clifford tori") {
  const TorusParameter sq = make_torus(1.0 / std::sqrt(2.0));
  const GeometricData g0 = geometric_data(sq);
  CHECK(std::fabs(g0.h) <= 1e-15);
  CHECK(std::fabs(g0.wgrad) <= 1e-14);

  const TorusParameter t = make_torus(0.5);
  const GeometricData g = geometric_data(t);
  CHECK(g.a11 == doctest::Approx(-t.s / t.r));
  CHECK(g.a22 == doctest::Approx(t.r / t.s));
  CHECK(g.h == doctest::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g.atf == doctest::Approx(1.0 / (2.0 * t.r * t.s)));
}

TEST_CASE("closed-form Willmore energy") {
  CHECK(willmore_energy_clifford(make_torus(1.0 / std::sqrt(2.0))) ==
        doctest::Approx(2.0 * pi * pi).epsilon(1e-15));
  CHECK(willmore_energy_clifford(make_torus(0.5)) ==
        doctest::Approx(4.0 * pi * pi / std::sqrt(3.0)).epsilon(1e-14));
  for (double r : {0.15, 0.35, 0.6, 0.88}) {
    const TorusParameter t = make_torus(r);
    CHECK(willmore_energy_clifford(t) ==
          doctest::Approx(willmore_energy_clifford(make_torus(t.s))).epsilon(1e-13));
  }
}

TEST_CASE("constraint identities vanish") {
  for (double r : {1.0 / std::sqrt(2.0), 0.3, 0.9, 0.5, 0.7}) {
    const TorusParameter t = make_torus(r);
    const double scale = std::max(1.0, std::fabs(geometric_data(t).wgrad));
    CHECK(constrained_residual(t) <= 1e-14 * scale);
    CHECK(isothermic_residual(t) == 0.0);
  }
}

TEST_CASE("energy minimum sits at the square torus") {
  double best = 1e300, best_r = 0.0;
  const int n = 2000;
  for (int i = 1; i <= n; ++i) {
    const double r = static_cast<double>(i) / (n + 1);
    const double w = willmore_energy_clifford(make_torus(r));
    CHECK(w >= 2.0 * pi * pi - 1e-9);
    if (w < best) {
      best = w;
      best_r = r;
    }
  }
  CHECK(std::fabs(best_r - 1.0 / std::sqrt(2.0)) <= 1.0 / (n + 1));
}
