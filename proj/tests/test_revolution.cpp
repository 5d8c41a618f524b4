#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cwt/revolution.hpp"
#include "cwt/serialize.hpp"

using namespace cwt;

TEST_CASE("clifford_profile samples the latitude") {
  CHECK(clifford_profile(make_torus(1.0 / std::sqrt(2.0)), 64).values[10] ==
        doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(clifford_profile(make_torus(0.5), 64).values[0] ==
        doctest::Approx(pi / 3.0).epsilon(1e-15));
  CHECK(clifford_profile(make_torus(std::sqrt(3.0) / 2.0), 64).values[0] ==
        doctest::Approx(pi / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(clifford_profile(make_torus(0.5), 48), std::invalid_argument);
  CHECK_THROWS_AS(clifford_profile(make_torus(0.5), 8), std::invalid_argument);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(Profile(32, std::vector<double>(32, -0.1)), geometry_error);
  CHECK_THROWS_AS(Profile(32, std::vector<double>(32, 2.0)), geometry_error);
  CHECK_THROWS_AS(Profile(32, std::vector<double>(16, 0.5)), std::invalid_argument);
  // samples inside (0, pi/2) but within 1e-6 of the axis degenerate the chart
  const Profile close(32, std::vector<double>(32, 1e-7));
  CHECK_THROWS_AS(surface_data(close), geometry_error);
  CHECK_THROWS_AS(conformal_class(close), geometry_error);
}

TEST_CASE("surface data of a constant profile matches the torus") {
  for (double r : {0.3, 0.5, 1.0 / std::sqrt(2.0), 0.85}) {
    const TorusParameter t = make_torus(r);
    const SurfaceData d = surface_data(clifford_profile(t, 128));
    const double h_expect = geometric_data(t).h;
    CHECK(d.max_sphere_residual <= 1e-14);
    CHECK(d.max_orthogonality_residual <= 1e-12);
    CHECK(d.max_f_residual <= 1e-14);
    for (int j = 0; j < d.n; j += 17) {
      CHECK(d.E[j] == doctest::Approx(t.r * t.r).epsilon(1e-14));
      CHECK(d.G[j] == doctest::Approx(t.s * t.s).epsilon(1e-14));
      CHECK(d.h[j] == doctest::Approx(h_expect).epsilon(1e-12).scale(1.0));
      CHECK(d.a12[j] == 0.0);
      // normal equals (s e^{iu}, -r e^{iv}) at u = 0
      CHECK(d.normal[j][0] == doctest::Approx(t.s).epsilon(1e-13));
      CHECK(d.normal[j][1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
      CHECK(d.normal[j][2] == doctest::Approx(-t.r * std::cos(d.v[j])).scale(1.0).epsilon(1e-13));
      CHECK(d.normal[j][3] == doctest::Approx(-t.r * std::sin(d.v[j])).scale(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("Willmore energy and conformal class closed forms on constant profiles") {
  CHECK(willmore_energy(clifford_profile(make_torus(1.0 / std::sqrt(2.0)), 256)) ==
        doctest::Approx(2.0 * pi * pi).epsilon(1e-13));
  const TorusParameter t3 = make_torus(0.3);
  CHECK(willmore_energy(clifford_profile(t3, 256)) ==
        doctest::Approx(pi * pi / (0.3 * std::sqrt(0.91))).epsilon(1e-12));
  for (int i = 1; i <= 40; ++i) {
    const TorusParameter t = make_torus(0.05 + 0.9 * (i - 1) / 39.0);
    CHECK(std::fabs(willmore_energy(clifford_profile(t, 256)) - pi * pi / (t.r * t.s)) <= 1e-10);
    CHECK(std::fabs(conformal_class(clifford_profile(t, 256)) - t.s / t.r) <= 1e-12);
  }
  CHECK(conformal_class(clifford_profile(make_torus(1.0 / std::sqrt(2.0)), 256)) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trapezoid quadrature is spectrally accurate on analytic profiles") {
  const TorusParameter t = make_torus(0.55);
  auto wiggly = [&](int n) {
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = t.rho + 0.05 * std::sin(2.0 * (2.0 * pi * j / n));
    return Profile(n, std::move(vals));
  };
  CHECK(std::fabs(willmore_energy(wiggly(64)) - willmore_energy(wiggly(128))) < 1e-10);
}

TEST_CASE("cyclic sample shifts leave the integrals unchanged") {
  const TorusParameter t = make_torus(0.62);
  const int n = 128;
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j)
    vals[j] = t.rho + 0.04 * std::sin(3.0 * (2.0 * pi * j / n)) +
              0.02 * std::cos(2.0 * pi * j / n);
  for (int shift : {1, 5, 64}) {
    std::vector<double> shifted(n);
    for (int j = 0; j < n; ++j) shifted[j] = vals[(j + shift) % n];
    CHECK(std::fabs(willmore_energy(Profile(n, vals)) - willmore_energy(Profile(n, shifted))) <=
          1e-12);
    CHECK(std::fabs(conformal_class(Profile(n, vals)) - conformal_class(Profile(n, shifted))) <=
          1e-12);
  }
}

TEST_CASE("profile JSON round trip") {
  const TorusParameter t = make_torus(0.44);
  const int n = 32;
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = t.rho + 0.03 * std::sin(2.0 * pi * j / n);
  const Profile p(n, vals);
  const json j = to_json(p);
  const Profile q = profile_from_json(json::parse(j.dump()));
  REQUIRE(q.n == p.n);
  for (int i = 0; i < n; ++i) CHECK(q.values[i] == p.values[i]);
}

TEST_CASE("surface CSV export carries the documented columns") {
  const SurfaceData d = surface_data(clifford_profile(make_torus(0.5), 16));
  const std::string csv = surface_csv(d);
  CHECK(csv.rfind("v,gamma,E,G,h\n", 0) == 0);
  size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 17);  // header + 16 samples
}
