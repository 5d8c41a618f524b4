#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cwt/oracle.hpp"
#include "cwt/serialize.hpp"

using namespace cwt;

TEST_CASE("variation spec validation") {
  const TorusParameter t = make_torus(0.6);
  CHECK_THROWS_AS(VariationSpec(t, Direction::sine(2), 0.5, 3, 256), std::domain_error);
  CHECK_THROWS_AS(VariationSpec(t, Direction::sine(2), 1e-2, 0, 256), std::domain_error);
  CHECK_THROWS_AS(VariationSpec(t, Direction::sine(2), 1e-2, 3, 100), std::domain_error);
  CHECK_THROWS_AS(Direction::sine(0), std::domain_error);
  CHECK(Direction::cosine(0).kind == Direction::Kind::constant);
}

TEST_CASE("corrected_profile fixes the conformal class") {
  const TorusParameter t = make_torus(0.63);
  SUBCASE("t = 0 returns the flat profile with tau = 0") {
    double tau = 1.0;
    const Profile p = corrected_profile(VariationSpec(t, Direction::sine(2)), 0.0, &tau);
    CHECK(tau == 0.0);
    for (double g : p.values) CHECK(g == doctest::Approx(t.rho).epsilon(1e-15));
  }
  SUBCASE("constant direction corrects back to the flat profile") {
    const VariationSpec spec(t, Direction::constant());
    const double w0 = willmore_energy(clifford_profile(t, spec.n));
    for (double tt : {-spec.step, 0.5 * spec.step}) {
      double tau = 0.0;
      const Profile p = corrected_profile(spec, tt, &tau);
      CHECK(std::fabs(tau + tt) <= 1e-10);
      CHECK(std::fabs(willmore_energy(p) - w0) <= 1e-12 * w0);
    }
  }
  SUBCASE("tau is second order for mean-zero directions") {
    const VariationSpec spec(t, Direction::sine(2));
    double prev_ratio = 1.0;
    for (double tt : {1e-2, 5e-3, 2.5e-3}) {
      double tau = 0.0;
      corrected_profile(spec, tt, &tau);
      const double ratio = std::fabs(tau) / tt;
      CHECK(ratio <= 10.0 * tt);
      CHECK(ratio <= prev_ratio + 1e-12);
      prev_ratio = ratio;
    }
  }
  SUBCASE("constraint residual after correction") {
    const VariationSpec spec(t, Direction::sine(3));
    const double target = conformal_class(clifford_profile(t, spec.n));
    const Profile p = corrected_profile(spec, spec.step);
    CHECK(std::fabs(conformal_class(p) - target) <= 1e-12);
  }
  SUBCASE("unreachable constraint reports a correction failure") {
    // a strong high-frequency wiggle raises the class beyond what any uniform
    // shift inside the bracket can cancel (profiles stay inside (0, pi/2))
    const VariationSpec spec(make_torus(0.75), Direction::sine(32), 1e-2, 3, 256);
    CHECK_THROWS_AS(corrected_profile(spec, 0.06), correction_error);
    // swings that leave (0, pi/2) during bracketing are correction failures too
    const VariationSpec big(make_torus(0.9), Direction::sine(6), 1e-2, 3, 256);
    CHECK_THROWS_AS(corrected_profile(big, 0.35), correction_error);
  }
}

TEST_CASE("second variation oracle against the spectrum") {
  SUBCASE("stable point r = 1/sqrt(2), l = 2") {
    const TorusParameter t = make_torus(1.0 / std::sqrt(2.0));
    const OracleReport rep = second_variation_fd(VariationSpec(t, Direction::sine(2)));
    CHECK(rep.predicted == doctest::Approx(12.0 * pi * pi).epsilon(1e-12));
    CHECK(rep.rel_error <= 5e-3);
    CHECK(rep.constraint_residual <= 1e-12);
    CHECK(rep.converged);
    CHECK(!rep.inconsistent);
  }
  SUBCASE("zero mode l = 1") {
    const TorusParameter t = make_torus(1.0 / std::sqrt(2.0));
    const OracleReport rep = second_variation_fd(VariationSpec(t, Direction::sine(1)));
    CHECK(rep.predicted == 0.0);
    CHECK(std::fabs(rep.measured) <= std::max(10.0 * rep.error_bar, 1e-6));
  }
  SUBCASE("unstable point r = 0.4, l = 2") {
    const TorusParameter t = make_torus(0.4);
    const OracleReport rep = second_variation_fd(VariationSpec(t, Direction::sine(2)));
    CHECK(rep.measured < 0.0);
    CHECK(rep.rel_error <= 1e-2);
    CHECK(rep.predicted ==
          doctest::Approx(2.0 * pi * pi * t.r * t.s * eigenvalue(t, ModeIndex(0, 2)).e));
  }
  SUBCASE("verify_mode bundles sin and cos with sign expectations") {
    CHECK(verify_mode(make_torus(0.3), 2, 1e-2).pass);
    CHECK(verify_mode(make_torus(0.3), 3, 1e-2).pass);
    const ModeVerification pos = verify_mode(make_torus(0.3), 4, 1e-2);
    CHECK(pos.pass);
    CHECK(!pos.expected_negative);
    CHECK(pos.sin_report.measured > 0.0);
    const ModeVerification stable = verify_mode(make_torus(0.6), 2, 1e-2);
    CHECK(stable.pass);
    CHECK(stable.sin_report.measured > 0.0);
    CHECK_THROWS_AS(verify_mode(make_torus(0.6), 0, 1e-2), std::domain_error);
  }
  SUBCASE("sin/cos isotropy") {
    const ModeVerification mv = verify_mode(make_torus(0.45), 2, 1e-2);
    CHECK(std::fabs(mv.sin_report.measured - mv.cos_report.measured) <=
          1e-6 * std::max(1.0, std::fabs(mv.sin_report.measured)));
  }
}

TEST_CASE("first variation against the energy derivative") {
  for (double r : {0.3, 0.55, 0.8}) {
    const TorusParameter t = make_torus(r);
    const FirstVariationResult fv = first_variation_fd(t, Direction::constant());
    const double expect = -pi * pi * (t.r * t.r - t.s * t.s) / (t.r * t.r * t.s * t.s);
    const double scale = std::max(1.0, std::fabs(expect));
    CHECK(std::fabs(fv.measured - expect) <= 1e-10 * scale);
    CHECK(std::fabs(fv.predicted - expect) <= 1e-12 * scale);
    CHECK(std::fabs(first_variation_fd(t, Direction::sine(2)).measured) <= 1e-8);
    CHECK(std::fabs(first_variation_fd(t, Direction::cosine(3)).measured) <= 1e-8);
  }
  // the square torus is Willmore: every first variation vanishes
  const TorusParameter sq = make_torus(1.0 / std::sqrt(2.0));
  CHECK(std::fabs(first_variation_fd(sq, Direction::constant()).measured) <= 1e-9);
}

TEST_CASE("class-derivative constant adjudication and the multiplier quotient") {
  for (double r : {0.4, 1.0 / std::sqrt(2.0), 0.75}) {
    const TorusParameter t = make_torus(r);
    const DbReport rep = db_fd(t, Direction::constant());
    CHECK(rep.measured == doctest::Approx(1.0 / (t.r * t.r)).epsilon(1e-10));
    CHECK(rep.matched == "1/(4 pi^2 r^3 s)");
    CHECK(std::fabs(rep.lambda_quotient - rep.lambda_closed) <=
          1e-10 * std::max(1.0, std::fabs(rep.lambda_closed)));
  }
  const DbReport flat = db_fd(make_torus(0.5), Direction::sine(2));
  CHECK(std::fabs(flat.measured) <= 1e-10);
  CHECK(flat.matched == "degenerate (mean-zero direction)");
}

TEST_CASE("oracle report serialization") {
  const OracleReport rep =
      second_variation_fd(VariationSpec(make_torus(0.6), Direction::sine(2)));
  const json j = to_json(rep);
  CHECK(j.at("r").get<double>() == rep.r);
  CHECK(j.at("measured").get<double>() == rep.measured);
  CHECK(j.at("converged").get<bool>() == rep.converged);
  CHECK(j.at("tau_values").is_array());
  const std::string row = oracle_csv_row(rep);
  CHECK(row.find(',') != std::string::npos);
}
