// Acceptance suite: one pass/fail line per criterion, plus the remaining
// module invariants and the total runtime budget. Exit code 0 iff everything
// holds.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cwt/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* check_name;
  double budget_seconds;  // 0 = no individual budget
};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<cwt::verify::CheckResult> results = cwt::verify::run_all();
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::map<std::string, const cwt::verify::CheckResult*> by_name;
  for (const auto& res : results) by_name[res.name] = &res;

  const std::vector<Criterion> criteria = {
      {1, "stability interval [1/2, sqrt(3)/2] over 10^4 radii, roots to 1e-10",
       "spectrum.stability_interval", 5.0},
      {2, "Morse index staircase k = 1..6 with eigenspace multiplicities",
       "spectrum.morse_staircase", 1.0},
      {3, "zero modes E(1,0) = E(0,1) = E(1,1) = 0 to 1e-12", "spectrum.zero_modes", 0.0},
      {4, "cross-derivation identity lw - lambda*lb = E to 1e-10", "spectrum.cross_derivation",
       0.0},
      {5, "Poisson-solve constants match the closed form for k,l <= 16",
       "fourier.poisson_constants", 0.0},
      {6, "quadrature closed forms: energy to 1e-10, class to 1e-12",
       "revolution.closed_forms", 0.0},
      {7, "finite-difference oracle, stable point (r = 1/sqrt(2), l = 2, 0.5%)",
       "oracle.stable_point", 10.0},
      {8, "finite-difference oracle, unstable points (r = 0.4, 0.3; within 1%)",
       "oracle.unstable_points", 0.0},
      {9, "first-variation identity and multiplier quotient to 1e-10",
       "oracle.first_variation", 0.0},
      {10, "class-derivative constant adjudication", "oracle.factor_adjudication", 0.0},
      {11, "tensor derivative lemmas vs finite differences to 1e-8", "tensor.derivative_fd",
       0.0},
  };

  bool all = true;
  std::map<std::string, bool> used;
  for (const auto& c : criteria) {
    const auto* res = by_name.at(c.check_name);
    used[c.check_name] = true;
    bool pass = res->pass;
    std::string note = res->detail;
    if (pass && c.budget_seconds > 0.0 && res->seconds > c.budget_seconds) {
      pass = false;
      note += " [runtime budget exceeded]";
    }
    all = all && pass;
    std::printf("[%s] criterion %2d: %s (%.2fs)\n        %s\n", pass ? "PASS" : "FAIL", c.number,
                c.title, res->seconds, note.c_str());
  }

  for (const auto& res : results) {
    if (used.count(res.name)) continue;
    all = all && res.pass;
    std::printf("[%s] invariant: %s (%.2fs)\n        %s\n", res.pass ? "PASS" : "FAIL",
                res.name.c_str(), res.seconds, res.detail.c_str());
  }

  const bool budget = total < 60.0;
  all = all && budget;
  std::printf("[%s] full suite single-threaded runtime %.2fs < 60s\n", budget ? "PASS" : "FAIL",
              total);
  std::printf("%s\n", all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES");
  return all ? 0 : 1;
}
