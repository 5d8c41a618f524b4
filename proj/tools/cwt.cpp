// Command-line front end: spectrum queries, stability sweeps, threshold
// location, finite-difference oracle runs, and the invariant suite.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
//             3 numeric/geometry error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cwt/oracle.hpp"
#include "cwt/parallel.hpp"
#include "cwt/serialize.hpp"
#include "cwt/spectrum.hpp"
#include "cwt/verify.hpp"

namespace {

struct GridSpec {
  double start = 0.0, stop = 0.0;
  int count = 0;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char extra = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.count, &extra) != 3)
    throw CLI::ValidationError("--grid", "expected start:stop:count");
  if (g.count < 1) throw CLI::ValidationError("--grid", "count must be >= 1");
  if (!(g.start > 0.0 && g.stop < 1.0 && g.start <= g.stop))
    throw CLI::ValidationError("--grid", "need 0 < start <= stop < 1");
  return g;
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> rs(g.count);
  for (int i = 0; i < g.count; ++i)
    rs[i] = (g.count == 1) ? g.start : g.start + (g.stop - g.start) * i / (g.count - 1);
  return rs;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
  }
}

int cmd_spectrum(double r, int kmax, int lmax, const std::string& format,
                 const std::string& out_path) {
  const cwt::TorusParameter t = cwt::make_torus(r);
  std::vector<cwt::SpectrumEntry> entries;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 0; l <= lmax; ++l) {
      if (k == 0 && l == 0) continue;
      entries.push_back(cwt::eigenvalue(t, cwt::ModeIndex(k, l)));
    }
  if (format == "json") {
    cwt::json j{{"r", t.r}, {"b", t.b}, {"lambda", cwt::lagrange_multiplier(t)}};
    j["modes"] = cwt::json::array();
    for (const auto& e : entries) j["modes"].push_back(cwt::to_json(e));
    emit(j.dump(2), out_path);
  } else if (format == "csv") {
    std::ostringstream os;
    os << cwt::spectrum_csv_header() << '\n';
    for (const auto& e : entries) os << cwt::spectrum_csv_row(e) << '\n';
    emit(os.str(), out_path);
  } else {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "r = %.17g   b = %.17g   lambda = %.17g\n", t.r, t.b,
                  cwt::lagrange_multiplier(t));
    os << buf;
    os << "  k   l mult             c             m            lw            lb             N"
          "             E  sign\n";
    for (const auto& e : entries) {
      std::snprintf(buf, sizeof(buf), "%3d %3d %4d %13.6g %13.6g %13.6g %13.6g %13.6g %13.6g  %s\n",
                    e.mode.k, e.mode.l, e.mode.multiplicity(), e.c, e.laplace_symbol, e.lw, e.lb,
                    e.bigN, e.e, cwt::to_string(e.sign));
      os << buf;
    }
    emit(os.str(), out_path);
  }
  return 0;
}

std::string classify_text(const cwt::StabilityReport& rep) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "r = %.17g   b = %.17g   %s   morse index %d (weighted %d)\n",
                rep.r, rep.b, rep.stable ? "STABLE" : "UNSTABLE", rep.morse_index,
                rep.morse_index_weighted);
  os << buf;
  for (const auto& m : rep.negative_modes) {
    std::snprintf(buf, sizeof(buf), "  negative  (%d,%d)  E = %.12g  multiplicity %d\n", m.k, m.l,
                  m.e, m.multiplicity);
    os << buf;
  }
  for (const auto& m : rep.zero_modes) {
    std::snprintf(buf, sizeof(buf), "  zero      (%d,%d)  multiplicity %d\n", m.k, m.l,
                  m.multiplicity);
    os << buf;
  }
  return os.str();
}

int cmd_classify(double r, const std::string& format, const std::string& out_path) {
  const cwt::StabilityReport rep = cwt::morse_index(cwt::make_torus(r));
  if (format == "json")
    emit(cwt::to_json(rep).dump(2), out_path);
  else if (format == "csv")
    emit(cwt::sweep_csv_header() + "\n" + cwt::sweep_csv_row(rep) + "\n", out_path);
  else
    emit(classify_text(rep), out_path);
  return 0;
}

int cmd_sweep(const GridSpec& grid, const std::string& format, const std::string& out_path) {
  const std::vector<double> rs = grid_points(grid);
  const auto reports = cwt::parallel_map<cwt::StabilityReport>(
      static_cast<int>(rs.size()),
      [&rs](int i) { return cwt::morse_index(cwt::make_torus(rs[i])); });
  if (format == "svg") {
    emit(cwt::sweep_svg(reports, cwt::thresholds(8)), out_path);
  } else if (format == "json") {
    cwt::json j = cwt::json::array();
    for (const auto& rep : reports) j.push_back(cwt::to_json(rep));
    emit(j.dump(2), out_path);
  } else {
    std::ostringstream os;
    os << cwt::sweep_csv_header() << '\n';
    for (const auto& rep : reports) os << cwt::sweep_csv_row(rep) << '\n';
    emit(os.str(), out_path);
  }
  return 0;
}

int cmd_thresholds(int kmax, const std::string& format, const std::string& out_path) {
  const auto ths = cwt::thresholds(kmax);
  if (format == "json") {
    cwt::json j = cwt::json::array();
    for (const auto& th : ths) j.push_back(cwt::to_json(th));
    emit(j.dump(2), out_path);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "family,r_closed,r_bisection\n";
    for (const auto& th : ths)
      os << th.family << ',' << cwt::csv_num(th.r_closed) << ','
         << cwt::csv_num(th.r_bisection) << '\n';
    emit(os.str(), out_path);
  } else {
    std::ostringstream os;
    char buf[128];
    for (const auto& th : ths) {
      std::snprintf(buf, sizeof(buf), "%-6s  r = %.17g  (bisection %.17g)\n", th.family.c_str(),
                    th.r_closed, th.r_bisection);
      os << buf;
    }
    emit(os.str(), out_path);
  }
  return 0;
}

std::string oracle_text(const cwt::ModeVerification& mv) {
  std::ostringstream os;
  char buf[256];
  for (const cwt::OracleReport* rep : {&mv.sin_report, &mv.cos_report}) {
    std::snprintf(buf, sizeof(buf),
                  "%-9s predicted %16.10g  measured %16.10g  rel %9.3g  residual %9.3g  %s\n",
                  rep->direction.c_str(), rep->predicted, rep->measured, rep->rel_error,
                  rep->constraint_residual, rep->converged ? "converged" : "NOT CONVERGED");
    os << buf;
  }
  os << (mv.pass ? "PASS" : "FAIL: " + mv.diagnostics) << '\n';
  return os.str();
}

int cmd_oracle(std::optional<double> r, std::optional<GridSpec> grid, int l, int n, double step,
               int levels, double tol, const std::string& format, const std::string& out_path) {
  if (grid) {
    const std::vector<double> rs = grid_points(*grid);
    const auto runs = cwt::parallel_map<cwt::ModeVerification>(
        static_cast<int>(rs.size()), [&](int i) {
          try {
            return cwt::verify_mode(cwt::make_torus(rs[i]), l, tol, step, levels, n);
          } catch (const std::exception& e) {
            cwt::ModeVerification mv;
            mv.sin_report.r = mv.cos_report.r = rs[i];
            mv.pass = false;
            mv.diagnostics = e.what();
            return mv;
          }
        });
    bool all = true;
    std::ostringstream os;
    cwt::json j = cwt::json::array();
    if (format != "json") os << cwt::oracle_csv_header() << '\n';
    for (const auto& mv : runs) {
      all = all && mv.pass;
      if (format == "json") {
        j.push_back(cwt::json{{"sin", cwt::to_json(mv.sin_report)},
                              {"cos", cwt::to_json(mv.cos_report)},
                              {"pass", mv.pass},
                              {"diagnostics", mv.diagnostics}});
      } else {
        os << cwt::oracle_csv_row(mv.sin_report) << '\n'
           << cwt::oracle_csv_row(mv.cos_report) << '\n';
      }
    }
    emit(format == "json" ? j.dump(2) : os.str(), out_path);
    return all ? 0 : 2;
  }
  const cwt::ModeVerification mv = cwt::verify_mode(cwt::make_torus(*r), l, tol, step, levels, n);
  if (format == "json") {
    emit(cwt::json{{"sin", cwt::to_json(mv.sin_report)},
                   {"cos", cwt::to_json(mv.cos_report)},
                   {"pass", mv.pass},
                   {"diagnostics", mv.diagnostics}}
             .dump(2),
         out_path);
  } else if (format == "csv") {
    emit(cwt::oracle_csv_header() + "\n" + cwt::oracle_csv_row(mv.sin_report) + "\n" +
             cwt::oracle_csv_row(mv.cos_report) + "\n",
         out_path);
  } else {
    emit(oracle_text(mv), out_path);
  }
  return mv.pass ? 0 : 2;
}

int cmd_verify(bool as_json, const std::string& out_path) {
  const auto results = cwt::verify::run_all();
  bool all = true;
  double total = 0.0;
  for (const auto& res : results) {
    all = all && res.pass;
    total += res.seconds;
  }
  if (as_json) {
    cwt::json j{{"all_pass", all}, {"total_seconds", total}};
    j["checks"] = cwt::json::array();
    for (const auto& res : results)
      j["checks"].push_back(cwt::json{{"name", res.name},
                                      {"pass", res.pass},
                                      {"detail", res.detail},
                                      {"seconds", res.seconds}});
    emit(j.dump(2), out_path);
  } else {
    std::ostringstream os;
    char buf[512];
    for (const auto& res : results) {
      std::snprintf(buf, sizeof(buf), "[%s] %-34s %6.2fs  %s\n", res.pass ? "PASS" : "FAIL",
                    res.name.c_str(), res.seconds, res.detail.c_str());
      os << buf;
    }
    std::snprintf(buf, sizeof(buf), "%s (%zu checks, %.2fs)\n", all ? "ALL PASS" : "FAILURES",
                  results.size(), total);
    os << buf;
    emit(os.str(), out_path);
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained-Willmore stability of the CMC Clifford tori"};
  app.require_subcommand(1);

  std::string format = "text", out_path;
  double r = 0.0;
  int kmax = 3, lmax = 3, l = 2, n = 256, levels = 3;
  double step = 1e-2, tol = 1e-2;
  std::string grid_str;
  bool json_flag = false;

  auto add_common = [&](CLI::App* sub, bool with_svg) {
    sub->add_option("--format", format,
                    with_svg ? "output format {text,json,csv,svg}" : "output format {text,json,csv}")
        ->check(CLI::IsMember(with_svg ? std::vector<std::string>{"text", "json", "csv", "svg"}
                                       : std::vector<std::string>{"text", "json", "csv"}));
    sub->add_option("--out", out_path, "write output to PATH instead of stdout");
  };

  CLI::App* sp = app.add_subcommand("spectrum", "eigenvalues E(k,l;r) for modes up to kmax, lmax");
  sp->add_option("--r", r, "torus radius in (0,1)")->required();
  sp->add_option("--kmax", kmax, "largest u-frequency (default 3)");
  sp->add_option("--lmax", lmax, "largest v-frequency (default 3)");
  add_common(sp, false);

  CLI::App* cl = app.add_subcommand("classify", "stability classification of one torus");
  cl->add_option("--r", r, "torus radius in (0,1)")->required();
  add_common(cl, false);

  CLI::App* sw = app.add_subcommand("sweep", "stability sweep over an r-grid");
  sw->add_option("--grid", grid_str, "r-grid start:stop:count")->required();
  add_common(sw, true);

  CLI::App* th = app.add_subcommand("thresholds", "zero crossings of the mode families");
  th->add_option("--kmax", kmax, "largest family index (default 3)");
  add_common(th, false);

  CLI::App* orc = app.add_subcommand("oracle", "finite-difference second-variation check");
  orc->add_option("--r", r, "torus radius in (0,1)");
  orc->add_option("--grid", grid_str, "batch r-grid start:stop:count");
  orc->add_option("--l", l, "profile frequency (default 2)");
  orc->add_option("--n", n, "profile samples, power of two (default 256)");
  orc->add_option("--step", step, "base finite-difference step (default 1e-2)");
  orc->add_option("--levels", levels, "Richardson levels (default 3)");
  orc->add_option("--tol", tol, "relative tolerance (default 1e-2)");
  add_common(orc, false);

  CLI::App* vf = app.add_subcommand("verify", "run the full invariant suite");
  vf->add_flag("--json", json_flag, "machine-readable report");
  vf->add_option("--out", out_path, "write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(r, kmax, lmax, format, out_path);
    if (cl->parsed()) return cmd_classify(r, format, out_path);
    if (sw->parsed()) return cmd_sweep(parse_grid(grid_str), format, out_path);
    if (th->parsed()) return cmd_thresholds(kmax, format, out_path);
    if (orc->parsed()) {
      std::optional<GridSpec> grid;
      std::optional<double> rr;
      if (!grid_str.empty()) grid = parse_grid(grid_str);
      if (orc->count("--r") > 0) rr = r;
      if (!grid && !rr) {
        std::cerr << "oracle: either --r or --grid is required\n";
        return 1;
      }
      return cmd_oracle(rr, grid, l, n, step, levels, tol, format, out_path);
    }
    if (vf->parsed()) return cmd_verify(json_flag, out_path);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
