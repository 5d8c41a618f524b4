#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwt/oracle.hpp"
#include "cwt/revolution.hpp"
#include "cwt/spectrum.hpp"

namespace cwt {

using json = nlohmann::ordered_json;

/// CSV numbers use 12 significant digits; JSON keeps full double precision.
inline std::string csv_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline json to_json(const SpectrumEntry& e) {
  return json{{"k", e.mode.k},
              {"l", e.mode.l},
              {"multiplicity", e.mode.multiplicity()},
              {"c", e.c},
              {"laplace_symbol", e.laplace_symbol},
              {"lw", e.lw},
              {"lb", e.lb},
              {"lambda", e.lambda},
              {"N", e.bigN},
              {"E", e.e},
              {"sign", to_string(e.sign)}};
}

inline std::string spectrum_csv_header() {
  return "k,l,multiplicity,c,laplace_symbol,lw,lb,lambda,N,E,sign";
}

inline std::string spectrum_csv_row(const SpectrumEntry& e) {
  std::ostringstream os;
  os << e.mode.k << ',' << e.mode.l << ',' << e.mode.multiplicity() << ',' << csv_num(e.c) << ','
     << csv_num(e.laplace_symbol) << ',' << csv_num(e.lw) << ',' << csv_num(e.lb) << ','
     << csv_num(e.lambda) << ',' << csv_num(e.bigN) << ',' << csv_num(e.e) << ','
     << to_string(e.sign);
  return os.str();
}

inline json to_json(const StabilityReport& rep) {
  json neg = json::array(), zero = json::array();
  for (const auto& m : rep.negative_modes)
    neg.push_back(json{{"k", m.k}, {"l", m.l}, {"E", m.e}, {"multiplicity", m.multiplicity}});
  for (const auto& m : rep.zero_modes)
    zero.push_back(json{{"k", m.k}, {"l", m.l}, {"E", m.e}, {"multiplicity", m.multiplicity}});
  return json{{"r", rep.r},
              {"b", rep.b},
              {"stable", rep.stable},
              {"morse_index", rep.morse_index},
              {"morse_index_weighted", rep.morse_index_weighted},
              {"negative_modes", neg},
              {"zero_modes", zero}};
}

inline std::string sweep_csv_header() { return "r,b,stable,morse_index,morse_index_weighted"; }

inline std::string sweep_csv_row(const StabilityReport& rep) {
  std::ostringstream os;
  os << csv_num(rep.r) << ',' << csv_num(rep.b) << ',' << (rep.stable ? 1 : 0) << ','
     << rep.morse_index << ',' << rep.morse_index_weighted;
  return os.str();
}

inline json to_json(const OracleReport& rep) {
  json taus = json::array();
  for (const auto& [t, tau] : rep.tau_values) taus.push_back(json{{"t", t}, {"tau", tau}});
  return json{{"r", rep.r},
              {"direction", rep.direction},
              {"l", rep.l},
              {"predicted", rep.predicted},
              {"measured", rep.measured},
              {"rel_error", rep.rel_error},
              {"constraint_residual", rep.constraint_residual},
              {"error_bar", rep.error_bar},
              {"converged", rep.converged},
              {"inconsistent", rep.inconsistent},
              {"tau_values", taus}};
}

inline std::string oracle_csv_header() { return "r,l,predicted,measured,rel_error,converged"; }

inline std::string oracle_csv_row(const OracleReport& rep) {
  std::ostringstream os;
  os << csv_num(rep.r) << ',' << rep.l << ',' << csv_num(rep.predicted) << ','
     << csv_num(rep.measured) << ',' << csv_num(rep.rel_error) << ','
     << (rep.converged ? 1 : 0);
  return os.str();
}

inline json to_json(const DbReport& rep) {
  return json{{"measured", rep.measured},
              {"candidate_chain", rep.candidate_chain},
              {"candidate_display", rep.candidate_display},
              {"matched", rep.matched},
              {"lambda_quotient", rep.lambda_quotient},
              {"lambda_closed", rep.lambda_closed}};
}

inline json to_json(const Threshold& th) {
  return json{{"family", th.family}, {"r_closed", th.r_closed}, {"r_bisection", th.r_bisection}};
}

inline json to_json(const Profile& p) { return json{{"n", p.n}, {"samples", p.values}}; }

inline Profile profile_from_json(const json& j) {
  return Profile(j.at("n").get<int>(), j.at("samples").get<std::vector<double>>());
}

inline std::string surface_csv(const SurfaceData& d) {
  std::ostringstream os;
  os << "v,gamma,E,G,h\n";
  for (int j = 0; j < d.n; ++j)
    os << csv_num(d.v[j]) << ',' << csv_num(d.gamma[j]) << ',' << csv_num(d.E[j]) << ','
       << csv_num(d.G[j]) << ',' << csv_num(d.h[j]) << '\n';
  return os.str();
}

/// Static stability diagram: Morse-index staircase over r, stable band, and
/// threshold lines at r = 1/l and r = sqrt(k^2-1)/k.
inline std::string sweep_svg(const std::vector<StabilityReport>& reports,
                             const std::vector<Threshold>& marks) {
  const double w = 820.0, hgt = 420.0, mlft = 60.0, mbot = 50.0, mtop = 20.0, mrgt = 20.0;
  double rmin = 1.0, rmax = 0.0;
  int imax = 1;
  for (const auto& rep : reports) {
    rmin = std::min(rmin, rep.r);
    rmax = std::max(rmax, rep.r);
    imax = std::max(imax, rep.morse_index);
  }
  if (reports.empty()) {
    rmin = 0.0;
    rmax = 1.0;
  }
  auto X = [&](double r) { return mlft + (r - rmin) / (rmax - rmin) * (w - mlft - mrgt); };
  auto Y = [&](double idx) { return hgt - mbot - idx / (imax + 0.5) * (hgt - mbot - mtop); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
     << "\" height=\"" << hgt << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // stable band [1/2, sqrt(3)/2]
  const double b0 = std::max(rmin, 0.5), b1 = std::min(rmax, std::sqrt(3.0) / 2.0);
  if (b1 > b0)
    os << "<rect x=\"" << X(b0) << "\" y=\"" << mtop << "\" width=\"" << X(b1) - X(b0)
       << "\" height=\"" << hgt - mtop - mbot << "\" fill=\"#d8f0d8\"/>\n";
  for (const auto& th : marks) {
    if (th.r_closed < rmin || th.r_closed > rmax) continue;
    os << "<line x1=\"" << X(th.r_closed) << "\" y1=\"" << mtop << "\" x2=\"" << X(th.r_closed)
       << "\" y2=\"" << hgt - mbot
       << "\" stroke=\"#888888\" stroke-dasharray=\"4,3\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << X(th.r_closed) + 3 << "\" y=\"" << mtop + 12
       << "\" font-size=\"10\" fill=\"#555555\">" << th.family << "</text>\n";
  }
  // axes
  os << "<line x1=\"" << mlft << "\" y1=\"" << hgt - mbot << "\" x2=\"" << w - mrgt << "\" y2=\""
     << hgt - mbot << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << mlft << "\" y1=\"" << mtop << "\" x2=\"" << mlft << "\" y2=\""
     << hgt - mbot << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << (w / 2) << "\" y=\"" << hgt - 12
     << "\" font-size=\"13\" text-anchor=\"middle\">r</text>\n";
  os << "<text x=\"16\" y=\"" << (hgt / 2)
     << "\" font-size=\"13\" transform=\"rotate(-90 16 " << (hgt / 2)
     << ")\" text-anchor=\"middle\">Morse index</text>\n";
  for (int i = 0; i <= imax; ++i)
    os << "<text x=\"" << mlft - 8 << "\" y=\"" << Y(i) + 4
       << "\" font-size=\"10\" text-anchor=\"end\">" << i << "</text>\n";
  // staircase
  if (!reports.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#c02020\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i > 0 && reports[i].morse_index != reports[i - 1].morse_index)
        os << X(reports[i].r) << ',' << Y(reports[i - 1].morse_index) << ' ';
      os << X(reports[i].r) << ',' << Y(reports[i].morse_index) << ' ';
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cwt
