/**
 * \file report.hpp
 * \brief Tabular experiment reports with deterministic emission.
 *
 * A report is a list of rows {scenario, params, metric, value} plus
 * metadata (seed, tolerances, artifact version).  Emission is bit-stable
 * for a fixed report: fixed column order, floats at 17 significant
 * digits, no clocks or environment lookups.
 */

#ifndef HTLAB_REPORT_HPP
#define HTLAB_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "htlab/atoms.hpp"
#include "htlab/trigpoly.hpp"

namespace htlab {

inline constexpr const char* artifact_version = "0.1.0";

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ReportRow {
  std::string scenario;
  std::string params;
  std::string metric;
  double value = 0.0;
};

struct Report {
  std::vector<ReportRow> rows;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::string version = artifact_version;

  void add(const std::string& scenario, const std::string& params,
           const std::string& metric, double value) {
    rows.push_back({scenario, params, metric, value});
  }

  /** True when every "*_pass" row recorded 1. */
  bool all_checks_passed() const {
    for (const ReportRow& r : rows)
      if (r.metric.size() > 5 && r.metric.ends_with("_pass") && r.value != 1.0) return false;
    return true;
  }
};

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline void emit_csv(const Report& rep, std::ostream& out) {
  out << "scenario,params,metric,value\n";
  for (const ReportRow& r : rep.rows)
    out << detail::csv_escape(r.scenario) << ',' << detail::csv_escape(r.params) << ','
        << detail::csv_escape(r.metric) << ',' << format_double(r.value) << '\n';
}

inline nlohmann::ordered_json report_to_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["metadata"] = {{"seed", rep.seed},
                   {"tolerances", rep.tolerances},
                   {"version", rep.version}};
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rep.rows)
    j["rows"].push_back({{"scenario", r.scenario},
                         {"params", r.params},
                         {"metric", r.metric},
                         {"value", r.value}});
  return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
  Report rep;
  rep.seed = j.at("metadata").at("seed").get<std::uint64_t>();
  rep.version = j.at("metadata").at("version").get<std::string>();
  for (const auto& [k, v] : j.at("metadata").at("tolerances").items())
    rep.tolerances[k] = v.get<double>();
  for (const auto& row : j.at("rows"))
    rep.add(row.at("scenario").get<std::string>(), row.at("params").get<std::string>(),
            row.at("metric").get<std::string>(), row.at("value").get<double>());
  return rep;
}

inline Report load_report_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_report_json: cannot open " + path);
  nlohmann::ordered_json j;
  in >> j;
  return report_from_json(j);
}

// --- minimal standalone SVG line plots -----------------------------------

namespace detail {

inline void write_svg_series(const std::string& path, const std::string& title,
                             const std::vector<double>& xs, const std::vector<double>& ys) {
  const double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  double xmin = xs.front(), xmax = xs.front(), ymin = ys.front(), ymax = ys.front();
  for (double x : xs) { xmin = std::min(xmin, x); xmax = std::max(xmax, x); }
  for (double y : ys) { ymin = std::min(ymin, y); ymax = std::max(ymax, y); }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("plot: cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n"
      << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\""
      << H - B << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << L << "\" y=\"" << H - B + 18 << "\" font-size=\"11\">"
      << format_double(xmin) << "</text>\n"
      << "<text x=\"" << W - R << "\" y=\"" << H - B + 18
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(xmax) << "</text>\n"
      << "<text x=\"" << L - 6 << "\" y=\"" << H - B << "\" text-anchor=\"end\" font-size=\"11\">"
      << format_double(ymin) << "</text>\n"
      << "<text x=\"" << L - 6 << "\" y=\"" << T + 10
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(ymax) << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < xs.size(); ++i) out << px(xs[i]) << ',' << py(ys[i]) << ' ';
  out << "\"/>\n";
  for (size_t i = 0; i < xs.size(); ++i)
    out << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i])
        << "\" r=\"2.5\" fill=\"#1f6fb2\"/>\n";
  out << "</svg>\n";
}

inline std::string sanitize_filename(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

}  // namespace detail

/**
 * One SVG per (scenario, metric) pair with at least two rows, plotting
 * value against row order, next to the report path.
 */
inline std::vector<std::string> emit_plots(const Report& rep, const std::string& report_path) {
  std::map<std::pair<std::string, std::string>, std::vector<double>> series;
  for (const ReportRow& r : rep.rows) series[{r.scenario, r.metric}].push_back(r.value);
  std::string stem = report_path;
  const auto dot = stem.rfind('.');
  if (dot != std::string::npos && dot > stem.rfind('/') + 1) stem = stem.substr(0, dot);
  std::vector<std::string> written;
  for (const auto& [key, ys] : series) {
    if (ys.size() < 2) continue;
    std::vector<double> xs(ys.size());
    for (size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    const std::string path = stem + "_" + detail::sanitize_filename(key.first) + "_" +
                             detail::sanitize_filename(key.second) + ".svg";
    detail::write_svg_series(path, key.first + ": " + key.second, xs, ys);
    written.push_back(path);
  }
  return written;
}

/** Write the report in the requested format; returns the emitted paths. */
inline std::vector<std::string> emit(const Report& rep, const std::string& format,
                                     const std::string& path, bool plots = false) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument("emit: format must be csv or json");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open output path " + path);
  if (format == "csv") {
    emit_csv(rep, out);
  } else {
    out << report_to_json(rep).dump(2) << '\n';
  }
  if (!out) throw std::runtime_error("emit: write failed for " + path);
  std::vector<std::string> written{path};
  if (plots)
    for (std::string& p : emit_plots(rep, path)) written.push_back(std::move(p));
  return written;
}

// --- JSON forms of the domain types used by the harness -------------------

/** TrigPoly as {"frequency": [re, im]}. */
inline nlohmann::ordered_json trigpoly_to_json(const TrigPoly& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [n, c] : f.support())
    j[std::to_string(n)] = {c.real(), c.imag()};
  return j;
}

inline TrigPoly trigpoly_from_json(const nlohmann::ordered_json& j) {
  TrigPoly f;
  for (const auto& [k, v] : j.items())
    f.add(std::stoi(k), cplx(v.at(0).get<double>(), v.at(1).get<double>()));
  return f;
}

inline nlohmann::ordered_json atom_to_json(const Atom& a) {
  return {{"q", a.q},
          {"center", a.center},
          {"radius", a.radius},
          {"samples", a.samples}};
}

}  // namespace htlab

#endif  // HTLAB_REPORT_HPP
