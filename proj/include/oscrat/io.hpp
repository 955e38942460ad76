#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscrat/approx.hpp"
#include "oscrat/common.hpp"
#include "oscrat/oscillatory.hpp"
#include "oscrat/report.hpp"

namespace oscrat {

using json = nlohmann::json;

/// Expansion schema: {beta, j_min, j_max, coeffs: [[re, im], ...]}.
/// Doubles round-trip exactly through the shortest-representation dump.
inline json expansion_to_json(const RationalExpansion& e) {
  json coeffs = json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return json{{"beta", e.map().beta()},
              {"j_min", e.j_min()},
              {"j_max", e.j_max()},
              {"coeffs", std::move(coeffs)}};
}

inline RationalExpansion expansion_from_json(const json& j) {
  const MobiusMap map(j.at("beta").get<double>());
  const int j_min = j.at("j_min").get<int>();
  const int j_max = j.at("j_max").get<int>();
  std::vector<complex_t> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return RationalExpansion(map, j_min, j_max, std::move(coeffs));
}

/// Oscillatory schema: {beta, parts: [{wavenumber, expansion}, ...]}.
inline json oscillatory_to_json(const OscillatoryFunction& g) {
  json parts = json::array();
  for (const auto& p : g.parts()) {
    parts.push_back({{"wavenumber", p.wavenumber}, {"expansion", expansion_to_json(p.expansion)}});
  }
  return json{{"beta", g.map().beta()}, {"parts", std::move(parts)}};
}

inline OscillatoryFunction oscillatory_from_json(const json& j) {
  const MobiusMap map(j.at("beta").get<double>());
  OscillatoryFunction g(map);
  for (const auto& p : j.at("parts")) {
    g.add_part(p.at("wavenumber").get<double>(), expansion_from_json(p.at("expansion")));
  }
  return g;
}

inline json report_to_json(const ConvergenceReport& report, double beta,
                           const std::string& function_name) {
  json data = json::array();
  for (std::size_t i = 0; i < report.n_values.size(); ++i) {
    const auto& e = report.errors[i];
    data.push_back({{"n", report.n_values[i]},
                    {"sup", e.sup},
                    {"l2", e.l2},
                    {"h1", e.h1},
                    {"l1_derivative", e.l1_derivative}});
  }
  return json{{"meta", {{"beta", beta}, {"n", report.n_values}, {"function", function_name}}},
              {"data", std::move(data)},
              {"fitted_orders", report.fitted_orders}};
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << '\n';
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

/// Minimal CSV sink: a header row, then one record per line; complex values
/// are written by the caller as separate re/im columns.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    out_.precision(17);
  }

  void header(const std::vector<std::string>& columns) { write_row(columns); }

  void row(const std::vector<double>& values) {
    bool first = true;
    for (double v : values) {
      if (!first) out_ << ',';
      out_ << v;
      first = false;
    }
    out_ << '\n';
  }

 private:
  void write_row(const std::vector<std::string>& cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }

  std::ofstream out_;
};

}  // namespace oscrat
