// Command line harness: fits rational expansions to the built-in reference
// functions and emits transforms, boundary values, derivatives, convergence
// reports and kernel-norm sweeps as CSV/JSON.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "oscrat/oscrat.hpp"

namespace {

using oscrat::complex_t;

// "start:stop:step", "start:stop:dyadic" or a single value, stop inclusive.
std::vector<int> parse_int_range(const std::string& spec) {
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) return {std::stoi(spec)};
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw CLI::ValidationError("range", "expected start:stop:step");
  const int start = std::stoi(spec.substr(0, c1));
  const int stop = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
  const std::string step = spec.substr(c2 + 1);
  std::vector<int> out;
  if (step == "dyadic") {
    for (int n = start; n <= stop; n *= 2) out.push_back(n);
  } else {
    const int inc = std::stoi(step);
    if (inc <= 0) throw CLI::ValidationError("range", "step must be positive");
    for (int n = start; n <= stop; n += inc) out.push_back(n);
  }
  if (out.empty()) throw CLI::ValidationError("range", "empty range");
  return out;
}

std::vector<double> parse_real_range(const std::string& spec) {
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) return {std::stod(spec)};
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw CLI::ValidationError("range", "expected start:stop:step");
  const double start = std::stod(spec.substr(0, c1));
  const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(spec.substr(c2 + 1));
  if (step <= 0.0) throw CLI::ValidationError("range", "step must be positive");
  std::vector<double> out;
  for (double v = start; v <= stop + 0.5 * step; v += step) out.push_back(v);
  return out;
}

std::vector<double> parse_real_list(const std::string& spec) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    out.push_back(std::stod(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  for (double v : parse_real_list(spec)) out.push_back(static_cast<int>(v));
  return out;
}

struct CommonArgs {
  std::string function = "gaussian";
  double beta = 1.0;
  std::string out;
};

int cmd_approx(const CommonArgs& common, int n, bool check_roundtrip) {
  const oscrat::MobiusMap map(common.beta);
  const auto reference = oscrat::make_test_case(common.function, map);
  const auto g = oscrat::approximate(reference, n, map);
  oscrat::json payload;
  if (g.parts().size() == 1 && g.parts()[0].wavenumber == 0.0) {
    payload = oscrat::expansion_to_json(g.parts()[0].expansion);
  } else {
    payload = oscrat::oscillatory_to_json(g);
  }
  oscrat::write_json_file(common.out, payload);
  if (check_roundtrip) {
    const auto loaded = oscrat::read_json_file(common.out);
    const auto back = loaded.contains("parts") ? oscrat::oscillatory_from_json(loaded)
                                               : oscrat::OscillatoryFunction(
                                                     0.0, oscrat::expansion_from_json(loaded));
    if (back.parts().size() != g.parts().size()) {
      throw std::runtime_error("round trip changed the part count");
    }
    for (std::size_t p = 0; p < g.parts().size(); ++p) {
      const auto& a = g.parts()[p].expansion.coeffs();
      const auto& b = back.parts()[p].expansion.coeffs();
      if (a != b) throw std::runtime_error("round trip changed a coefficient");
    }
    std::puts("round trip: coefficients identical");
  }
  return 0;
}

int cmd_fourier(const CommonArgs& common, int n, const std::string& k_spec) {
  const oscrat::MobiusMap map(common.beta);
  const auto reference = oscrat::make_test_case(common.function, map);
  const auto g = oscrat::approximate(reference, n, map);
  oscrat::CsvWriter csv(common.out);
  csv.header({"k", "re", "im"});
  for (double k : parse_real_range(k_spec)) {
    const complex_t v = oscrat::fourier_transform(g, k);
    csv.row({k, v.real(), v.imag()});
  }
  return 0;
}

int cmd_cauchy(const CommonArgs& common, int n, const std::string& x_spec,
               const std::string& side_name, double imz) {
  const oscrat::MobiusMap map(common.beta);
  const auto reference = oscrat::make_test_case(common.function, map);
  const auto g = oscrat::approximate(reference, n, map);
  oscrat::CsvWriter csv(common.out);
  bool warned = false;
  if (imz == 0.0) {
    const auto side =
        (side_name == "minus") ? oscrat::CauchySide::minus : oscrat::CauchySide::plus;
    const auto h = oscrat::cauchy_apply(g, side);
    csv.header({"x", "re", "im"});
    for (double x : parse_real_range(x_spec)) {
      const complex_t v = h(x);
      csv.row({x, v.real(), v.imag()});
    }
  } else {
    csv.header({"x", "imz", "re", "im"});
    for (double x : parse_real_range(x_spec)) {
      const auto v = oscrat::cauchy_offaxis(g, complex_t{x, imz});
      if (v.stability_warning && !warned) {
        std::cerr << "warning: expansion indices beyond 30; off-axis values may lose accuracy\n";
        warned = true;
      }
      csv.row({x, imz, v.value.real(), v.value.imag()});
    }
  }
  return 0;
}

int cmd_diff(const CommonArgs& common, int n, const std::string& x_spec) {
  const oscrat::MobiusMap map(common.beta);
  const auto reference = oscrat::make_test_case(common.function, map);
  const auto d = oscrat::differentiate_osc(oscrat::approximate(reference, n, map));
  oscrat::CsvWriter csv(common.out);
  csv.header({"x", "re", "im", "exact_re", "exact_im"});
  for (double x : parse_real_range(x_spec)) {
    const complex_t v = d(x);
    const complex_t e = reference.derivative(x);
    csv.row({x, v.real(), v.imag(), e.real(), e.imag()});
  }
  return 0;
}

int cmd_convergence(const CommonArgs& common, const std::string& n_spec, double xmax,
                    int points) {
  const oscrat::MobiusMap map(common.beta);
  const auto reference = oscrat::make_test_case(common.function, map);
  const auto report = oscrat::convergence_sweep(reference, parse_int_range(n_spec), common.beta,
                                                {xmax, points});
  oscrat::write_json_file(common.out, oscrat::report_to_json(report, common.beta, reference.name));
  return 0;
}

int cmd_kernel_norms(const std::string& n_spec, const std::string& p_spec,
                     const std::string& orders_spec, const std::string& out) {
  oscrat::CsvWriter csv(out);
  csv.header({"n", "p", "order", "norm"});
  for (int n : parse_int_range(n_spec)) {
    for (double p : parse_real_list(p_spec)) {
      for (int order : parse_int_list(orders_spec)) {
        csv.row({double(n), p, double(order), oscrat::kernel_norm(n, p, order)});
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational spectral approximation on the real line"};
  app.require_subcommand(1);

  CommonArgs common;
  int n = 64;
  std::string n_spec = "64";
  std::string k_spec = "-10:10:0.1";
  std::string x_spec = "-10:10:0.1";
  std::string side = "plus";
  std::string p_spec = "1,2";
  std::string orders_spec = "0";
  double imz = 0.0;
  double xmax = 60.0;
  int points = 4001;
  bool check_roundtrip = false;

  const auto add_common = [&](CLI::App* cmd, bool with_function = true) {
    if (with_function) {
      cmd->add_option("--function", common.function,
                      "reference: gaussian | rational | twopart | basis-r1");
    }
    cmd->add_option("--beta", common.beta, "map parameter (default 1)");
    cmd->add_option("--out", common.out, "output file")->required();
  };

  auto* approx = app.add_subcommand("approx", "fit an expansion and serialize it as JSON");
  add_common(approx);
  approx->add_option("--n", n, "interpolation order");
  approx->add_flag("--check-roundtrip", check_roundtrip, "reload and compare coefficients");

  auto* fourier = app.add_subcommand("fourier", "transform over a wavenumber grid (CSV)");
  add_common(fourier);
  fourier->add_option("--n", n, "interpolation order");
  fourier->add_option("--k", k_spec, "wavenumber grid start:stop:step");

  auto* cauchy = app.add_subcommand("cauchy", "boundary or off-axis transform values (CSV)");
  add_common(cauchy);
  cauchy->add_option("--n", n, "interpolation order");
  cauchy->add_option("--x", x_spec, "real grid start:stop:step");
  cauchy->add_option("--side", side, "plus | minus (boundary values)")
      ->check(CLI::IsMember({"plus", "minus"}));
  cauchy->add_option("--imz", imz, "imaginary offset; 0 means boundary values");

  auto* diff = app.add_subcommand("diff", "derivative of the approximant on a grid (CSV)");
  add_common(diff);
  diff->add_option("--n", n, "interpolation order");
  diff->add_option("--x", x_spec, "real grid start:stop:step");

  auto* convergence = app.add_subcommand("convergence", "error-norm sweep over orders (JSON)");
  add_common(convergence);
  convergence->add_option("--n", n_spec, "orders start:stop:step or start:stop:dyadic");
  convergence->add_option("--xmax", xmax, "half width of the evaluation window");
  convergence->add_option("--points", points, "evaluation grid size");

  auto* kernel = app.add_subcommand("kernel-norms", "Dirichlet kernel L^p norm sweep (CSV)");
  kernel->add_option("--n", n_spec, "orders start:stop:step or start:stop:dyadic");
  kernel->add_option("--p", p_spec, "comma list of exponents");
  kernel->add_option("--orders", orders_spec, "comma list of derivative orders (0,1)");
  kernel->add_option("--out", common.out, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(approx)) return cmd_approx(common, n, check_roundtrip);
    if (app.got_subcommand(fourier)) return cmd_fourier(common, n, k_spec);
    if (app.got_subcommand(cauchy)) return cmd_cauchy(common, n, x_spec, side, imz);
    if (app.got_subcommand(diff)) return cmd_diff(common, n, x_spec);
    if (app.got_subcommand(convergence)) return cmd_convergence(common, n_spec, xmax, points);
    if (app.got_subcommand(kernel)) {
      return cmd_kernel_norms(n_spec, p_spec, orders_spec, common.out);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
