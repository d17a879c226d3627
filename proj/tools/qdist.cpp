// qdist: run time sweeps and parameter scans of qubit-state distances.
//
//   qdist run  --config configs/fig1.cfg --csv out.csv --plot out.svg
//   qdist scan --config configs/fig3_zscan.cfg --override scan_range=0.05:4:80
//
// Exit codes: 0 success, 1 configuration/validation error, 2 runtime/model error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qdist/errors.hpp"
#include "qdist/kernels.hpp"
#include "qdist/lab.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdist::ValidationError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Creates missing parent directories; a failure surfaces when the open fails.
std::ofstream open_for_writing(const std::string& path) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

template <class Result>
void write_outputs(const Result& result, const std::string& csv_path, const std::string& plot_path,
                   bool split) {
  if (csv_path.empty() || csv_path == "-") {
    qdist::lab::emit_csv(result, std::cout);
  } else {
    std::ofstream out = open_for_writing(csv_path);
    qdist::lab::emit_csv(result, out);
  }
  if (plot_path.empty()) return;
  if (!split) {
    std::ofstream out = open_for_writing(plot_path);
    qdist::lab::emit_plot(result, out);
    return;
  }
  for (qdist::Measure m : qdist::kAllMeasures) {
    const std::string path = qdist::lab::per_measure_path(plot_path, m);
    std::ofstream out = open_for_writing(path);
    const qdist::Measure one[] = {m};
    qdist::lab::emit_plot(result, out, one);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance measures between qubit states under pure dephasing"};
  app.require_subcommand(1);

  std::string config_path, csv_path, plot_path, kernel;
  std::vector<std::string> overrides;
  bool split = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Experiment configuration file")->required();
    sub->add_option("--csv", csv_path, "CSV output path ('-' for stdout)");
    sub->add_option("--plot", plot_path, "SVG output path");
    sub->add_option("--override", overrides, "Override a config entry, key=value (repeatable)");
    sub->add_flag("--plot-per-measure", split, "Write one SVG per measure next to --plot");
    sub->add_option("--kernel", kernel, "Distance kernel backend")
        ->check(CLI::IsMember({"scalar", "avx2"}));
  };
  CLI::App* run = app.add_subcommand("run", "Time series of all five distances");
  CLI::App* scan = app.add_subcommand("scan", "MAX[D(t)-D(0)] over a parameter axis");
  add_common(run);
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  qdist::lab::ExperimentConfig cfg;
  try {
    cfg = qdist::lab::parse_config(read_file(config_path), overrides);
    if (!kernel.empty())
      qdist::kernels::set_backend(kernel == "avx2" ? qdist::kernels::Backend::avx2
                                                   : qdist::kernels::Backend::scalar);
    if (run->parsed() && cfg.scan)
      throw qdist::ValidationError("scan_axis", "scan keys given to 'run'; use 'scan'");
    if (scan->parsed() && !cfg.scan)
      throw qdist::ValidationError("scan_axis", "'scan' needs scan_axis and scan_values/scan_range");
  } catch (const std::invalid_argument& e) {
    std::cerr << "qdist: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string csv = csv_path.empty() ? cfg.outputs.csv : csv_path;
  const std::string plot = plot_path.empty() ? cfg.outputs.plot : plot_path;
  try {
    if (run->parsed())
      write_outputs(qdist::lab::run_timeseries(cfg), csv, plot, split);
    else
      write_outputs(qdist::lab::run_scan(cfg), csv, plot, split);
  } catch (const std::exception& e) {
    std::cerr << "qdist: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
