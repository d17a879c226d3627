#pragma once

// Experiment driver: configuration, time sweeps, parameter scans and output.
//
// An experiment compares two initial states that share the environment
// constants and differ in their correlation parameter and/or qubit amplitudes,
// and records D(t) = D[rho_1(t), rho_2(t)] for every measure.

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdist/distances.hpp"
#include "qdist/model_a.hpp"
#include "qdist/model_b.hpp"

namespace qdist::lab {

enum class ModelKind { A, B };
enum class PrepKind { coherent, number };
enum class ScanAxis { lam, z_abs, phase, theta, zeta, n };

std::string_view axis_name(ScanAxis a);

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  int n = 2;

  double at(int i) const;
  std::vector<double> times() const;
};

/// Per-state quantities. Amplitudes are b+ = cos(theta/2), b- = e^{i zeta} sin(theta/2).
struct StateSpec {
  double lam = 0.0;
  double theta = 1.5707963267948966;
  double zeta = 0.0;
};

/// Scans vary state 2 for lam/theta/zeta and the shared environment otherwise.
struct ScanSpec {
  ScanAxis axis = ScanAxis::lam;
  std::vector<double> values;
};

struct OutputSpec {
  std::string csv;
  std::string plot;
};

struct ExperimentConfig {
  ModelKind model = ModelKind::B;
  double eps = 1.0;
  std::array<StateSpec, 2> states{StateSpec{0.0}, StateSpec{1.0}};

  // Model A environment.
  double alpha_eff = 0.01;
  double gamma_eff = 0.05;
  double mu = 0.01;
  double nu = 0.2;

  // Model B environment.
  double g = 0.1;
  PrepKind prep = PrepKind::coherent;
  double z_abs = 1.0;
  double phase = 0.0;
  int n = 1;
  int n_cap = model_b::kDefaultNumberCap;
  model_b::LambdaConvention lambda_convention = model_b::LambdaConvention::plus;

  TimeGrid grid{0.0, 4.0 * 3.141592653589793, 801};
  OutputSpec outputs;
  std::optional<ScanSpec> scan;
};

TimeGrid default_grid(ModelKind m);

Complex amplitude_plus(const StateSpec& s);
Complex amplitude_minus(const StateSpec& s);

/// Model parameters for state 0 or 1.
model_a::Params params_a(const ExperimentConfig& cfg, int state);
model_b::Params params_b(const ExperimentConfig& cfg, int state);

/// Cross-field checks; throws ValidationError.
void validate(const ExperimentConfig& cfg);

/// Line-based `key = value` grammar with `#` comments. Throws ParseError for
/// malformed text and ValidationError for bad values.
ExperimentConfig parse_config(std::string_view text);

/// Applies `key=value` overrides on top of already-parsed text.
ExperimentConfig parse_config(std::string_view text, std::span<const std::string> overrides);

/// Canonical, fully-resolved config text; parse_config(describe(c)) reproduces c.
std::string describe(const ExperimentConfig& cfg);

struct TimeRow {
  double t = 0.0;
  DistanceRecord rec;
};

struct TimeSeries {
  std::vector<TimeRow> rows;
  ExperimentConfig config;
};

TimeSeries run_timeseries(const ExperimentConfig& cfg);

/// MAX over the grid of D(t) - D(0), per measure (in kAllMeasures order).
std::array<double, 5> max_increase(const TimeSeries& ts);

struct ScanRow {
  double value = 0.0;
  std::array<double, 5> max_increase{};
};

struct ScanResult {
  ScanAxis axis = ScanAxis::lam;
  std::vector<ScanRow> rows;
  ExperimentConfig config;
};

/// Copy of cfg with the scanned quantity set to `value`.
ExperimentConfig with_axis_value(const ExperimentConfig& cfg, ScanAxis axis, double value);

ScanResult run_scan(const ExperimentConfig& cfg);

void emit_csv(const TimeSeries& ts, std::ostream& out);
void emit_csv(const ScanResult& scan, std::ostream& out);

/// SVG line plot, one polyline per requested measure.
void emit_plot(const TimeSeries& ts, std::ostream& out,
               std::span<const Measure> measures = kAllMeasures);
void emit_plot(const ScanResult& scan, std::ostream& out,
               std::span<const Measure> measures = kAllMeasures);

/// "out/fig1.svg" + D_T -> "out/fig1_D_T.svg".
std::string per_measure_path(const std::string& path, Measure m);

}  // namespace qdist::lab
