#include <algorithm>
#include <exception>

#include "qdist/errors.hpp"
#include "qdist/kernels.hpp"
#include "qdist/lab.hpp"

namespace qdist::lab {
namespace {

QubitState state_at(const ExperimentConfig& cfg, int idx, double t) {
  if (cfg.model == ModelKind::A) return model_a::rho(params_a(cfg, idx), t);
  return model_b::rho(params_b(cfg, idx), t);
}

}  // namespace

TimeSeries run_timeseries(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::vector<double> ts = cfg.grid.times();
  const std::size_t n = ts.size();

  // Columns: x1 y1 z1 x2 y2 z2, then the five distances.
  std::vector<double> buf(11 * n);
  auto col = [&](std::size_t k) { return std::span<double>(buf.data() + k * n, n); };

  for (std::size_t i = 0; i < n; ++i) {
    const double t = ts[i];
    try {
      const BlochVector r1 = to_bloch(state_at(cfg, 0, t));
      const BlochVector r2 = to_bloch(state_at(cfg, 1, t));
      col(0)[i] = r1.x;
      col(1)[i] = r1.y;
      col(2)[i] = r1.z;
      col(3)[i] = r2.x;
      col(4)[i] = r2.y;
      col(5)[i] = r2.z;
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ModelError(t, e.what());
    }
  }

  try {
    kernels::distances(kernels::BlochColumns{col(0), col(1), col(2)},
                       kernels::BlochColumns{col(3), col(4), col(5)},
                       kernels::DistanceColumns{col(6), col(7), col(8), col(9), col(10)});
  } catch (const DomainError&) {
    // Locate the offending grid point with the per-pair path.
    for (std::size_t i = 0; i < n; ++i) {
      try {
        bloch::all_distances({col(0)[i], col(1)[i], col(2)[i]}, {col(3)[i], col(4)[i], col(5)[i]});
      } catch (const DomainError& e) {
        throw ModelError(ts[i], e.what());
      }
    }
    throw;
  }

  TimeSeries out;
  out.config = cfg;
  out.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.rows[i] = {ts[i], {col(6)[i], col(7)[i], col(8)[i], col(9)[i], col(10)[i]}};
  return out;
}

std::array<double, 5> max_increase(const TimeSeries& ts) {
  std::array<double, 5> best{};
  if (ts.rows.empty()) return best;
  const auto first = ts.rows.front().rec.values();
  for (const auto& row : ts.rows) {
    const auto v = row.rec.values();
    for (std::size_t k = 0; k < 5; ++k) best[k] = std::max(best[k], v[k] - first[k]);
  }
  return best;
}

ScanResult run_scan(const ExperimentConfig& cfg) {
  validate(cfg);
  if (!cfg.scan) throw ValidationError("scan_axis", "run_scan needs a scan specification");
  ScanResult res;
  res.axis = cfg.scan->axis;
  res.config = cfg;
  res.rows.reserve(cfg.scan->values.size());
  for (double v : cfg.scan->values) {
    ExperimentConfig point = with_axis_value(cfg, cfg.scan->axis, v);
    point.scan.reset();
    res.rows.push_back({v, max_increase(run_timeseries(point))});
  }
  return res;
}

}  // namespace qdist::lab
