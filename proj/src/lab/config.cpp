#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "qdist/errors.hpp"
#include "qdist/lab.hpp"

namespace qdist::lab {

std::string_view axis_name(ScanAxis a) {
  switch (a) {
    case ScanAxis::lam: return "lam";
    case ScanAxis::z_abs: return "z_abs";
    case ScanAxis::phase: return "phase";
    case ScanAxis::theta: return "theta";
    case ScanAxis::zeta: return "zeta";
    case ScanAxis::n: return "n";
  }
  return "?";
}

double TimeGrid::at(int i) const {
  if (i == n - 1) return t_end;
  return t_start + (t_end - t_start) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = at(i);
  return ts;
}

TimeGrid default_grid(ModelKind m) {
  if (m == ModelKind::A) return {0.0, 40.0, 2001};
  return {0.0, 4.0 * std::numbers::pi, 801};
}

Complex amplitude_plus(const StateSpec& s) { return {std::cos(0.5 * s.theta), 0.0}; }

Complex amplitude_minus(const StateSpec& s) {
  return std::polar(std::sin(0.5 * s.theta), s.zeta);
}

model_a::Params params_a(const ExperimentConfig& cfg, int state) {
  const StateSpec& s = cfg.states.at(static_cast<std::size_t>(state));
  model_a::Params p;
  p.alpha_eff = cfg.alpha_eff;
  p.gamma_eff = cfg.gamma_eff;
  p.mu = cfg.mu;
  p.nu = cfg.nu;
  p.eps = cfg.eps;
  p.lam = s.lam;
  p.b_plus = amplitude_plus(s);
  p.b_minus = amplitude_minus(s);
  return p;
}

model_b::Params params_b(const ExperimentConfig& cfg, int state) {
  const StateSpec& s = cfg.states.at(static_cast<std::size_t>(state));
  model_b::Params p;
  p.g = cfg.g;
  p.eps = cfg.eps;
  p.lam = s.lam;
  if (cfg.prep == PrepKind::coherent)
    p.prep = model_b::Coherent{cfg.z_abs, cfg.phase};
  else
    p.prep = model_b::Number{cfg.n};
  p.b_plus = amplitude_plus(s);
  p.b_minus = amplitude_minus(s);
  p.n_cap = cfg.n_cap;
  p.lambda_convention = cfg.lambda_convention;
  return p;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> plain_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Number, optionally written as a multiple of pi: "pi", "-2pi", "0.5pi", "3pi/4", "pi/2".
std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return plain_number(s);
  std::string_view coef = s.substr(0, pi_at);
  std::string_view rest = s.substr(pi_at + 2);
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    if (coef.back() == '*') coef.remove_suffix(1);
    auto c = plain_number(coef);
    if (!c) return std::nullopt;
    factor = *c;
  }
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    auto d = plain_number(rest.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return factor * std::numbers::pi / divisor;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

enum class Scope { common, model_a, model_b };

struct KeyHandler {
  Scope scope;
  std::function<void(ExperimentConfig&, const Entry&)> apply;
};

double number_of(const Entry& e) {
  auto v = parse_number(e.value);
  if (!v) throw ParseError(e.line, "'" + e.key + "' expects a number, got '" + e.value + "'");
  return *v;
}

int integer_of(const Entry& e) {
  const double v = number_of(e);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ParseError(e.line, "'" + e.key + "' expects an integer, got '" + e.value + "'");
  return static_cast<int>(v);
}

std::vector<double> list_of(const Entry& e) {
  std::vector<double> out;
  for (auto part : split(e.value, ',')) {
    auto v = parse_number(part);
    if (!v)
      throw ParseError(e.line, "'" + e.key + "' has a bad list element '" + std::string(part) + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<double> range_of(const Entry& e) {
  const auto parts = split(e.value, ':');
  if (parts.size() != 3)
    throw ParseError(e.line, "'" + e.key + "' expects start:stop:count, got '" + e.value + "'");
  const auto lo = parse_number(parts[0]);
  const auto hi = parse_number(parts[1]);
  const auto cnt = plain_number(parts[2]);
  if (!lo || !hi || !cnt || *cnt < 1 || *cnt != std::floor(*cnt))
    throw ParseError(e.line, "'" + e.key + "' expects start:stop:count, got '" + e.value + "'");
  const int count = static_cast<int>(*cnt);
  if (count == 1) return {*lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        (i == count - 1) ? *hi : *lo + (*hi - *lo) * static_cast<double>(i) / (count - 1);
  return out;
}

ScanSpec& scan_of(ExperimentConfig& c) {
  if (!c.scan) c.scan = ScanSpec{};
  return *c.scan;
}

const std::map<std::string, KeyHandler, std::less<>>& handlers() {
  static const std::map<std::string, KeyHandler, std::less<>> table = [] {
    std::map<std::string, KeyHandler, std::less<>> t;
    auto common = [&t](const char* k, std::function<void(ExperimentConfig&, const Entry&)> f) {
      t.emplace(k, KeyHandler{Scope::common, std::move(f)});
    };
    auto only_a = [&t](const char* k, std::function<void(ExperimentConfig&, const Entry&)> f) {
      t.emplace(k, KeyHandler{Scope::model_a, std::move(f)});
    };
    auto only_b = [&t](const char* k, std::function<void(ExperimentConfig&, const Entry&)> f) {
      t.emplace(k, KeyHandler{Scope::model_b, std::move(f)});
    };

    common("eps", [](auto& c, const auto& e) { c.eps = number_of(e); });
    common("lam1", [](auto& c, const auto& e) { c.states[0].lam = number_of(e); });
    common("lam2", [](auto& c, const auto& e) { c.states[1].lam = number_of(e); });
    common("theta1", [](auto& c, const auto& e) { c.states[0].theta = number_of(e); });
    common("theta2", [](auto& c, const auto& e) { c.states[1].theta = number_of(e); });
    common("zeta1", [](auto& c, const auto& e) { c.states[0].zeta = number_of(e); });
    common("zeta2", [](auto& c, const auto& e) { c.states[1].zeta = number_of(e); });
    common("t_start", [](auto& c, const auto& e) { c.grid.t_start = number_of(e); });
    common("t_end", [](auto& c, const auto& e) { c.grid.t_end = number_of(e); });
    common("t_points", [](auto& c, const auto& e) { c.grid.n = integer_of(e); });
    common("csv", [](auto& c, const auto& e) { c.outputs.csv = e.value; });
    common("plot", [](auto& c, const auto& e) { c.outputs.plot = e.value; });
    common("scan_axis", [](auto& c, const auto& e) {
      static const std::map<std::string, ScanAxis, std::less<>> axes = {
          {"lam", ScanAxis::lam},     {"z_abs", ScanAxis::z_abs}, {"phase", ScanAxis::phase},
          {"theta", ScanAxis::theta}, {"zeta", ScanAxis::zeta},   {"n", ScanAxis::n}};
      auto it = axes.find(e.value);
      if (it == axes.end()) throw ParseError(e.line, "unknown scan axis '" + e.value + "'");
      scan_of(c).axis = it->second;
    });
    common("scan_values", [](auto& c, const auto& e) { scan_of(c).values = list_of(e); });
    common("scan_range", [](auto& c, const auto& e) { scan_of(c).values = range_of(e); });

    only_a("alpha_eff", [](auto& c, const auto& e) { c.alpha_eff = number_of(e); });
    only_a("gamma_eff", [](auto& c, const auto& e) { c.gamma_eff = number_of(e); });
    only_a("mu", [](auto& c, const auto& e) { c.mu = number_of(e); });
    only_a("nu", [](auto& c, const auto& e) { c.nu = number_of(e); });

    only_b("g", [](auto& c, const auto& e) { c.g = number_of(e); });
    only_b("prep", [](auto& c, const auto& e) {
      if (e.value == "coherent")
        c.prep = PrepKind::coherent;
      else if (e.value == "number")
        c.prep = PrepKind::number;
      else
        throw ParseError(e.line, "prep must be 'coherent' or 'number', got '" + e.value + "'");
    });
    only_b("z_abs", [](auto& c, const auto& e) { c.z_abs = number_of(e); });
    only_b("phase", [](auto& c, const auto& e) { c.phase = number_of(e); });
    only_b("n", [](auto& c, const auto& e) { c.n = integer_of(e); });
    only_b("n_cap", [](auto& c, const auto& e) { c.n_cap = integer_of(e); });
    only_b("lambda_convention", [](auto& c, const auto& e) {
      if (e.value == "plus")
        c.lambda_convention = model_b::LambdaConvention::plus;
      else if (e.value == "minus")
        c.lambda_convention = model_b::LambdaConvention::minus;
      else
        throw ParseError(e.line, "lambda_convention must be 'plus' or 'minus'");
    });
    return t;
  }();
  return table;
}

Entry parse_line(std::string_view raw, int line_no) {
  std::string_view line = raw;
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return {};
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
  const std::string_view key = trim(line.substr(0, eq));
  const std::string_view value = trim(line.substr(eq + 1));
  if (key.empty()) throw ParseError(line_no, "missing key");
  const bool ident = std::all_of(key.begin(), key.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
  if (!ident) throw ParseError(line_no, "invalid key '" + std::string(key) + "'");
  if (value.empty()) throw ParseError(line_no, "missing value for '" + std::string(key) + "'");
  return {std::string(key), std::string(value), line_no};
}

std::vector<Entry> collect(std::string_view text, int first_line, std::vector<Entry> entries) {
  int line_no = first_line;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    Entry e = parse_line(raw, line_no);
    if (!e.key.empty()) entries.push_back(std::move(e));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++line_no;
  }
  return entries;
}

ExperimentConfig build(const std::vector<Entry>& entries) {
  // Later entries win (overrides); within one document duplicates are rejected upstream.
  const Entry* model_entry = nullptr;
  for (const auto& e : entries)
    if (e.key == "model") model_entry = &e;
  if (model_entry == nullptr) throw ValidationError("model", "required key 'model' is missing");

  ExperimentConfig cfg;
  if (model_entry->value == "A")
    cfg.model = ModelKind::A;
  else if (model_entry->value == "B")
    cfg.model = ModelKind::B;
  else
    throw ParseError(model_entry->line, "model must be 'A' or 'B', got '" + model_entry->value + "'");
  cfg.grid = default_grid(cfg.model);

  for (const auto& e : entries) {
    if (e.key == "model") continue;
    const auto it = handlers().find(e.key);
    if (it == handlers().end()) throw ParseError(e.line, "unknown key '" + e.key + "'");
    const Scope scope = it->second.scope;
    if ((scope == Scope::model_a && cfg.model != ModelKind::A) ||
        (scope == Scope::model_b && cfg.model != ModelKind::B))
      throw ValidationError(e.key, std::string("not applicable to model ") +
                                       (cfg.model == ModelKind::A ? "A" : "B"));
    it->second.apply(cfg, e);
  }
  validate(cfg);
  return cfg;
}

void reject_duplicates(const std::vector<Entry>& entries) {
  std::map<std::string, int, std::less<>> seen;
  for (const auto& e : entries) {
    auto [it, inserted] = seen.emplace(e.key, e.line);
    if (!inserted)
      throw ParseError(e.line, "duplicate key '" + e.key + "' (first set on line " +
                                   std::to_string(it->second) + ")");
  }
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (!std::isfinite(cfg.eps)) throw ValidationError("eps", "must be finite");
  for (int i = 0; i < 2; ++i) {
    const StateSpec& s = cfg.states[static_cast<std::size_t>(i)];
    const std::string idx = std::to_string(i + 1);
    if (!(s.lam >= 0.0 && s.lam <= 1.0)) throw ValidationError("lam" + idx, "lam out of [0,1]");
    if (!std::isfinite(s.theta)) throw ValidationError("theta" + idx, "must be finite");
    if (!std::isfinite(s.zeta)) throw ValidationError("zeta" + idx, "must be finite");
  }
  const TimeGrid& g = cfg.grid;
  if (!std::isfinite(g.t_start) || g.t_start < 0.0)
    throw ValidationError("t_start", "must be finite and >= 0");
  if (!std::isfinite(g.t_end) || !(g.t_end > g.t_start))
    throw ValidationError("t_end", "must be greater than t_start");
  if (g.n < 2) throw ValidationError("t_points", "must be >= 2");

  for (int i = 0; i < 2; ++i) {
    try {
      if (cfg.model == ModelKind::A)
        model_a::validate(params_a(cfg, i));
      else
        model_b::validate(params_b(cfg, i));
    } catch (const ValidationError& err) {
      const std::string& f = err.field();
      if (f == "lam" || f == "amplitudes") {
        const std::string field = (f == "lam" ? "lam" : "theta") + std::to_string(i + 1);
        const std::string what = err.what();
        throw ValidationError(field, what.substr(what.find(": ") + 2));
      }
      throw;
    }
  }

  if (cfg.scan) {
    const ScanSpec& sc = *cfg.scan;
    if (sc.values.empty()) throw ValidationError("scan_values", "scan needs at least one value");
    for (std::size_t i = 1; i < sc.values.size(); ++i)
      if (!(sc.values[i] > sc.values[i - 1]))
        throw ValidationError("scan_values", "values must be strictly increasing");
    const bool coherent_b = cfg.model == ModelKind::B && cfg.prep == PrepKind::coherent;
    const bool number_b = cfg.model == ModelKind::B && cfg.prep == PrepKind::number;
    if ((sc.axis == ScanAxis::z_abs || sc.axis == ScanAxis::phase) && !coherent_b)
      throw ValidationError("scan_axis", "axis needs model B with a coherent preparation");
    if (sc.axis == ScanAxis::n && !number_b)
      throw ValidationError("scan_axis", "axis needs model B with a number preparation");
    // Every scanned point must itself be a valid configuration.
    for (double v : sc.values) {
      if (sc.axis == ScanAxis::n && v != std::floor(v))
        throw ValidationError("scan_values", "n values must be integers");
      ExperimentConfig point = with_axis_value(cfg, sc.axis, v);
      point.scan.reset();
      validate(point);
    }
  }
}

ExperimentConfig parse_config(std::string_view text) {
  auto entries = collect(text, 1, {});
  reject_duplicates(entries);
  return build(entries);
}

ExperimentConfig parse_config(std::string_view text, std::span<const std::string> overrides) {
  auto entries = collect(text, 1, {});
  reject_duplicates(entries);
  // Overrides replace same-named entries; their "line" is reported as 0.
  for (const auto& ov : overrides) {
    Entry e = parse_line(ov, 0);
    if (e.key.empty()) throw ParseError(0, "empty override");
    std::erase_if(entries, [&](const Entry& x) { return x.key == e.key; });
    entries.push_back(std::move(e));
  }
  return build(entries);
}

std::string describe(const ExperimentConfig& cfg) {
  std::ostringstream os;
  const bool a = cfg.model == ModelKind::A;
  os << "model = " << (a ? "A" : "B") << '\n';
  os << "eps = " << fmt(cfg.eps) << '\n';
  for (int i = 0; i < 2; ++i) {
    const StateSpec& s = cfg.states[static_cast<std::size_t>(i)];
    os << "lam" << i + 1 << " = " << fmt(s.lam) << '\n';
    os << "theta" << i + 1 << " = " << fmt(s.theta) << '\n';
    os << "zeta" << i + 1 << " = " << fmt(s.zeta) << '\n';
  }
  if (a) {
    os << "alpha_eff = " << fmt(cfg.alpha_eff) << '\n';
    os << "gamma_eff = " << fmt(cfg.gamma_eff) << '\n';
    os << "mu = " << fmt(cfg.mu) << '\n';
    os << "nu = " << fmt(cfg.nu) << '\n';
  } else {
    os << "g = " << fmt(cfg.g) << '\n';
    os << "prep = " << (cfg.prep == PrepKind::coherent ? "coherent" : "number") << '\n';
    os << "z_abs = " << fmt(cfg.z_abs) << '\n';
    os << "phase = " << fmt(cfg.phase) << '\n';
    os << "n = " << cfg.n << '\n';
    os << "n_cap = " << cfg.n_cap << '\n';
    os << "lambda_convention = "
       << (cfg.lambda_convention == model_b::LambdaConvention::plus ? "plus" : "minus") << '\n';
  }
  os << "t_start = " << fmt(cfg.grid.t_start) << '\n';
  os << "t_end = " << fmt(cfg.grid.t_end) << '\n';
  os << "t_points = " << cfg.grid.n << '\n';
  if (!cfg.outputs.csv.empty()) os << "csv = " << cfg.outputs.csv << '\n';
  if (!cfg.outputs.plot.empty()) os << "plot = " << cfg.outputs.plot << '\n';
  if (cfg.scan) {
    os << "scan_axis = " << axis_name(cfg.scan->axis) << '\n';
    os << "scan_values = ";
    for (std::size_t i = 0; i < cfg.scan->values.size(); ++i)
      os << (i ? ", " : "") << fmt(cfg.scan->values[i]);
    os << '\n';
  }
  return os.str();
}

ExperimentConfig with_axis_value(const ExperimentConfig& cfg, ScanAxis axis, double value) {
  ExperimentConfig c = cfg;
  switch (axis) {
    case ScanAxis::lam: c.states[1].lam = value; break;
    case ScanAxis::theta: c.states[1].theta = value; break;
    case ScanAxis::zeta: c.states[1].zeta = value; break;
    case ScanAxis::z_abs: c.z_abs = value; break;
    case ScanAxis::phase: c.phase = value; break;
    case ScanAxis::n: c.n = static_cast<int>(std::lround(value)); break;
  }
  return c;
}

}  // namespace qdist::lab
