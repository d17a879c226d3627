#pragma once

#include <array>
#include <string_view>

#include "qdist/qstate.hpp"

namespace qdist {

enum class Measure { trace, hilbert_schmidt, bures, hellinger, jensen_shannon };

inline constexpr std::array<Measure, 5> kAllMeasures = {
    Measure::trace, Measure::hilbert_schmidt, Measure::bures, Measure::hellinger,
    Measure::jensen_shannon};

/// Column label used in CSV headers and plot legends ("D_T", "D_HS", ...).
std::string_view measure_label(Measure m);

struct DistanceRecord {
  double d_t = 0.0;
  double d_hs = 0.0;
  double d_b = 0.0;
  double d_h = 0.0;
  double d_js = 0.0;

  double get(Measure m) const;
  std::array<double, 5> values() const { return {d_t, d_hs, d_b, d_h, d_js}; }
};

// Closed Bloch-form distances between qubit states. Entropies are in nats, so
// D_JS peaks at sqrt(ln 2) for orthogonal pure states.

double trace_distance(const QubitState& s1, const QubitState& s2);
double hs_distance(const QubitState& s1, const QubitState& s2);
double fidelity(const QubitState& s1, const QubitState& s2);
double bures_distance(const QubitState& s1, const QubitState& s2);
double affinity(const QubitState& s1, const QubitState& s2);
double hellinger_distance(const QubitState& s1, const QubitState& s2);
double js_distance(const QubitState& s1, const QubitState& s2);

DistanceRecord all_distances(const QubitState& s1, const QubitState& s2);

namespace bloch {

// The same measures on Bloch vectors; the QubitState overloads forward here.

double trace_distance(const BlochVector& r1, const BlochVector& r2);
double hs_distance(const BlochVector& r1, const BlochVector& r2);
double fidelity(const BlochVector& r1, const BlochVector& r2);
double bures_distance(const BlochVector& r1, const BlochVector& r2);
double affinity(const BlochVector& r1, const BlochVector& r2);
double hellinger_distance(const BlochVector& r1, const BlochVector& r2);
/// D_JS^2 before clamping; may carry a tiny negative rounding residue.
double js_divergence_squared(const BlochVector& r1, const BlochVector& r2);
double js_distance(const BlochVector& r1, const BlochVector& r2);

DistanceRecord all_distances(const BlochVector& r1, const BlochVector& r2);

}  // namespace bloch
}  // namespace qdist
