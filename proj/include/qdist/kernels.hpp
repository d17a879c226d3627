#pragma once

// Batched distance kernels over structure-of-arrays Bloch data.
//
// Two implementations share one contract: a scalar reference that calls the
// per-pair closed forms, and an AVX2 variant processing four pairs per step.
// The active one is picked at first use from CPUID; QDIST_KERNEL=scalar in the
// environment or set_backend() overrides the choice.

#include <span>
#include <string_view>
#include <vector>

#include "qdist/distances.hpp"

namespace qdist::kernels {

struct BlochColumns {
  std::span<const double> x, y, z;
  std::size_t size() const { return x.size(); }
};

struct DistanceColumns {
  std::span<double> d_t, d_hs, d_b, d_h, d_js;
  std::size_t size() const { return d_t.size(); }
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
/// Throws std::invalid_argument if the backend is not usable on this CPU.
void set_backend(Backend b);

void distances_scalar(const BlochColumns& a, const BlochColumns& b, const DistanceColumns& out);
#if defined(QDIST_HAVE_AVX2)
void distances_avx2(const BlochColumns& a, const BlochColumns& b, const DistanceColumns& out);
#endif

/// Dispatches to the active backend. All columns must have equal length.
void distances(const BlochColumns& a, const BlochColumns& b, const DistanceColumns& out);

/// Convenience wrapper for array-of-structs input.
std::vector<DistanceRecord> distances(std::span<const BlochVector> a,
                                      std::span<const BlochVector> b);

}  // namespace qdist::kernels
