#include "qdist/kernels.hpp"

namespace qdist::kernels {

void distances_scalar(const BlochColumns& a, const BlochColumns& b, const DistanceColumns& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const DistanceRecord rec =
        bloch::all_distances({a.x[i], a.y[i], a.z[i]}, {b.x[i], b.y[i], b.z[i]});
    out.d_t[i] = rec.d_t;
    out.d_hs[i] = rec.d_hs;
    out.d_b[i] = rec.d_b;
    out.d_h[i] = rec.d_h;
    out.d_js[i] = rec.d_js;
  }
}

}  // namespace qdist::kernels
