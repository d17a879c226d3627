#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qdist/kernels.hpp"

namespace qdist::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QDIST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("QDIST_KERNEL"); env != nullptr && std::string(env) == "scalar")
    return Backend::scalar;
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) { return b == Backend::scalar || cpu_has_avx2(); }

Backend active_backend() { return current().load(); }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  current().store(b);
}

void distances(const BlochColumns& a, const BlochColumns& b, const DistanceColumns& out) {
  const std::size_t n = a.size();
  if (a.y.size() != n || a.z.size() != n || b.size() != n || b.y.size() != n ||
      b.z.size() != n || out.size() != n || out.d_hs.size() != n || out.d_b.size() != n ||
      out.d_h.size() != n || out.d_js.size() != n)
    throw std::invalid_argument("kernels::distances: column lengths differ");
#if defined(QDIST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    distances_avx2(a, b, out);
    return;
  }
#endif
  distances_scalar(a, b, out);
}

std::vector<DistanceRecord> distances(std::span<const BlochVector> a,
                                      std::span<const BlochVector> b) {
  if (a.size() != b.size()) throw std::invalid_argument("kernels::distances: length mismatch");
  const std::size_t n = a.size();
  std::vector<double> buf(11 * n);
  auto col = [&](std::size_t k) { return std::span<double>(buf.data() + k * n, n); };
  for (std::size_t i = 0; i < n; ++i) {
    col(0)[i] = a[i].x;
    col(1)[i] = a[i].y;
    col(2)[i] = a[i].z;
    col(3)[i] = b[i].x;
    col(4)[i] = b[i].y;
    col(5)[i] = b[i].z;
  }
  distances(BlochColumns{col(0), col(1), col(2)}, BlochColumns{col(3), col(4), col(5)},
            DistanceColumns{col(6), col(7), col(8), col(9), col(10)});
  std::vector<DistanceRecord> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = {col(6)[i], col(7)[i], col(8)[i], col(9)[i], col(10)[i]};
  return out;
}

}  // namespace qdist::kernels
