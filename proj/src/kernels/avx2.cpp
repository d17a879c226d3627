// AVX2 variant of the batched distance kernel. Mirrors the operation order of
// bloch::all_distances so that everything except the logarithm rounds
// identically; the logarithm below is within a couple of ulp of std::log.
//
// This translation unit is compiled with -mavx2 and must only be entered after
// a runtime CPU check.

#include <immintrin.h>

#include <cstdint>
#include <numbers>
#include <string>

#include "qdist/errors.hpp"
#include "qdist/kernels.hpp"

namespace qdist::kernels {
namespace {

using V = __m256d;

inline V set1(double v) { return _mm256_set1_pd(v); }
inline V add(V a, V b) { return _mm256_add_pd(a, b); }
inline V sub(V a, V b) { return _mm256_sub_pd(a, b); }
inline V mul(V a, V b) { return _mm256_mul_pd(a, b); }
inline V div(V a, V b) { return _mm256_div_pd(a, b); }
inline V vsqrt(V a) { return _mm256_sqrt_pd(a); }
inline V vmax(V a, V b) { return _mm256_max_pd(a, b); }
inline V vmin(V a, V b) { return _mm256_min_pd(a, b); }
inline V select(V mask, V if_true, V if_false) { return _mm256_blendv_pd(if_false, if_true, mask); }

inline V norm2(V x, V y, V z) { return add(add(mul(x, x), mul(y, y)), mul(z, z)); }

// Natural log for positive normal doubles. x = m 2^e with m in [sqrt(1/2), sqrt(2)),
// log m = 2 atanh(s), s = (m-1)/(m+1), |s| < 0.1716, summed to s^23.
V vlog(V x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_bits = _mm256_srli_epi64(bits, 52);
  const __m256i two52_bits = _mm256_castpd_si256(set1(4503599627370496.0));
  V e = sub(_mm256_castsi256_pd(_mm256_or_si256(exp_bits, two52_bits)), set1(4503599627370496.0));
  e = sub(e, set1(1023.0));

  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  V m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

  const V big = _mm256_cmp_pd(m, set1(std::numbers::sqrt2), _CMP_GT_OQ);
  m = select(big, mul(m, set1(0.5)), m);
  e = select(big, add(e, set1(1.0)), e);

  const V s = div(sub(m, set1(1.0)), add(m, set1(1.0)));
  const V s2 = mul(s, s);
  V poly = set1(1.0 / 23.0);
  for (int k = 21; k >= 1; k -= 2) poly = add(mul(poly, s2), set1(1.0 / k));
  const V log_m = mul(set1(2.0), mul(s, poly));

  constexpr double ln2_hi = 6.93147180369123816490e-01;
  constexpr double ln2_lo = 1.90821492927058770002e-10;
  return add(mul(e, set1(ln2_hi)), add(mul(e, set1(ln2_lo)), log_m));
}

// Mirrors entropy_from_radius().
V entropy(V r) {
  const V one = set1(1.0);
  const V pure = _mm256_cmp_pd(sub(one, r), set1(1e-12), _CMP_LT_OQ);
  const V zero_r = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_EQ_OQ);
  const V safe = select(_mm256_or_pd(pure, zero_r), set1(0.5), r);
  const V omr = sub(one, safe);
  const V opr = add(one, safe);
  const V h = sub(sub(set1(std::numbers::ln2), mul(set1(0.5), vlog(mul(omr, opr)))),
                  mul(mul(set1(0.5), safe), vlog(div(opr, omr))));
  return select(pure, _mm256_setzero_pd(), select(zero_r, set1(std::numbers::ln2), h));
}

}  // namespace

void distances_avx2(const BlochColumns& a, const BlochColumns& b, const DistanceColumns& out) {
  const std::size_t n = a.size();
  const std::size_t vec_end = n - n % 4;

  const V zero = _mm256_setzero_pd();
  const V one = set1(1.0);
  const V half = set1(0.5);
  const V two = set1(2.0);

  for (std::size_t i = 0; i < vec_end; i += 4) {
    const V x1 = _mm256_loadu_pd(&a.x[i]);
    const V y1 = _mm256_loadu_pd(&a.y[i]);
    const V z1 = _mm256_loadu_pd(&a.z[i]);
    const V x2 = _mm256_loadu_pd(&b.x[i]);
    const V y2 = _mm256_loadu_pd(&b.y[i]);
    const V z2 = _mm256_loadu_pd(&b.z[i]);

    const V dx = sub(x1, x2);
    const V dy = sub(y1, y2);
    const V dz = sub(z1, z2);
    const V dn2 = norm2(dx, dy, dz);
    const V dn = vsqrt(dn2);
    _mm256_storeu_pd(&out.d_t[i], mul(half, dn));
    _mm256_storeu_pd(&out.d_hs[i], div(dn, set1(std::numbers::sqrt2)));

    const V n1sq = norm2(x1, y1, z1);
    const V n2sq = norm2(x2, y2, z2);
    const V n1 = vmin(one, vsqrt(n1sq));
    const V n2 = vmin(one, vsqrt(n2sq));
    const V snap = set1(4.0 * numerics::kRankSnap);
    const V def1 = sub(one, n1sq);
    const V def2 = sub(one, n2sq);
    const V omr1 = select(_mm256_cmp_pd(def1, snap, _CMP_LT_OQ), zero, def1);
    const V omr2 = select(_mm256_cmp_pd(def2, snap, _CMP_LT_OQ), zero, def2);
    const V dotp = add(add(mul(x1, x2), mul(y1, y2)), mul(z1, z2));

    // Bures.
    const V root = vsqrt(mul(omr1, omr2));
    const V den = add(sub(one, dotp), root);
    const V cx = sub(mul(y1, z2), mul(z1, y2));
    const V cy = sub(mul(z1, x2), mul(x1, z2));
    const V cz = sub(mul(x1, y2), mul(y1, x2));
    const V num = vmax(zero, sub(dn2, norm2(cx, cy, cz)));
    const V den_ok = _mm256_cmp_pd(den, zero, _CMP_GT_OQ);
    const V safe_den = select(den_ok, den, one);
    const V infid = select(den_ok, vmin(one, div(mul(half, num), safe_den)), zero);
    const V omsf = div(infid, add(one, vsqrt(sub(one, infid))));
    _mm256_storeu_pd(&out.d_b[i], vsqrt(mul(two, omsf)));

    // Hellinger.
    const V s1 = add(vsqrt(mul(half, add(one, n1))), vsqrt(div(omr1, mul(two, add(one, n1)))));
    const V s2 = add(vsqrt(mul(half, add(one, n2))), vsqrt(div(omr2, mul(two, add(one, n2)))));
    const V k1 = div(half, s1);
    const V k2 = div(half, s2);
    const V da = sub(mul(half, s1), mul(half, s2));
    const V bx = sub(mul(k1, x1), mul(k2, x2));
    const V by = sub(mul(k1, y1), mul(k2, y2));
    const V bz = sub(mul(k1, z1), mul(k2, z2));
    _mm256_storeu_pd(&out.d_h[i], vsqrt(mul(two, add(mul(da, da), norm2(bx, by, bz)))));

    // Jensen-Shannon.
    const V mx = mul(half, add(x1, x2));
    const V my = mul(half, add(y1, y2));
    const V mz = mul(half, add(z1, z2));
    const V js = sub(entropy(vsqrt(norm2(mx, my, mz))), mul(half, add(entropy(n1), entropy(n2))));
    const V bad = _mm256_cmp_pd(js, set1(-kStateTol), _CMP_LT_OQ);
    if (_mm256_movemask_pd(bad) != 0)
      throw DomainError("js_distance: negative Jensen-Shannon divergence near index " +
                        std::to_string(i));
    _mm256_storeu_pd(&out.d_js[i], vsqrt(vmax(zero, js)));
  }

  if (vec_end < n) {
    const BlochColumns ta{a.x.subspan(vec_end), a.y.subspan(vec_end), a.z.subspan(vec_end)};
    const BlochColumns tb{b.x.subspan(vec_end), b.y.subspan(vec_end), b.z.subspan(vec_end)};
    const DistanceColumns to{out.d_t.subspan(vec_end), out.d_hs.subspan(vec_end),
                             out.d_b.subspan(vec_end), out.d_h.subspan(vec_end),
                             out.d_js.subspan(vec_end)};
    distances_scalar(ta, tb, to);
  }
}

}  // namespace qdist::kernels
