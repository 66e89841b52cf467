#include <immintrin.h>

#include <cmath>

#include "so3contact/kernels.hpp"

namespace so3contact::kernels {

namespace {

inline __m256d dot3(__m256d a1, __m256d a2, __m256d a3, __m256d b1, __m256d b2, __m256d b3) {
  return _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(a1, b1), _mm256_mul_pd(a2, b2)),
                       _mm256_mul_pd(a3, b3));
}

}  // namespace

// Compiled with -mavx2; only reached through the runtime dispatcher.
void orbit_kernel_avx2(const OrbitBlock& in, double scale, OrbitResult& out) {
  const std::size_t n = in.size();
  out.resize(n);
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d zero = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x1 = _mm256_loadu_pd(&in.x1[i]);
    const __m256d x2 = _mm256_loadu_pd(&in.x2[i]);
    const __m256d x3 = _mm256_loadu_pd(&in.x3[i]);
    const __m256d y1 = _mm256_loadu_pd(&in.y1[i]);
    const __m256d y2 = _mm256_loadu_pd(&in.y2[i]);
    const __m256d y3 = _mm256_loadu_pd(&in.y3[i]);

    const __m256d cx = _mm256_sub_pd(_mm256_mul_pd(y2, x3), _mm256_mul_pd(y3, x2));
    const __m256d cy = _mm256_sub_pd(_mm256_mul_pd(y3, x1), _mm256_mul_pd(y1, x3));
    const __m256d cz = _mm256_sub_pd(_mm256_mul_pd(y1, x2), _mm256_mul_pd(y2, x1));
    _mm256_storeu_pd(&out.mu_x[i], _mm256_mul_pd(vscale, cx));
    _mm256_storeu_pd(&out.mu_y[i], _mm256_mul_pd(vscale, cy));
    _mm256_storeu_pd(&out.mu_z[i], _mm256_mul_pd(vscale, cz));

    const __m256d xx = dot3(x1, x2, x3, x1, x2, x3);
    const __m256d yy = dot3(y1, y2, y3, y1, y2, y3);
    const __m256d xy = dot3(x1, x2, x3, y1, y2, y3);
    const __m256d diff = _mm256_sub_pd(xx, yy);
    const __m256d disc = _mm256_add_pd(_mm256_mul_pd(diff, diff),
                                       _mm256_mul_pd(four, _mm256_mul_pd(xy, xy)));
    const __m256d lambda_max =
        _mm256_mul_pd(half, _mm256_add_pd(_mm256_add_pd(xx, yy), _mm256_sqrt_pd(disc)));
    const __m256d cross = _mm256_sqrt_pd(dot3(cx, cy, cz, cx, cy, cz));
    const __m256d ratio = _mm256_div_pd(cross, _mm256_sqrt_pd(lambda_max));
    const __m256d positive = _mm256_cmp_pd(lambda_max, zero, _CMP_GT_OQ);
    _mm256_storeu_pd(&out.sigma_min[i], _mm256_and_pd(positive, ratio));
  }

  if (i < n) {
    OrbitBlock tail;
    tail.resize(n - i);
    for (std::size_t j = i; j < n; ++j) {
      tail.x1[j - i] = in.x1[j];
      tail.x2[j - i] = in.x2[j];
      tail.x3[j - i] = in.x3[j];
      tail.y1[j - i] = in.y1[j];
      tail.y2[j - i] = in.y2[j];
      tail.y3[j - i] = in.y3[j];
    }
    OrbitResult rest;
    orbit_kernel_scalar(tail, scale, rest);
    for (std::size_t j = i; j < n; ++j) {
      out.mu_x[j] = rest.mu_x[j - i];
      out.mu_y[j] = rest.mu_y[j - i];
      out.mu_z[j] = rest.mu_z[j - i];
      out.sigma_min[j] = rest.sigma_min[j - i];
    }
  }
}

}  // namespace so3contact::kernels
