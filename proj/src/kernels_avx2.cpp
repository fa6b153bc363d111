// AVX2 kernel variants. This translation unit is compiled with -mavx2 and is
// only entered after __builtin_cpu_supports("avx2") succeeds at dispatch time.
//
// Elementwise kernels use mul/add/sub (no FMA) so each lane performs exactly
// the operations of the scalar reference. Reductions keep four lane
// accumulators and combine them ((l0+l1)+(l2+l3)) to match the reference's
// fixed order.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstddef>

namespace chromspec::kernels::detail {

void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vx = _mm256_loadu_pd(x + k);
        const __m256d vy = _mm256_loadu_pd(y + k);
        const __m256d nx = _mm256_sub_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vy));
        const __m256d ny = _mm256_add_pd(_mm256_mul_pd(vs, vx), _mm256_mul_pd(vc, vy));
        _mm256_storeu_pd(x + k, nx);
        _mm256_storeu_pd(y + k, ny);
    }
    for (; k < n; ++k) {
        const double xk = x[k];
        const double yk = y[k];
        x[k] = c * xk - s * yk;
        y[k] = s * xk + c * yk;
    }
}

void scaled_add_avx2(double* out, const double* a, const double* b, std::size_t n,
                     double scale) {
    const __m256d vscale = _mm256_set1_pd(scale);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d va = _mm256_loadu_pd(a + k);
        const __m256d vb = _mm256_loadu_pd(b + k);
        _mm256_storeu_pd(out + k, _mm256_add_pd(va, _mm256_mul_pd(vscale, vb)));
    }
    for (; k < n; ++k) out[k] = a[k] + scale * b[k];
}

double sum_squares_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d v = _mm256_loadu_pd(x + k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double out = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < n; ++k) out += x[k] * x[k];
    return out;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vx = _mm256_loadu_pd(x + k);
        const __m256d vy = _mm256_loadu_pd(y + k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(vx, vy));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double out = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < n; ++k) out += x[k] * y[k];
    return out;
}

} // namespace chromspec::kernels::detail

#endif // x86
