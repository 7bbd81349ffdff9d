#include "ontorisk/kernels.hpp"

// AVX2 variants. Lane j of the accumulator register holds exactly the
// stripe-j partial sum of the scalar reference (element i goes to lane
// i mod 4, tail elements included), and the horizontal reduction uses the
// same (p0+p1)+(p2+p3) order, so results are bit-identical to the scalar
// kernels. No FMA: the reference multiplies then adds, and fusing would
// change rounding.

#include <immintrin.h>

namespace ontorisk::kernels::detail {

double squared_distance_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (std::size_t i = n4; i < n; ++i) {
        const double d = a[i] - b[i];
        lane[i & 3] += d * d;
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (std::size_t i = n4; i < n; ++i) lane[i & 3] += a[i] * b[i];
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (std::size_t i = n4; i < n; ++i) lane[i & 3] += x[i];
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace ontorisk::kernels::detail
