#include "ontorisk/kernels.hpp"

// Reference kernels. The striped four-accumulator pattern mirrors the AVX2
// lane layout exactly; see kernels.hpp for the contract.

namespace ontorisk::kernels::detail {

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc[i & 3] += d * d;
    }
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc[i & 3] += a[i] * b[i];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double sum_scalar(const double* x, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc[i & 3] += x[i];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace ontorisk::kernels::detail
