#pragma once

#include <cstddef>

namespace ontorisk::kernels {

/// Dense arithmetic primitives behind the simulation's inner loops, with a
/// scalar reference and an AVX2 variant selected at runtime.
///
/// Every variant accumulates into four interleaved partial sums (element i
/// lands in partial i mod 4) and combines them as (p0+p1)+(p2+p3), so all
/// variants return bit-identical doubles. Results therefore do not depend on
/// which variant the dispatcher picks.
enum class Variant { scalar, avx2 };

const char* variant_name(Variant v);
bool supported(Variant v);

/// Variant in use. Chosen once: the ONTORISK_KERNEL environment variable
/// ("scalar" or "avx2") when set and supported, otherwise the widest
/// supported variant.
Variant active_variant();

/// Override the dispatched variant. ConfigError if unsupported here.
void force_variant(Variant v);

double squared_distance(const double* a, const double* b, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);

/// Index of the row (length `dim`, stored contiguously) closest to `q` in
/// squared euclidean distance; ties resolve to the lowest index.
std::size_t nearest_row(const double* q, const double* rows, std::size_t n_rows, std::size_t dim);

namespace detail {
double squared_distance_scalar(const double* a, const double* b, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
double sum_scalar(const double* x, std::size_t n);
double squared_distance_avx2(const double* a, const double* b, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
double sum_avx2(const double* x, std::size_t n);
}  // namespace detail

}  // namespace ontorisk::kernels
