#include "ontorisk/kernels.hpp"

#include <cstdlib>
#include <string>

#include "ontorisk/errors.hpp"

namespace ontorisk::kernels {

namespace {

struct Table {
    double (*squared_distance)(const double*, const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
};

constexpr Table kScalar{detail::squared_distance_scalar, detail::dot_scalar, detail::sum_scalar};
#ifdef ONTORISK_HAVE_AVX2
constexpr Table kAvx2{detail::squared_distance_avx2, detail::dot_avx2, detail::sum_avx2};
#endif

struct State {
    Variant variant;
    Table table;
};

State pick_default() {
#ifdef ONTORISK_HAVE_AVX2
    bool want_avx2 = __builtin_cpu_supports("avx2");
    if (const char* env = std::getenv("ONTORISK_KERNEL")) {
        const std::string name(env);
        if (name == "scalar") want_avx2 = false;
        else if (name == "avx2" && __builtin_cpu_supports("avx2")) want_avx2 = true;
    }
    if (want_avx2) return {Variant::avx2, kAvx2};
#endif
    return {Variant::scalar, kScalar};
}

State& state() {
    static State s = pick_default();
    return s;
}

}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::scalar: return "scalar";
        case Variant::avx2: return "avx2";
    }
    return "?";
}

bool supported(Variant v) {
    switch (v) {
        case Variant::scalar: return true;
        case Variant::avx2:
#ifdef ONTORISK_HAVE_AVX2
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Variant active_variant() { return state().variant; }

void force_variant(Variant v) {
    if (!supported(v))
        throw ConfigError(std::string("kernel variant '") + variant_name(v) +
                          "' is not supported on this machine");
    switch (v) {
        case Variant::scalar:
            state() = {Variant::scalar, kScalar};
            break;
        case Variant::avx2:
#ifdef ONTORISK_HAVE_AVX2
            state() = {Variant::avx2, kAvx2};
#endif
            break;
    }
}

double squared_distance(const double* a, const double* b, std::size_t n) {
    return state().table.squared_distance(a, b, n);
}

double dot(const double* a, const double* b, std::size_t n) {
    return state().table.dot(a, b, n);
}

double sum(const double* x, std::size_t n) { return state().table.sum(x, n); }

std::size_t nearest_row(const double* q, const double* rows, std::size_t n_rows,
                        std::size_t dim) {
    std::size_t best = 0;
    double best_dist = squared_distance(q, rows, dim);
    for (std::size_t r = 1; r < n_rows; ++r) {
        const double d = squared_distance(q, rows + r * dim, dim);
        if (d < best_dist) {
            best_dist = d;
            best = r;
        }
    }
    return best;
}

#ifndef ONTORISK_HAVE_AVX2
namespace detail {
double squared_distance_avx2(const double*, const double*, std::size_t) {
    throw ConfigError("avx2 kernels were not built on this platform");
}
double dot_avx2(const double*, const double*, std::size_t) {
    throw ConfigError("avx2 kernels were not built on this platform");
}
double sum_avx2(const double*, std::size_t) {
    throw ConfigError("avx2 kernels were not built on this platform");
}
}  // namespace detail
#endif

}  // namespace ontorisk::kernels
