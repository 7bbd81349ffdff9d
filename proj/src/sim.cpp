#include "ontorisk/sim.hpp"

#include <algorithm>
#include <cmath>

#include "ontorisk/kernels.hpp"
#include "ontorisk/rng.hpp"

namespace ontorisk {

namespace {

// Substream tags; the draw order within each stream is part of the
// determinism contract.
constexpr std::uint64_t kCentersTag = 1;
constexpr std::uint64_t kFailureTag = 2;
constexpr std::uint64_t kSuccessTag = 3;
constexpr std::uint64_t kEvalTag = 4;

struct Matrix {
    std::vector<double> data;
    std::size_t rows = 0;
    std::size_t cols = 0;

    Matrix(std::size_t r, std::size_t c) : data(r * c, 0.0), rows(r), cols(c) {}
    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

Matrix draw_centers(const SimConfig& cfg, std::uint64_t seed) {
    SplitMix64 rng = SplitMix64::stream(seed, kCentersTag);
    Matrix centers(static_cast<std::size_t>(cfg.n_patterns),
                   static_cast<std::size_t>(cfg.ds_dim));
    for (std::size_t p = 0; p < centers.rows; ++p) {
        double* c = centers.row(p);
        for (int j = 0; j < cfg.m_dim; ++j) c[j] = rng.next_uniform(-1.0, 1.0);
        // remaining ambient coordinates stay 0: the pattern subspace
    }
    return centers;
}

/// label[i] = i mod n_patterns; x = center + sigma * gaussian noise.
Matrix draw_cluster_members(const SimConfig& cfg, const Matrix& centers, std::uint64_t seed,
                            std::uint64_t tag, int count, std::vector<int>& labels) {
    SplitMix64 rng = SplitMix64::stream(seed, tag);
    Matrix xs(static_cast<std::size_t>(count), centers.cols);
    labels.resize(static_cast<std::size_t>(count));
    std::vector<double> noise(centers.cols);
    for (int i = 0; i < count; ++i) {
        const int label = i % cfg.n_patterns;
        labels[static_cast<std::size_t>(i)] = label;
        fill_gaussian(rng, noise.data(), noise.size());
        double* x = xs.row(static_cast<std::size_t>(i));
        const double* c = centers.row(static_cast<std::size_t>(label));
        for (std::size_t j = 0; j < centers.cols; ++j) x[j] = c[j] + cfg.noise_sigma * noise[j];
    }
    return xs;
}

Matrix draw_uniform_points(const SimConfig& cfg, const Matrix& centers, std::uint64_t seed,
                           int count, std::vector<int>& labels) {
    SplitMix64 rng = SplitMix64::stream(seed, kSuccessTag);
    Matrix xs(static_cast<std::size_t>(count), centers.cols);
    labels.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double* x = xs.row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < centers.cols; ++j) x[j] = rng.next_uniform(-1.0, 1.0);
        labels[static_cast<std::size_t>(i)] = static_cast<int>(
            kernels::nearest_row(x, centers.data.data(), centers.rows, centers.cols));
    }
    return xs;
}

Matrix class_centroids(const SimConfig& cfg, const Matrix& xs, const std::vector<int>& labels) {
    Matrix centroids(static_cast<std::size_t>(cfg.n_patterns), xs.cols);
    std::vector<double> counts(static_cast<std::size_t>(cfg.n_patterns), 0.0);
    for (std::size_t i = 0; i < xs.rows; ++i) {
        const auto p = static_cast<std::size_t>(labels[i]);
        counts[p] += 1.0;
        double* c = centroids.row(p);
        const double* x = xs.row(i);
        for (std::size_t j = 0; j < xs.cols; ++j) c[j] += x[j];
    }
    for (std::size_t p = 0; p < centroids.rows; ++p) {
        if (counts[p] == 0.0) continue;  // round-robin assignment: only when n < n_patterns
        double* c = centroids.row(p);
        for (std::size_t j = 0; j < xs.cols; ++j) c[j] /= counts[p];
    }
    return centroids;
}

}  // namespace

void SimConfig::check() const {
    if (m_dim < 1) throw ConfigError("m_dim must be >= 1");
    if (ds_dim < 1) throw ConfigError("ds_dim must be >= 1");
    if (m_dim > ds_dim)
        throw ConfigError("m_dim must not exceed ds_dim (the pattern subspace is embedded)");
    if (n_samples < 10) throw ConfigError("n_samples must be >= 10");
    if (n_patterns < 1) throw ConfigError("n_patterns must be >= 1");
    if (n_patterns > n_samples) throw ConfigError("n_patterns must not exceed n_samples");
    if (!(noise_sigma > 0.0)) throw ConfigError("noise_sigma must be > 0");
    if (eval_size < 1) throw ConfigError("eval_size must be >= 1");
    if (sweep_n_min < 10) throw ConfigError("sweep_n_min must be >= 10");
    if (sweep_n_max < sweep_n_min) throw ConfigError("sweep_n_max must be >= sweep_n_min");
    if (!(sweep_factor > 1.0)) throw ConfigError("sweep_factor must be > 1");
    if (sweep_seed_count < 1) throw ConfigError("sweep_seed_count must be >= 1");
}

TrialResult run_trial(const SimConfig& cfg, std::uint64_t seed) {
    cfg.check();

    const Matrix centers = draw_centers(cfg, seed);

    std::vector<int> failure_labels;
    const Matrix failure_xs =
        draw_cluster_members(cfg, centers, seed, kFailureTag, cfg.n_samples, failure_labels);
    const Matrix centroids = class_centroids(cfg, failure_xs, failure_labels);

    std::vector<int> success_labels;
    const Matrix success_xs =
        cfg.matched_sampling
            ? draw_cluster_members(cfg, centers, seed, kSuccessTag, cfg.n_samples, success_labels)
            : draw_uniform_points(cfg, centers, seed, cfg.n_samples, success_labels);

    SplitMix64 eval_rng = SplitMix64::stream(seed, kEvalTag);
    std::vector<double> x(centers.cols);
    std::vector<double> noise(centers.cols);
    double failure_score = 0.0;
    double success_score = 0.0;
    for (int e = 0; e < cfg.eval_size; ++e) {
        const int pattern = static_cast<int>(
            eval_rng.next_below(static_cast<std::uint64_t>(cfg.n_patterns)));
        fill_gaussian(eval_rng, noise.data(), noise.size());
        const double* c = centers.row(static_cast<std::size_t>(pattern));
        for (std::size_t j = 0; j < centers.cols; ++j) x[j] = c[j] + cfg.noise_sigma * noise[j];
        const double alignment = eval_rng.next_unit();

        const int failure_guess = static_cast<int>(
            kernels::nearest_row(x.data(), centroids.data.data(), centroids.rows, centroids.cols));
        const int success_guess = success_labels[kernels::nearest_row(
            x.data(), success_xs.data.data(), success_xs.rows, success_xs.cols)];

        failure_score += failure_guess == pattern ? 1.0 : -alignment;
        success_score += success_guess == pattern ? 1.0 : -alignment;
    }

    const double scale = static_cast<double>(cfg.eval_size);
    return {failure_score / scale, success_score / scale};
}

BootstrapInterval bootstrap_mean_interval(const std::vector<double>& xs, int replicates,
                                          std::uint64_t seed) {
    if (xs.empty()) throw ConfigError("bootstrap over an empty sample");
    if (replicates < 1) throw ConfigError("bootstrap needs >= 1 replicate");

    double total = 0.0;
    for (double x : xs) total += x;
    const double mean = total / static_cast<double>(xs.size());

    SplitMix64 rng = SplitMix64::stream(seed, 0xB007);
    std::vector<double> means(static_cast<std::size_t>(replicates), 0.0);
    for (auto& m : means) {
        double s = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) s += xs[rng.next_below(xs.size())];
        m = s / static_cast<double>(xs.size());
    }
    std::sort(means.begin(), means.end());
    const auto pick = [&](double q) {
        const double pos = q * static_cast<double>(means.size() - 1);
        return means[static_cast<std::size_t>(std::llround(pos))];
    };
    return {mean, (pick(0.975) - pick(0.025)) / 2.0};
}

SimResult efficiency_experiment(const SimConfig& cfg) {
    cfg.check();
    if (cfg.seeds.empty()) throw ConfigError("seeds must be nonempty");

    SimResult result;
    result.config = cfg;

    std::vector<std::uint64_t> seeds = cfg.seeds;
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::vector<double> gaps;
    std::size_t positive = 0;
    double gap_total = 0.0;
    for (std::uint64_t seed : seeds) {
        const TrialResult t = run_trial(cfg, seed);
        const double gap = t.u_failure - t.u_success;
        result.per_seed.push_back({seed, t.u_failure, t.u_success, gap});
        gaps.push_back(gap);
        gap_total += gap;
        if (gap > 0.0) ++positive;
    }
    result.mean_gap = gap_total / static_cast<double>(seeds.size());
    result.gap_positive_fraction =
        static_cast<double>(positive) / static_cast<double>(seeds.size());
    result.gap_bootstrap = bootstrap_mean_interval(gaps, 1000, 0xB00757A9u);

    // Sample sweep on a geometric n grid over a deterministic seed subset.
    const std::size_t sweep_seeds =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.sweep_seed_count), seeds.size());
    result.sweep.target = cfg.sweep_target;
    for (int n = cfg.sweep_n_min; n <= cfg.sweep_n_max;
         n = std::max(n + 1, static_cast<int>(std::lround(n * cfg.sweep_factor)))) {
        SimConfig point_cfg = cfg;
        point_cfg.n_samples = n;
        double uf = 0.0;
        double us = 0.0;
        for (std::size_t s = 0; s < sweep_seeds; ++s) {
            const TrialResult t = run_trial(point_cfg, seeds[s]);
            uf += t.u_failure;
            us += t.u_success;
        }
        uf /= static_cast<double>(sweep_seeds);
        us /= static_cast<double>(sweep_seeds);
        result.sweep.curve.push_back({n, uf, us});
        if (!result.sweep.failure_crossing_n && uf >= cfg.sweep_target)
            result.sweep.failure_crossing_n = n;
        if (!result.sweep.success_crossing_n && us >= cfg.sweep_target)
            result.sweep.success_crossing_n = n;
    }
    if (result.sweep.failure_crossing_n && result.sweep.success_crossing_n) {
        result.sweep.ratio = static_cast<double>(*result.sweep.failure_crossing_n) /
                             static_cast<double>(*result.sweep.success_crossing_n);
    }
    return result;
}

}  // namespace ontorisk
