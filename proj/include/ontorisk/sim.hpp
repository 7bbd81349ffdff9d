#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontorisk/errors.hpp"

namespace ontorisk {

/// Synthetic check of the failure-vs-success sample-efficiency claim.
///
/// Per (config, seed): scatter n_patterns cluster centers inside an
/// m_dim-dimensional subspace of a ds_dim ambient space. The failure agent
/// trains on n noisy cluster members (round-robin cluster assignment, so
/// every pattern is covered whenever n >= n_patterns) and classifies by
/// nearest class centroid. The success agent trains on n points drawn
/// uniformly over [-1,1]^ds_dim, each labeled with its nearest true center,
/// and answers with the label of the nearest training point. Both face
/// eval_size held-out scenarios (cluster draw + alignment flag in [0,1]):
/// a correct pattern call earns reward 1, a wrong one earns penalty equal
/// to the alignment. Utility is mean reward minus mean penalty.
///
/// matched_sampling redraws the success training set from the same noisy
/// cluster process as the failure set. Together with m_dim == ds_dim this
/// removes the premise that failure data concentrates on a lower-dimensional
/// space, which is the null configuration: neither agent should hold a
/// systematic advantage there.
struct SimConfig {
    int m_dim = 5;
    int ds_dim = 50;
    int n_samples = 200;
    int n_patterns = 5;
    double noise_sigma = 0.1;
    std::vector<std::uint64_t> seeds;
    int eval_size = 200;
    bool matched_sampling = false;

    // sample sweep (geometric grid, smallest n whose mean utility crosses
    // the target)
    int sweep_n_min = 10;
    int sweep_n_max = 640;
    double sweep_factor = 2.0;
    double sweep_target = 0.5;
    int sweep_seed_count = 20;

    void check() const;  // ConfigError on any violated invariant
};

struct TrialResult {
    double u_failure = 0.0;
    double u_success = 0.0;
};

/// Fully deterministic in (cfg, seed): same inputs, bit-identical outputs.
TrialResult run_trial(const SimConfig& cfg, std::uint64_t seed);

struct SeedOutcome {
    std::uint64_t seed = 0;
    double u_failure = 0.0;
    double u_success = 0.0;
    double gap = 0.0;  // u_failure - u_success
    bool operator==(const SeedOutcome&) const = default;
};

struct SweepPoint {
    int n = 0;
    double u_failure = 0.0;
    double u_success = 0.0;
    bool operator==(const SweepPoint&) const = default;
};

struct SweepResult {
    double target = 0.0;
    std::vector<SweepPoint> curve;
    std::optional<int> failure_crossing_n;  // absent: never crossed on the grid
    std::optional<int> success_crossing_n;
    std::optional<double> ratio;            // failure n / success n, both finite
    bool operator==(const SweepResult&) const = default;
};

struct BootstrapInterval {
    double mean = 0.0;
    double half_width = 0.0;  // half the central 95% percentile spread
    bool operator==(const BootstrapInterval&) const = default;
};

struct SimResult {
    std::string generator = "splitmix64";
    SimConfig config;
    std::vector<SeedOutcome> per_seed;  // sorted by seed
    double mean_gap = 0.0;
    double gap_positive_fraction = 0.0;
    BootstrapInterval gap_bootstrap;    // 95%, 1000 replicates, fixed seed
    SweepResult sweep;
};

/// Percentile bootstrap of the sample mean (95%, deterministic resampling).
BootstrapInterval bootstrap_mean_interval(const std::vector<double>& xs, int replicates,
                                          std::uint64_t seed);

/// run_trial per seed plus the sample sweep over the first
/// sweep_seed_count sorted seeds.
SimResult efficiency_experiment(const SimConfig& cfg);

}  // namespace ontorisk
