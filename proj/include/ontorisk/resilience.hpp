#pragma once

#include <cstddef>

#include "ontorisk/ontology.hpp"

namespace ontorisk {

struct ResilienceInputs {
    double sigma = 0.0;
    double sigma_max = 0.0;
    double max_mean_weight = 0.0;
    double switch_cost = 0.0;
    double omega_budget = 0.0;
    double epsilon = 0.0;

    bool operator==(const ResilienceInputs&) const = default;
};

struct ResilienceReport {
    double res = 0.0;
    double completeness = 0.0;  // 1 - sigma/sigma_max
    double balance = 0.0;       // normalized, clamped to (0,1]
    double balance_raw = 0.0;   // 1 - max_d w + epsilon, before normalization
    double mobility = 0.0;      // 1 / (1 + max(0, switch_cost)/omega_budget)
    std::size_t dimension_count = 0;
    ResilienceInputs inputs;

    bool operator==(const ResilienceReport&) const = default;
};

/// Res = completeness * balance * mobility.
///
/// The balance factor is the raw (1 - max_d w + eps) divided by its value at
/// perfect balance, (1 - 1/|D| + eps), so that a perfectly balanced ontology
/// scores 1; the ratio is clamped to (0,1]. Mobility clamps negative switch
/// costs at zero. Preconditions (DomainBoundError): 0 <= sigma <= sigma_max,
/// sigma_max > 0, omega_budget > 0, epsilon > 0, at least one dimension with
/// at least one node, and no dimension mean weight above 1.
ResilienceReport resilience(double sigma, double sigma_max, const Ontology& actual,
                            double switch_cost, double omega_budget, double epsilon);

/// Same computation from already-extracted scalars (dimension count and the
/// maximum per-dimension mean weight).
ResilienceReport resilience_from_values(double sigma, double sigma_max, double max_mean_weight,
                                        std::size_t dimension_count, double switch_cost,
                                        double omega_budget, double epsilon);

}  // namespace ontorisk
