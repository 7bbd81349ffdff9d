#include "ontorisk/resilience.hpp"

#include <algorithm>

namespace ontorisk {

ResilienceReport resilience_from_values(double sigma, double sigma_max, double max_mean_weight,
                                        std::size_t dimension_count, double switch_cost,
                                        double omega_budget, double epsilon) {
    if (!(sigma_max > 0.0)) throw DomainBoundError("sigma_max must be > 0");
    if (sigma < 0.0) throw DomainBoundError("sigma must be >= 0");
    if (sigma > sigma_max) throw DomainBoundError("sigma must not exceed sigma_max");
    if (!(omega_budget > 0.0)) throw DomainBoundError("omega_budget must be > 0");
    if (!(epsilon > 0.0)) throw DomainBoundError("epsilon must be > 0");
    if (dimension_count == 0) throw DomainBoundError("at least one dimension is required");
    if (max_mean_weight > 1.0) throw DomainBoundError("max mean weight must not exceed 1");
    if (max_mean_weight < 0.0) throw DomainBoundError("max mean weight must be >= 0");

    ResilienceReport rep;
    rep.dimension_count = dimension_count;
    rep.inputs = {sigma, sigma_max, max_mean_weight, switch_cost, omega_budget, epsilon};

    rep.completeness = 1.0 - sigma / sigma_max;
    rep.balance_raw = 1.0 - max_mean_weight + epsilon;
    const double at_perfect_balance = 1.0 - 1.0 / static_cast<double>(dimension_count) + epsilon;
    rep.balance = std::min(1.0, rep.balance_raw / at_perfect_balance);
    rep.mobility = 1.0 / (1.0 + std::max(0.0, switch_cost) / omega_budget);
    rep.res = rep.completeness * rep.balance * rep.mobility;
    return rep;
}

ResilienceReport resilience(double sigma, double sigma_max, const Ontology& actual,
                            double switch_cost, double omega_budget, double epsilon) {
    if (actual.dimensions.empty()) throw DomainBoundError("ontology has no dimensions");
    double max_mean = 0.0;
    for (const auto& [dim, g] : actual.dimensions) {
        (void)g;
        max_mean = std::max(max_mean, mean_dimension_weight(actual, dim));
    }
    return resilience_from_values(sigma, sigma_max, max_mean, actual.dimensions.size(),
                                  switch_cost, omega_budget, epsilon);
}

}  // namespace ontorisk
