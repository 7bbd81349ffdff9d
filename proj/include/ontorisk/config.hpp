#pragma once

#include <optional>

#include "ontorisk/patterns.hpp"
#include "ontorisk/taxonomy.hpp"

namespace ontorisk {

/// Every threshold and constant the analysis pipeline takes, with documented
/// defaults. sigma_max is computed from the ideal ontology unless overridden.
struct AnalysisConfig {
    TaxonomyThresholds taxonomy;
    PatternConfig patterns;
    double epsilon = 1e-3;  // balance-factor floor in the resilience score
    std::optional<double> sigma_max_override;

    void check() const;
};

}  // namespace ontorisk
