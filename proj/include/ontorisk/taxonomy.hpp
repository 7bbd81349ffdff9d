#pragma once

#include <set>
#include <string>

#include "ontorisk/ontology.hpp"

namespace ontorisk {

/// Classifier thresholds. eps_dom follows the conventional 0.15 default;
/// the rest are engine defaults meant to be overridden per deployment.
struct TaxonomyThresholds {
    double eps_dom = 0.15;  // dimension sparsity
    double eps_str = 0.5;   // structural criticality
    double eps_wt = 0.3;    // weight deviation
    double eps_act = 0.1;   // behavioral activation

    void check() const;  // ConfigError unless every value lies strictly in (0,1)
};

struct TaxonomyReport {
    std::set<std::string> type1_dimensions;  // domain blindness
    std::set<EdgeRef> type2_edges;           // structural blindness
    std::set<NodeRef> type3_nodes;           // weight blindness
    std::set<NodeRef> type4_nodes;           // temporal blindness
    std::set<NodeRef> type4_unevaluated;     // partial temporal metadata

    bool operator==(const TaxonomyReport&) const = default;
};

/// Type I: dimensions whose actual/ideal node-count ratio is strictly below
/// eps_dom. A dimension absent from actual has ratio 0. An ideal dimension
/// with zero nodes raises DegenerateIdealError.
std::set<std::string> classify_domain_blindness(const Ontology& ideal, const Ontology& actual,
                                                double eps_dom);

/// Type II: ideal edges whose endpoints both exist in actual, whose edge is
/// absent from actual, and whose rho strictly exceeds eps_str.
/// Missing rho raises IncompleteIdealError.
std::set<EdgeRef> classify_structural_blindness(const Ontology& ideal, const Ontology& actual,
                                                double eps_str);

/// Type III: shared nodes with deltaW strictly above eps_wt and actual
/// weight strictly below eps_act.
std::set<NodeRef> classify_weight_blindness(const Ontology& ideal, const Ontology& actual,
                                            double eps_wt, double eps_act);

struct TemporalClassification {
    std::set<NodeRef> flagged;
    std::set<NodeRef> unevaluated;  // carry some but not all of the three tau fields
};

/// Type IV: actual nodes acquired strictly after tau_optimal + delta_tau_max.
/// Only nodes carrying at least one temporal field are candidates; candidates
/// missing one of the three are listed as unevaluated instead of erroring.
TemporalClassification classify_temporal_blindness(const Ontology& actual);

TaxonomyReport classify(const Ontology& ideal, const Ontology& actual,
                        const TaxonomyThresholds& thresholds);

/// C(v, tau) = c0 * exp(lambda * max(0, tau - tau_optimal)).
/// IncompleteNodeError when c0, lambda or tau_optimal is absent.
double remediation_cost(const ConceptNode& v, double tau);

}  // namespace ontorisk
