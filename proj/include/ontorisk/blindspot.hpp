#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontorisk/ontology.hpp"

namespace ontorisk {

/// Output of the ontological difference operator: what the ideal contains
/// that the actual ontology does not.
struct BlindSpot {
    std::set<NodeRef> missing_nodes;                 // V_ideal \ V_actual
    std::set<EdgeRef> missing_edges;                 // E_ideal \ E_actual
    std::map<NodeRef, double> delta_w;               // shared nodes, max(0, Wi - Wa) > 0

    bool empty() const {
        return missing_nodes.empty() && missing_edges.empty() && delta_w.empty();
    }
    bool operator==(const BlindSpot&) const = default;
};

struct SeverityReport {
    double sigma = 0.0;
    double node_absence_term = 0.0;
    double causal_absence_term = 0.0;
    double weight_suppression_term = 0.0;
    double sigma_max = 0.0;

    bool operator==(const SeverityReport&) const = default;
};

/// Difference operator. Both ontologies must be valid (ValidationError
/// otherwise). A stage mismatch is reported through `warnings` when given,
/// never as a failure. delta_w keeps only strictly positive deviations.
BlindSpot diff(const Ontology& ideal, const Ontology& actual,
               std::vector<std::string>* warnings = nullptr);

/// Severity of the empty-actual blind spot against `ideal`:
/// sum of omega(v) over all nodes plus omega(e)*rho(e) over all edges.
/// This is the supremum of sigma over all actual ontologies.
double sigma_max_of(const Ontology& ideal);

/// Blind-spot severity per the three-term decomposition. Every missing edge
/// must carry weight and rho in the ideal, and every suppressed shared node
/// must carry phi; IncompleteIdealError names the offending element.
/// sigma_max is computed from the ideal unless an override is supplied.
SeverityReport severity(const BlindSpot& bs, const Ontology& ideal);
SeverityReport severity(const BlindSpot& bs, const Ontology& ideal, double sigma_max_override);

}  // namespace ontorisk
