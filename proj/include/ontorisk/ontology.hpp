#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ontorisk/errors.hpp"

namespace ontorisk {

/// Dimension-qualified node reference. A node id appearing in two dimensions
/// names two distinct concepts.
struct NodeRef {
    std::string dimension;
    std::string id;
    auto operator<=>(const NodeRef&) const = default;
};

struct EdgeRef {
    std::string dimension;
    std::string source;
    std::string target;
    auto operator<=>(const EdgeRef&) const = default;
};

/// A concept node. `weight` is the attention weight W(v). The remaining
/// fields are optional annotations: omega/phi make sense on the ideal side,
/// tau_acquire on the actual side, and the temporal constants (tau_optimal,
/// delta_tau_max, c0, lambda) wherever remediation is modeled.
struct ConceptNode {
    std::string id;
    double weight = 0.0;
    std::optional<double> omega;            // importance in the ideal ontology
    std::optional<double> phi;              // activation sensitivity
    std::optional<double> tau_optimal;      // years
    std::optional<double> delta_tau_max;    // years
    std::optional<double> c0;               // base remediation cost
    std::optional<double> lambda;           // decay rate, per year
    std::optional<double> tau_acquire;      // years
    std::optional<double> transferability;  // residual-value coefficient

    bool operator==(const ConceptNode&) const = default;

    /// omega(v) for severity purposes: the explicit annotation when present,
    /// otherwise the ideal-side weight (the two are one symbol in the model).
    double ideal_importance() const { return omega ? *omega : weight; }
};

struct CausalEdge {
    std::string source;
    std::string target;
    std::optional<double> weight;  // omega(e), ideal side
    std::optional<double> rho;     // causal criticality, ideal side

    bool operator==(const CausalEdge&) const = default;
};

struct DimensionGraph {
    std::string dimension;
    std::vector<ConceptNode> nodes;
    std::vector<CausalEdge> edges;

    bool operator==(const DimensionGraph&) const = default;

    const ConceptNode* find_node(std::string_view id) const;
    const CausalEdge* find_edge(std::string_view source, std::string_view target) const;
    bool has_node(std::string_view id) const { return find_node(id) != nullptr; }
    bool has_edge(std::string_view s, std::string_view t) const { return find_edge(s, t) != nullptr; }
};

/// A stage-indexed, individual-tagged direct sum of per-dimension weighted
/// digraphs. No cross-dimension edges exist.
struct Ontology {
    std::string individual;
    std::int64_t stage = 0;
    std::string stage_label;
    std::map<std::string, double> background;
    std::map<std::string, DimensionGraph> dimensions;

    bool operator==(const Ontology&) const = default;

    const DimensionGraph* find_dimension(const std::string& label) const;
    const ConceptNode* find_node(const NodeRef& ref) const;
    bool has_node(const NodeRef& ref) const { return find_node(ref) != nullptr; }
    bool has_edge(const EdgeRef& ref) const;

    /// Sort nodes by id and edges by (source, target) in every dimension.
    /// Parsing and the builders do this so that aggregate sums and emitted
    /// JSON do not depend on construction order.
    void canonicalize();
};

enum class OntologyRole { actual, ideal };

/// Lists every invariant violation with its location. Violations are data,
/// not errors: an empty report means the ontology is valid. With the ideal
/// role, absent omega/phi/rho annotations are reported as well.
ValidationReport validate(const Ontology& o, OntologyRole role = OntologyRole::actual);

/// Rescale node weights to sum to 1 (and edge weights likewise when any edge
/// carries a positive weight), preserving proportions.
/// Throws DegenerateGraphError when all node weights are zero.
DimensionGraph normalize_weights(const DimensionGraph& g);

/// Arithmetic mean of node weights in dimension d (the w^d of the model).
/// Throws AbsentDimensionError when d is missing or empty.
double mean_dimension_weight(const Ontology& o, const std::string& d);

/// Mean node weight per dimension; errors on any empty dimension.
std::map<std::string, double> dimension_mean_weights(const Ontology& o);

}  // namespace ontorisk
