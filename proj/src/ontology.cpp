#include "ontorisk/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ontorisk {

namespace {

constexpr double kSumTolerance = 1e-9;

std::string node_loc(const std::string& dim, const std::string& id) {
    return dim + "/" + id;
}

std::string edge_loc(const std::string& dim, const std::string& s, const std::string& t) {
    return dim + "/" + s + "->" + t;
}

void check_unit_interval(std::vector<ValidationIssue>& issues, const std::optional<double>& v,
                         const char* field, const std::string& loc) {
    if (v && (*v < 0.0 || *v > 1.0 || !std::isfinite(*v))) {
        issues.push_back({std::string(field) + "_out_of_range", loc,
                          std::string(field) + " must lie in [0,1]"});
    }
}

void check_nonnegative(std::vector<ValidationIssue>& issues, const std::optional<double>& v,
                       const char* field, const std::string& loc) {
    if (v && (*v < 0.0 || !std::isfinite(*v))) {
        issues.push_back({std::string(field) + "_negative", loc,
                          std::string(field) + " must be >= 0"});
    }
}

void check_positive(std::vector<ValidationIssue>& issues, const std::optional<double>& v,
                    const char* field, const std::string& loc) {
    if (v && (*v <= 0.0 || !std::isfinite(*v))) {
        issues.push_back({std::string(field) + "_not_positive", loc,
                          std::string(field) + " must be > 0"});
    }
}

}  // namespace

const ConceptNode* DimensionGraph::find_node(std::string_view id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

const CausalEdge* DimensionGraph::find_edge(std::string_view source, std::string_view target) const {
    for (const auto& e : edges)
        if (e.source == source && e.target == target) return &e;
    return nullptr;
}

const DimensionGraph* Ontology::find_dimension(const std::string& label) const {
    auto it = dimensions.find(label);
    return it == dimensions.end() ? nullptr : &it->second;
}

const ConceptNode* Ontology::find_node(const NodeRef& ref) const {
    const DimensionGraph* g = find_dimension(ref.dimension);
    return g ? g->find_node(ref.id) : nullptr;
}

bool Ontology::has_edge(const EdgeRef& ref) const {
    const DimensionGraph* g = find_dimension(ref.dimension);
    return g && g->has_edge(ref.source, ref.target);
}

void Ontology::canonicalize() {
    for (auto& [label, g] : dimensions) {
        g.dimension = label;
        std::sort(g.nodes.begin(), g.nodes.end(),
                  [](const ConceptNode& a, const ConceptNode& b) { return a.id < b.id; });
        std::sort(g.edges.begin(), g.edges.end(), [](const CausalEdge& a, const CausalEdge& b) {
            return std::tie(a.source, a.target) < std::tie(b.source, b.target);
        });
    }
}

ValidationReport validate(const Ontology& o, OntologyRole role) {
    ValidationReport report;
    auto& issues = report.issues;

    if (o.stage < 0)
        issues.push_back({"stage_negative", "ontology", "stage must be >= 0"});

    for (const auto& [dim, g] : o.dimensions) {
        if (!g.dimension.empty() && g.dimension != dim)
            issues.push_back({"dimension_label_mismatch", dim,
                              "graph labeled '" + g.dimension + "' stored under '" + dim + "'"});

        std::set<std::string> ids;
        double node_sum = 0.0;
        for (const auto& n : g.nodes) {
            const std::string loc = node_loc(dim, n.id);
            if (!ids.insert(n.id).second)
                issues.push_back({"duplicate_node", loc, "duplicate node id within dimension"});
            if (n.weight < 0.0 || n.weight > 1.0 || !std::isfinite(n.weight))
                issues.push_back({"weight_out_of_range", loc, "weight must lie in [0,1]"});
            node_sum += n.weight;
            check_unit_interval(issues, n.omega, "omega", loc);
            check_unit_interval(issues, n.phi, "phi", loc);
            check_unit_interval(issues, n.transferability, "transferability", loc);
            check_nonnegative(issues, n.tau_optimal, "tau_optimal", loc);
            check_nonnegative(issues, n.delta_tau_max, "delta_tau_max", loc);
            check_nonnegative(issues, n.tau_acquire, "tau_acquire", loc);
            check_positive(issues, n.c0, "c0", loc);
            check_positive(issues, n.lambda, "lambda", loc);
            if (role == OntologyRole::ideal) {
                if (!n.omega)
                    issues.push_back({"missing_ideal_field", loc, "ideal-role node lacks omega"});
                if (!n.phi)
                    issues.push_back({"missing_ideal_field", loc, "ideal-role node lacks phi"});
            }
        }
        if (std::abs(node_sum - 1.0) > kSumTolerance) {
            std::ostringstream msg;
            msg << "node weights sum to " << node_sum << ", expected 1";
            issues.push_back({"node_weight_sum", dim, msg.str()});
        }

        std::set<std::pair<std::string, std::string>> seen_edges;
        double edge_sum = 0.0;
        bool any_edge_weight = false;
        for (const auto& e : g.edges) {
            const std::string loc = edge_loc(dim, e.source, e.target);
            if (!seen_edges.insert({e.source, e.target}).second)
                issues.push_back({"duplicate_edge", loc, "duplicate (source, target) pair"});
            if (!ids.count(e.source))
                issues.push_back({"dangling_edge", loc, "source node does not exist"});
            if (!ids.count(e.target))
                issues.push_back({"dangling_edge", loc, "target node does not exist"});
            check_unit_interval(issues, e.weight, "weight", loc);
            check_unit_interval(issues, e.rho, "rho", loc);
            if (e.weight) {
                any_edge_weight = true;
                edge_sum += *e.weight;
            }
            if (role == OntologyRole::ideal) {
                if (!e.weight)
                    issues.push_back({"missing_ideal_field", loc, "ideal-role edge lacks weight"});
                if (!e.rho)
                    issues.push_back({"missing_ideal_field", loc, "ideal-role edge lacks rho"});
            }
        }
        if (any_edge_weight && std::abs(edge_sum - 1.0) > kSumTolerance) {
            std::ostringstream msg;
            msg << "edge weights sum to " << edge_sum << ", expected 1";
            issues.push_back({"edge_weight_sum", dim, msg.str()});
        }
    }
    return report;
}

DimensionGraph normalize_weights(const DimensionGraph& g) {
    double node_sum = 0.0;
    for (const auto& n : g.nodes) node_sum += n.weight;
    if (node_sum <= 0.0)
        throw DegenerateGraphError("dimension '" + g.dimension +
                                   "': all node weights are zero, cannot normalize");

    DimensionGraph out = g;
    for (auto& n : out.nodes) n.weight /= node_sum;

    double edge_sum = 0.0;
    for (const auto& e : out.edges)
        if (e.weight) edge_sum += *e.weight;
    if (edge_sum > 0.0) {
        for (auto& e : out.edges)
            if (e.weight) *e.weight /= edge_sum;
    }
    return out;
}

double mean_dimension_weight(const Ontology& o, const std::string& d) {
    const DimensionGraph* g = o.find_dimension(d);
    if (!g || g->nodes.empty())
        throw AbsentDimensionError("dimension '" + d + "' is missing or empty");
    double sum = 0.0;
    for (const auto& n : g->nodes) sum += n.weight;
    return sum / static_cast<double>(g->nodes.size());
}

std::map<std::string, double> dimension_mean_weights(const Ontology& o) {
    std::map<std::string, double> means;
    for (const auto& [dim, g] : o.dimensions) {
        (void)g;
        means[dim] = mean_dimension_weight(o, dim);
    }
    return means;
}

}  // namespace ontorisk
