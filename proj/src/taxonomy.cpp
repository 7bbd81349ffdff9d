#include "ontorisk/taxonomy.hpp"

#include <algorithm>
#include <cmath>

namespace ontorisk {

namespace {

void check_open_unit(const char* name, double v) {
    if (!(v > 0.0 && v < 1.0))
        throw ConfigError(std::string(name) + " must lie strictly in (0,1)");
}

}  // namespace

void TaxonomyThresholds::check() const {
    check_open_unit("eps_dom", eps_dom);
    check_open_unit("eps_str", eps_str);
    check_open_unit("eps_wt", eps_wt);
    check_open_unit("eps_act", eps_act);
}

std::set<std::string> classify_domain_blindness(const Ontology& ideal, const Ontology& actual,
                                                double eps_dom) {
    std::set<std::string> flagged;
    for (const auto& [dim, g] : ideal.dimensions) {
        if (g.nodes.empty())
            throw DegenerateIdealError("ideal dimension '" + dim + "' has zero nodes");
        const DimensionGraph* ag = actual.find_dimension(dim);
        const double ratio = static_cast<double>(ag ? ag->nodes.size() : 0) /
                             static_cast<double>(g.nodes.size());
        if (ratio < eps_dom) flagged.insert(dim);
    }
    return flagged;
}

std::set<EdgeRef> classify_structural_blindness(const Ontology& ideal, const Ontology& actual,
                                                double eps_str) {
    std::set<EdgeRef> flagged;
    for (const auto& [dim, g] : ideal.dimensions) {
        const DimensionGraph* ag = actual.find_dimension(dim);
        for (const auto& e : g.edges) {
            if (!e.rho)
                throw IncompleteIdealError("ideal edge " + dim + "/" + e.source + "->" + e.target +
                                           " lacks rho");
            if (!ag) continue;
            if (ag->has_node(e.source) && ag->has_node(e.target) &&
                !ag->has_edge(e.source, e.target) && *e.rho > eps_str) {
                flagged.insert({dim, e.source, e.target});
            }
        }
    }
    return flagged;
}

std::set<NodeRef> classify_weight_blindness(const Ontology& ideal, const Ontology& actual,
                                            double eps_wt, double eps_act) {
    std::set<NodeRef> flagged;
    for (const auto& [dim, g] : ideal.dimensions) {
        const DimensionGraph* ag = actual.find_dimension(dim);
        if (!ag) continue;
        for (const auto& n : g.nodes) {
            const ConceptNode* an = ag->find_node(n.id);
            if (!an) continue;
            const double dw = std::max(0.0, n.weight - an->weight);
            if (dw > eps_wt && an->weight < eps_act) flagged.insert({dim, n.id});
        }
    }
    return flagged;
}

TemporalClassification classify_temporal_blindness(const Ontology& actual) {
    TemporalClassification out;
    for (const auto& [dim, g] : actual.dimensions) {
        for (const auto& n : g.nodes) {
            const int present = (n.tau_acquire ? 1 : 0) + (n.tau_optimal ? 1 : 0) +
                                (n.delta_tau_max ? 1 : 0);
            if (present == 0) continue;
            if (present < 3) {
                out.unevaluated.insert({dim, n.id});
                continue;
            }
            if (*n.tau_acquire > *n.tau_optimal + *n.delta_tau_max)
                out.flagged.insert({dim, n.id});
        }
    }
    return out;
}

TaxonomyReport classify(const Ontology& ideal, const Ontology& actual,
                        const TaxonomyThresholds& thresholds) {
    thresholds.check();
    TaxonomyReport report;
    report.type1_dimensions = classify_domain_blindness(ideal, actual, thresholds.eps_dom);
    report.type2_edges = classify_structural_blindness(ideal, actual, thresholds.eps_str);
    report.type3_nodes =
        classify_weight_blindness(ideal, actual, thresholds.eps_wt, thresholds.eps_act);
    TemporalClassification temporal = classify_temporal_blindness(actual);
    report.type4_nodes = std::move(temporal.flagged);
    report.type4_unevaluated = std::move(temporal.unevaluated);
    return report;
}

double remediation_cost(const ConceptNode& v, double tau) {
    if (!v.c0) throw IncompleteNodeError("node '" + v.id + "' lacks c0");
    if (!v.lambda) throw IncompleteNodeError("node '" + v.id + "' lacks lambda");
    if (!v.tau_optimal) throw IncompleteNodeError("node '" + v.id + "' lacks tau_optimal");
    if (*v.c0 <= 0.0) throw IncompleteNodeError("node '" + v.id + "': c0 must be > 0");
    if (*v.lambda <= 0.0) throw IncompleteNodeError("node '" + v.id + "': lambda must be > 0");
    return *v.c0 * std::exp(*v.lambda * std::max(0.0, tau - *v.tau_optimal));
}

}  // namespace ontorisk
