#include "ontorisk/blindspot.hpp"

#include <sstream>

namespace ontorisk {

namespace {

void require_valid(const Ontology& o, const char* which) {
    ValidationReport report = validate(o);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << which << " ontology is invalid (" << report.issues.size() << " violation";
        if (report.issues.size() != 1) msg << "s";
        msg << "; first: " << report.issues.front().code << " at "
            << report.issues.front().location << ")";
        throw ValidationError(msg.str(), std::move(report));
    }
}

}  // namespace

BlindSpot diff(const Ontology& ideal, const Ontology& actual,
               std::vector<std::string>* warnings) {
    require_valid(ideal, "ideal");
    require_valid(actual, "actual");
    if (warnings && ideal.stage != actual.stage) {
        std::ostringstream msg;
        msg << "stage mismatch: ideal at stage " << ideal.stage << ", actual at stage "
            << actual.stage;
        warnings->push_back(msg.str());
    }

    BlindSpot bs;
    for (const auto& [dim, g] : ideal.dimensions) {
        const DimensionGraph* ag = actual.find_dimension(dim);
        for (const auto& n : g.nodes) {
            const ConceptNode* an = ag ? ag->find_node(n.id) : nullptr;
            if (!an) {
                bs.missing_nodes.insert({dim, n.id});
            } else {
                const double dw = n.weight - an->weight;
                if (dw > 0.0) bs.delta_w.emplace(NodeRef{dim, n.id}, dw);
            }
        }
        for (const auto& e : g.edges) {
            if (!ag || !ag->has_edge(e.source, e.target))
                bs.missing_edges.insert({dim, e.source, e.target});
        }
    }
    return bs;
}

double sigma_max_of(const Ontology& ideal) {
    double node_term = 0.0;
    double edge_term = 0.0;
    for (const auto& [dim, g] : ideal.dimensions) {
        for (const auto& n : g.nodes) node_term += n.ideal_importance();
        for (const auto& e : g.edges) {
            if (!e.weight)
                throw IncompleteIdealError("ideal edge " + dim + "/" + e.source + "->" + e.target +
                                           " lacks weight (omega)");
            if (!e.rho)
                throw IncompleteIdealError("ideal edge " + dim + "/" + e.source + "->" + e.target +
                                           " lacks rho");
            edge_term += *e.weight * *e.rho;
        }
    }
    return node_term + edge_term;
}

SeverityReport severity(const BlindSpot& bs, const Ontology& ideal) {
    return severity(bs, ideal, sigma_max_of(ideal));
}

SeverityReport severity(const BlindSpot& bs, const Ontology& ideal, double sigma_max_override) {
    SeverityReport rep;
    rep.sigma_max = sigma_max_override;

    for (const auto& ref : bs.missing_nodes) {
        const ConceptNode* n = ideal.find_node(ref);
        if (!n)
            throw IncompleteIdealError("missing node " + ref.dimension + "/" + ref.id +
                                       " does not exist in the ideal ontology");
        rep.node_absence_term += n->ideal_importance();
    }

    for (const auto& ref : bs.missing_edges) {
        const DimensionGraph* g = ideal.find_dimension(ref.dimension);
        const CausalEdge* e = g ? g->find_edge(ref.source, ref.target) : nullptr;
        const std::string loc = ref.dimension + "/" + ref.source + "->" + ref.target;
        if (!e)
            throw IncompleteIdealError("missing edge " + loc + " does not exist in the ideal ontology");
        if (!e->weight) throw IncompleteIdealError("ideal edge " + loc + " lacks weight (omega)");
        if (!e->rho) throw IncompleteIdealError("ideal edge " + loc + " lacks rho");
        rep.causal_absence_term += *e->weight * *e->rho;
    }

    for (const auto& [ref, dw] : bs.delta_w) {
        const ConceptNode* n = ideal.find_node(ref);
        if (!n)
            throw IncompleteIdealError("shared node " + ref.dimension + "/" + ref.id +
                                       " does not exist in the ideal ontology");
        if (!n->phi)
            throw IncompleteIdealError("ideal node " + ref.dimension + "/" + ref.id + " lacks phi");
        rep.weight_suppression_term += dw * *n->phi;
    }

    rep.sigma = rep.node_absence_term + rep.causal_absence_term + rep.weight_suppression_term;
    return rep;
}

}  // namespace ontorisk
