#include "ontorisk/case_db.hpp"

#include <algorithm>
#include <cmath>

namespace ontorisk {

CaseDatabase CaseDatabase::build(std::vector<CaseRecord> cases) {
    std::sort(cases.begin(), cases.end(),
              [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });

    std::set<std::string> seen_ids;
    for (const auto& c : cases) {
        if (c.id.empty()) throw ParseError("case with empty id");
        if (!seen_ids.insert(c.id).second) throw ParseError("duplicate case id '" + c.id + "'");
        if (c.trajectory.empty()) throw ParseError("case '" + c.id + "': trajectory is empty");
        for (std::size_t i = 1; i < c.trajectory.size(); ++i) {
            const EdgeRef& prev = c.trajectory[i - 1];
            const EdgeRef& cur = c.trajectory[i];
            if (prev.dimension == cur.dimension && prev.target != cur.source)
                throw ParseError("case '" + c.id + "': trajectory disconnected at step " +
                                 std::to_string(i) + " (" + prev.target + " -> " + cur.source +
                                 ")");
        }
        if (c.outcome_severity < 0.0 || !std::isfinite(c.outcome_severity))
            throw ParseError("case '" + c.id + "': outcome_severity must be >= 0");
        if (c.shock && c.shock->domain_nodes.empty())
            throw ParseError("case '" + c.id + "': shock domain is empty");
    }

    CaseDatabase db;
    db.cases_ = std::move(cases);
    for (const auto& c : db.cases_)
        for (const auto& e : c.trajectory) db.index_[e].insert(c.id);
    return db;
}

std::map<std::pair<std::string, std::string>, std::size_t> CaseDatabase::coverage() const {
    std::map<std::pair<std::string, std::string>, std::size_t> cells;
    for (const auto& c : cases_) {
        const std::string label = c.pattern_label ? pattern_name(*c.pattern_label) : "unlabeled";
        ++cells[{c.stage_label, label}];
    }
    return cells;
}

std::map<EdgeRef, double> estimate_rho(const CaseDatabase& db) {
    if (db.size() == 0) throw EmptyDatabaseError("case database is empty");
    std::map<EdgeRef, double> rho;
    const double total = static_cast<double>(db.size());
    for (const auto& [edge, ids] : db.index())
        rho[edge] = static_cast<double>(ids.size()) / total;
    return rho;
}

namespace {

double similarity_over_shared(const std::map<std::string, double>& b1,
                              const std::map<std::string, double>& b2,
                              const std::map<std::string, std::pair<double, double>>* ranges) {
    double sq = 0.0;
    std::size_t shared = 0;
    for (const auto& [name, v1] : b1) {
        auto it = b2.find(name);
        if (it == b2.end()) continue;
        ++shared;
        double lo = std::min(v1, it->second);
        double hi = std::max(v1, it->second);
        if (ranges) {
            auto r = ranges->find(name);
            if (r != ranges->end()) {
                lo = r->second.first;
                hi = r->second.second;
            }
        }
        const double width = hi - lo;
        if (width <= 0.0) continue;  // degenerate range: the feature cannot discriminate
        const double d = (v1 - it->second) / width;
        sq += d * d;
    }
    if (shared == 0) throw SchemaError("background vectors share no feature names");
    return 1.0 / (1.0 + std::sqrt(sq));
}

}  // namespace

double background_similarity(const std::map<std::string, double>& b1,
                             const std::map<std::string, double>& b2) {
    return similarity_over_shared(b1, b2, nullptr);
}

double background_similarity(const std::map<std::string, double>& b1,
                             const std::map<std::string, double>& b2,
                             const std::map<std::string, std::pair<double, double>>& ranges) {
    return similarity_over_shared(b1, b2, &ranges);
}

std::map<std::string, std::pair<double, double>> feature_ranges(
    const CaseDatabase& db, const std::map<std::string, double>& query) {
    std::map<std::string, std::pair<double, double>> ranges;
    auto absorb = [&](const std::map<std::string, double>& b) {
        for (const auto& [name, v] : b) {
            auto [it, inserted] = ranges.try_emplace(name, v, v);
            if (!inserted) {
                it->second.first = std::min(it->second.first, v);
                it->second.second = std::max(it->second.second, v);
            }
        }
    };
    for (const auto& c : db.cases()) absorb(c.background);
    absorb(query);
    return ranges;
}

Ontology build_ideal(const CaseDatabase& db, const std::map<std::string, double>& background,
                     const std::string& stage_label, double min_similarity) {
    const auto ranges = feature_ranges(db, background);

    std::vector<const CaseRecord*> matching;  // db.cases() is sorted by id
    for (const auto& c : db.cases()) {
        if (c.stage_label != stage_label) continue;
        double sim = 0.0;  // disjoint background schemas: fully dissimilar
        try {
            sim = background_similarity(background, c.background, ranges);
        } catch (const SchemaError&) {
        }
        if (sim >= min_similarity) matching.push_back(&c);
    }
    if (matching.empty())
        throw InsufficientDataError("no cases match stage_label '" + stage_label +
                                        "' at min_similarity",
                                    0);

    const double total = static_cast<double>(matching.size());
    std::map<NodeRef, std::size_t> node_counts;
    std::map<EdgeRef, std::size_t> edge_counts;
    for (const CaseRecord* c : matching) {
        std::set<NodeRef> nodes_touched;
        std::set<EdgeRef> edges_touched;
        for (const auto& e : c->trajectory) {
            nodes_touched.insert({e.dimension, e.source});
            nodes_touched.insert({e.dimension, e.target});
            edges_touched.insert(e);
        }
        for (const auto& n : nodes_touched) ++node_counts[n];
        for (const auto& e : edges_touched) ++edge_counts[e];
    }

    std::map<std::string, double> node_count_sum_per_dim;
    for (const auto& [ref, count] : node_counts)
        node_count_sum_per_dim[ref.dimension] += static_cast<double>(count);
    std::map<std::string, double> edge_count_sum_per_dim;
    for (const auto& [ref, count] : edge_counts)
        edge_count_sum_per_dim[ref.dimension] += static_cast<double>(count);

    Ontology ideal;
    ideal.individual = "ideal";
    ideal.stage = 0;
    ideal.stage_label = stage_label;
    ideal.background = background;

    for (const auto& [ref, count] : node_counts) {
        ConceptNode node;
        node.id = ref.id;
        node.weight = static_cast<double>(count) / node_count_sum_per_dim[ref.dimension];
        node.omega = node.weight;
        node.phi = 1.0;
        auto& g = ideal.dimensions[ref.dimension];
        g.dimension = ref.dimension;
        g.nodes.push_back(std::move(node));
    }
    for (const auto& [ref, count] : edge_counts) {
        CausalEdge edge;
        edge.source = ref.source;
        edge.target = ref.target;
        edge.weight = static_cast<double>(count) / edge_count_sum_per_dim[ref.dimension];
        edge.rho = static_cast<double>(count) / total;
        ideal.dimensions[ref.dimension].edges.push_back(std::move(edge));
    }
    ideal.canonicalize();
    return ideal;
}

}  // namespace ontorisk
