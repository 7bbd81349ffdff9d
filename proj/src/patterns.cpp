#include "ontorisk/patterns.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace ontorisk {

using nlohmann::json;

std::int64_t InvestmentHistory::max_stage() const {
    std::int64_t m = 0;
    for (const auto& [key, amount] : entries) {
        (void)amount;
        m = std::max(m, key.first);
    }
    return m;
}

void PatternConfig::check() const {
    auto open_unit = [](const char* name, double v) {
        if (!(v > 0.0 && v < 1.0))
            throw ConfigError(std::string(name) + " must lie strictly in (0,1)");
    };
    open_unit("theta_mono", theta_mono);
    open_unit("eps_mono", eps_mono);
    open_unit("eps_chain", eps_chain);
    open_unit("theta_res", theta_res);
    open_unit("gamma", gamma);
    if (theta_mono <= eps_mono) throw ConfigError("theta_mono must exceed eps_mono");
    if (!(omega_budget > 0.0)) throw ConfigError("omega_budget must be > 0");
    if (!(alpha > 0.0)) throw ConfigError("alpha must be > 0");
    if (beta < 0.0) throw ConfigError("beta must be >= 0");
    if (max_path_len < 1) throw ConfigError("max_path_len must be >= 1");
}

const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::Mono: return "Mono";
        case Pattern::WindowClosure: return "WindowClosure";
        case Pattern::ChainBreak: return "ChainBreak";
        case Pattern::Resonance: return "Resonance";
        case Pattern::LockIn: return "LockIn";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(const std::string& name) {
    for (Pattern p : {Pattern::Mono, Pattern::WindowClosure, Pattern::ChainBreak,
                      Pattern::Resonance, Pattern::LockIn}) {
        if (name == pattern_name(p)) return p;
    }
    return std::nullopt;
}

PatternFinding detect_mono(const Ontology& actual, const PatternConfig& cfg) {
    const std::map<std::string, double> means = dimension_mean_weights(actual);

    std::optional<std::string> dominant;
    for (const auto& [dim, w] : means) {
        if (w <= cfg.theta_mono) continue;
        bool others_neglected = true;
        for (const auto& [other, ow] : means) {
            if (other != dim && ow >= cfg.eps_mono) {
                others_neglected = false;
                break;
            }
        }
        if (others_neglected) {
            dominant = dim;
            break;  // theta_mono > eps_mono makes the dominant dimension unique
        }
    }

    PatternFinding finding{Pattern::Mono, dominant.has_value(), json::object()};
    finding.evidence["mean_weights"] = json::object();
    for (const auto& [dim, w] : means) finding.evidence["mean_weights"][dim] = w;
    if (dominant) finding.evidence["dominant"] = *dominant;
    return finding;
}

PatternFinding detect_window_closure(const Ontology& actual, double tau_now,
                                     const PatternConfig& cfg) {
    const TemporalClassification temporal = classify_temporal_blindness(actual);

    json exceedances = json::array();
    double max_cost = 0.0;
    bool any_evaluated = false;
    for (const auto& ref : temporal.flagged) {
        const ConceptNode* n = actual.find_node(ref);
        if (!n->c0 || !n->lambda) continue;  // cost metadata absent: skip
        const double cost = remediation_cost(*n, tau_now);
        any_evaluated = true;
        max_cost = std::max(max_cost, cost);
        if (cost > cfg.omega_budget) {
            exceedances.push_back(
                {{"dimension", ref.dimension}, {"id", ref.id}, {"cost", cost}});
        }
    }

    PatternFinding finding{Pattern::WindowClosure, !exceedances.empty(), json::object()};
    if (finding.fired) {
        finding.evidence["exceedances"] = std::move(exceedances);
        finding.evidence["budget"] = cfg.omega_budget;
    } else if (any_evaluated) {
        finding.evidence["max_cost"] = max_cost;
    }
    return finding;
}

double path_criticality(const std::vector<EdgeRef>& path, const Ontology& ideal) {
    if (path.empty()) throw MalformedPathError("path has no edges");
    double product = 1.0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const EdgeRef& ref = path[i];
        const std::string loc = ref.dimension + "/" + ref.source + "->" + ref.target;
        if (i > 0) {
            const EdgeRef& prev = path[i - 1];
            if (prev.dimension != ref.dimension || prev.target != ref.source)
                throw MalformedPathError("path is disconnected at edge " + loc);
        }
        const DimensionGraph* g = ideal.find_dimension(ref.dimension);
        const CausalEdge* e = g ? g->find_edge(ref.source, ref.target) : nullptr;
        if (!e) throw MalformedPathError("edge " + loc + " does not exist in the ideal ontology");
        if (!e->rho) throw MalformedPathError("edge " + loc + " lacks rho");
        product *= *e->rho;
    }
    return product;
}

namespace {

struct PathEnumerator {
    const DimensionGraph& graph;
    double eps_chain;
    int max_len;
    std::vector<CriticalPath>& out;

    // adjacency over node indices, ordered by target id for determinism
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;
    std::vector<std::string> ids;
    std::vector<bool> on_path;
    std::vector<std::size_t> stack;

    PathEnumerator(const DimensionGraph& g, double eps, int len, std::vector<CriticalPath>& sink)
        : graph(g), eps_chain(eps), max_len(len), out(sink) {
        ids.reserve(g.nodes.size());
        for (const auto& n : g.nodes) ids.push_back(n.id);
        std::sort(ids.begin(), ids.end());
        auto index_of = [&](const std::string& id) {
            return static_cast<std::size_t>(
                std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
        };
        adj.resize(ids.size());
        for (const auto& e : g.edges) {
            if (!e.rho)
                throw IncompleteIdealError("ideal edge " + g.dimension + "/" + e.source + "->" +
                                           e.target + " lacks rho");
            if (e.source == e.target) continue;  // a simple path cannot revisit a node
            adj[index_of(e.source)].push_back({index_of(e.target), *e.rho});
        }
        for (auto& row : adj)
            std::sort(row.begin(), row.end(), [&](const auto& a, const auto& b) {
                return ids[a.first] < ids[b.first];
            });
        on_path.assign(ids.size(), false);
    }

    void run() {
        for (std::size_t start = 0; start < ids.size(); ++start) {
            stack.push_back(start);
            on_path[start] = true;
            extend(start, 1.0, 0);
            on_path[start] = false;
            stack.pop_back();
        }
    }

    void extend(std::size_t node, double product, int len) {
        if (len == max_len) return;
        for (const auto& [next, rho] : adj[node]) {
            if (on_path[next]) continue;
            const double p = product * rho;
            if (p <= eps_chain) continue;  // extensions only shrink the product
            stack.push_back(next);
            on_path[next] = true;
            CriticalPath cp;
            cp.dimension = graph.dimension;
            for (std::size_t idx : stack) cp.nodes.push_back(ids[idx]);
            cp.criticality = p;
            out.push_back(std::move(cp));
            extend(next, p, len + 1);
            on_path[next] = false;
            stack.pop_back();
        }
    }
};

}  // namespace

std::vector<CriticalPath> enumerate_critical_paths(const Ontology& ideal, double eps_chain,
                                                   int max_path_len) {
    if (max_path_len < 1) throw ConfigError("max_path_len must be >= 1");
    std::vector<CriticalPath> paths;
    for (const auto& [dim, g] : ideal.dimensions) {
        (void)dim;
        PathEnumerator(g, eps_chain, max_path_len, paths).run();
    }
    std::sort(paths.begin(), paths.end(), [](const CriticalPath& a, const CriticalPath& b) {
        if (a.criticality != b.criticality) return a.criticality > b.criticality;
        return std::tie(a.dimension, a.nodes) < std::tie(b.dimension, b.nodes);
    });
    return paths;
}

namespace {

/// First element of the path, walked in sequence order v1, e1, v2, e2, ...,
/// that is absent from `actual`; nullopt when the path is fully contained.
std::optional<json> first_missing_element(const CriticalPath& path, const Ontology& actual) {
    auto missing_node = [&](const std::string& id) {
        return json{{"kind", "node"}, {"dimension", path.dimension}, {"id", id}};
    };
    if (!actual.has_node({path.dimension, path.nodes.front()}))
        return missing_node(path.nodes.front());
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        if (!actual.has_edge({path.dimension, path.nodes[i], path.nodes[i + 1]}))
            return json{{"kind", "edge"},
                        {"dimension", path.dimension},
                        {"source", path.nodes[i]},
                        {"target", path.nodes[i + 1]}};
        if (!actual.has_node({path.dimension, path.nodes[i + 1]}))
            return missing_node(path.nodes[i + 1]);
    }
    return std::nullopt;
}

}  // namespace

PatternFinding detect_chain_break(const Ontology& ideal, const Ontology& actual,
                                  const PatternConfig& cfg) {
    const std::vector<CriticalPath> paths =
        enumerate_critical_paths(ideal, cfg.eps_chain, cfg.max_path_len);

    json broken = json::array();
    for (const auto& path : paths) {
        std::optional<json> missing = first_missing_element(path, actual);
        if (!missing) continue;
        broken.push_back({{"dimension", path.dimension},
                          {"nodes", path.nodes},
                          {"criticality", path.criticality},
                          {"first_missing", *missing}});
    }

    PatternFinding finding{Pattern::ChainBreak, !broken.empty(), json::object()};
    if (finding.fired) finding.evidence["broken_paths"] = std::move(broken);
    return finding;
}

std::set<NodeRef> blind_spot_node_set(const BlindSpot& bs, const Ontology& ideal,
                                      const TaxonomyThresholds& thresholds) {
    std::set<NodeRef> members = bs.missing_nodes;

    for (const auto& [ref, dw] : bs.delta_w) {
        const ConceptNode* n = ideal.find_node(ref);
        if (!n) continue;
        const double actual_weight = n->weight - dw;  // recovered: dw = Wi - Wa > 0
        if (dw > thresholds.eps_wt && actual_weight < thresholds.eps_act) members.insert(ref);
    }

    for (const auto& e : bs.missing_edges) {
        const DimensionGraph* g = ideal.find_dimension(e.dimension);
        const CausalEdge* edge = g ? g->find_edge(e.source, e.target) : nullptr;
        if (!edge || !edge->rho || !(*edge->rho > thresholds.eps_str)) continue;
        members.insert({e.dimension, e.source});
        members.insert({e.dimension, e.target});
    }
    return members;
}

double resonance_index(double sigma, const Shock& shock, const BlindSpot& bs,
                       const Ontology& ideal, const TaxonomyThresholds& thresholds) {
    if (shock.domain_nodes.empty()) throw DegenerateShockError("shock domain is empty");
    const std::set<NodeRef> members = blind_spot_node_set(bs, ideal, thresholds);
    std::size_t overlap = 0;
    for (const auto& ref : shock.domain_nodes) overlap += members.count(ref);
    const double fraction =
        static_cast<double>(overlap) / static_cast<double>(shock.domain_nodes.size());
    return sigma * shock.magnitude * fraction;
}

PatternFinding detect_resonance(const Shock& shock, const BlindSpot& bs, const Ontology& ideal,
                                double sigma, const PatternConfig& cfg,
                                const TaxonomyThresholds& thresholds) {
    if (shock.domain_nodes.empty()) throw DegenerateShockError("shock domain is empty");
    const std::set<NodeRef> members = blind_spot_node_set(bs, ideal, thresholds);

    std::vector<NodeRef> overlapping;
    for (const auto& ref : shock.domain_nodes)
        if (members.count(ref)) overlapping.push_back(ref);
    const double fraction = static_cast<double>(overlapping.size()) /
                            static_cast<double>(shock.domain_nodes.size());
    const double gamma = sigma * shock.magnitude * fraction;

    PatternFinding finding{Pattern::Resonance, fraction > cfg.theta_res, json::object()};
    finding.evidence["gamma"] = gamma;
    finding.evidence["overlap_fraction"] = fraction;
    if (finding.fired) {
        json nodes = json::array();
        for (const auto& ref : overlapping)
            nodes.push_back({{"dimension", ref.dimension}, {"id", ref.id}});
        finding.evidence["overlap_nodes"] = std::move(nodes);
    }
    return finding;
}

double switch_cost(const InvestmentHistory& hist, const Ontology& actual,
                   const std::string& from_dim, std::int64_t k, const PatternConfig& cfg) {
    for (const auto& [key, amount] : hist.entries) {
        (void)amount;
        if (key.first > k)
            throw DomainBoundError("investment history contains stage " +
                                   std::to_string(key.first) + " beyond k=" + std::to_string(k));
    }

    double invested = 0.0;
    double depreciation = 1.0;
    for (std::int64_t j = k; j >= 0; --j) {
        invested += depreciation * hist.at(j, from_dim);
        depreciation *= cfg.gamma;
    }

    double residual_value = 0.0;
    if (const DimensionGraph* g = actual.find_dimension(from_dim)) {
        for (const auto& n : g->nodes)
            residual_value += n.transferability.value_or(0.5) * n.weight;
    }

    return cfg.alpha * invested - cfg.beta * residual_value;
}

PatternFinding detect_lockin(double cost, const PatternConfig& cfg) {
    PatternFinding finding{Pattern::LockIn, cost > cfg.omega_budget, json::object()};
    finding.evidence["switch_cost"] = cost;
    if (finding.fired) finding.evidence["budget"] = cfg.omega_budget;
    return finding;
}

std::string dominant_dimension(const Ontology& actual) {
    if (actual.dimensions.empty()) throw AbsentDimensionError("ontology has no dimensions");
    std::string best;
    double best_mean = -1.0;
    for (const auto& [dim, g] : actual.dimensions) {
        (void)g;
        const double mean = mean_dimension_weight(actual, dim);
        if (mean > best_mean) {  // map order makes ties resolve lexicographically
            best_mean = mean;
            best = dim;
        }
    }
    return best;
}

}  // namespace ontorisk
