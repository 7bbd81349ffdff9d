#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ontorisk/blindspot.hpp"
#include "ontorisk/ontology.hpp"
#include "ontorisk/taxonomy.hpp"

namespace ontorisk {

/// External disruption: a magnitude in caller-defined standardized units and
/// the set of concepts it touches.
struct Shock {
    double magnitude = 0.0;
    std::set<NodeRef> domain_nodes;
    std::int64_t stage = 0;

    bool operator==(const Shock&) const = default;
};

/// Resources sunk into each dimension per stage.
struct InvestmentHistory {
    std::map<std::pair<std::int64_t, std::string>, double> entries;  // (stage, dimension) -> amount

    double at(std::int64_t stage, const std::string& dimension) const {
        auto it = entries.find({stage, dimension});
        return it == entries.end() ? 0.0 : it->second;
    }
    std::int64_t max_stage() const;
    bool operator==(const InvestmentHistory&) const = default;
};

struct PatternConfig {
    double theta_mono = 0.85;   // over-concentration
    double eps_mono = 0.15;     // neglect
    double eps_chain = 0.5;     // chain-break significance
    double theta_res = 0.5;     // resonance alignment
    double omega_budget = 10.0; // remediation resource budget
    double alpha = 1.0;         // investment weighting
    double beta = 1.0;          // residual-value weighting
    double gamma = 0.9;         // investment depreciation
    int max_path_len = 6;       // path length bound, in edges

    void check() const;  // ConfigError on any out-of-range field
};

enum class Pattern { Mono, WindowClosure, ChainBreak, Resonance, LockIn };

const char* pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(const std::string& name);

struct PatternFinding {
    Pattern pattern;
    bool fired = false;
    nlohmann::json evidence;  // pattern-specific payload
};

/// Pattern I: one dimension's mean weight strictly above theta_mono while
/// every other dimension sits strictly below eps_mono.
PatternFinding detect_mono(const Ontology& actual, const PatternConfig& cfg);

/// Pattern II: some temporally blind node's remediation cost at tau_now
/// strictly exceeds the budget. Nodes lacking cost metadata are skipped.
PatternFinding detect_window_closure(const Ontology& actual, double tau_now,
                                     const PatternConfig& cfg);

/// A simple directed path inside one dimension, with its criticality.
struct CriticalPath {
    std::string dimension;
    std::vector<std::string> nodes;  // length = edge count + 1
    double criticality = 0.0;

    bool operator==(const CriticalPath&) const = default;
};

/// Product of edge rho values along a connected directed walk in the ideal.
/// MalformedPathError on an empty/disconnected walk, an edge absent from the
/// ideal, or a missing rho.
double path_criticality(const std::vector<EdgeRef>& path, const Ontology& ideal);

/// Every simple directed path of 1..max_path_len edges with criticality
/// strictly above eps_chain, ordered by descending criticality with a
/// (dimension, node sequence) tiebreak. Prunes on the prefix product, which
/// is nonincreasing as edges are appended.
std::vector<CriticalPath> enumerate_critical_paths(const Ontology& ideal, double eps_chain,
                                                   int max_path_len);

/// Pattern III: some critical path of the ideal is not fully contained
/// (all nodes and all edges) in the actual ontology.
PatternFinding detect_chain_break(const Ontology& ideal, const Ontology& actual,
                                  const PatternConfig& cfg);

/// Node-level membership in a blind spot: a missing node, a weight-blind
/// (Type III) shared node, or an endpoint of a missing edge whose rho
/// strictly exceeds eps_str.
std::set<NodeRef> blind_spot_node_set(const BlindSpot& bs, const Ontology& ideal,
                                      const TaxonomyThresholds& thresholds);

/// Gamma = sigma * magnitude * (overlap count / shock domain size).
/// DegenerateShockError on an empty shock domain.
double resonance_index(double sigma, const Shock& shock, const BlindSpot& bs,
                       const Ontology& ideal, const TaxonomyThresholds& thresholds);

/// Pattern IV: overlap fraction strictly above theta_res.
PatternFinding detect_resonance(const Shock& shock, const BlindSpot& bs, const Ontology& ideal,
                                double sigma, const PatternConfig& cfg,
                                const TaxonomyThresholds& thresholds);

/// alpha * sum_{j=0..k} gamma^(k-j) * Inv_j(from_dim) - beta * ResVal, where
/// ResVal sums transferability(v) * W(v) over the actual from_dim graph
/// (transferability defaults to 0.5). May be negative. DomainBoundError when
/// k is below some stage recorded in the history.
double switch_cost(const InvestmentHistory& hist, const Ontology& actual,
                   const std::string& from_dim, std::int64_t k, const PatternConfig& cfg);

/// Pattern V: switch cost strictly above the budget.
PatternFinding detect_lockin(double cost, const PatternConfig& cfg);

/// Dimension with the highest mean weight, lexicographic tiebreak.
std::string dominant_dimension(const Ontology& actual);

}  // namespace ontorisk
