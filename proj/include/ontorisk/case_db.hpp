#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontorisk/ontology.hpp"
#include "ontorisk/patterns.hpp"

namespace ontorisk {

/// One historical failure trajectory.
struct CaseRecord {
    std::string id;
    std::map<std::string, double> background;
    std::string stage_label;
    std::vector<EdgeRef> trajectory;  // connected walk within each same-dimension segment
    std::optional<Shock> shock;
    double outcome_severity = 0.0;
    std::optional<Pattern> pattern_label;

    bool operator==(const CaseRecord&) const = default;
};

/// Immutable after construction; cases are kept sorted by id so aggregation
/// does not depend on insertion order.
class CaseDatabase {
public:
    /// Validates every record (nonempty connected trajectory, unique ids,
    /// nonnegative severity; ParseError otherwise) and builds the edge index.
    static CaseDatabase build(std::vector<CaseRecord> cases);

    const std::vector<CaseRecord>& cases() const { return cases_; }
    const std::map<EdgeRef, std::set<std::string>>& index() const { return index_; }
    std::size_t size() const { return cases_.size(); }

    /// Case counts per (stage_label, pattern label or "unlabeled") cell.
    std::map<std::pair<std::string, std::string>, std::size_t> coverage() const;

private:
    std::vector<CaseRecord> cases_;
    std::map<EdgeRef, std::set<std::string>> index_;
};

/// rho(e) = fraction of cases whose trajectory traverses e (set semantics:
/// an edge repeated inside one trajectory counts once for that case).
/// EmptyDatabaseError on an empty database.
std::map<EdgeRef, double> estimate_rho(const CaseDatabase& db);

/// 1 / (1 + euclidean distance over min-max-normalized shared features).
/// Shared features are the name intersection; SchemaError when empty. The
/// two-argument form normalizes by the pair's own value range; the ranged
/// form uses the supplied per-feature (min, max).
double background_similarity(const std::map<std::string, double>& b1,
                             const std::map<std::string, double>& b2);
double background_similarity(const std::map<std::string, double>& b1,
                             const std::map<std::string, double>& b2,
                             const std::map<std::string, std::pair<double, double>>& ranges);

/// Per-feature (min, max) across all case backgrounds plus the query.
std::map<std::string, std::pair<double, double>> feature_ranges(
    const CaseDatabase& db, const std::map<std::string, double>& query);

/// Ideal-ontology estimator: aggregates trajectories of cases matching the
/// stage label with background similarity >= min_similarity. Node and edge
/// weights (and omega) are traversal frequencies normalized per dimension;
/// rho comes from the matching subset; phi defaults to 1.
/// InsufficientDataError (carrying the match count) when nothing matches.
Ontology build_ideal(const CaseDatabase& db, const std::map<std::string, double>& background,
                     const std::string& stage_label, double min_similarity);

}  // namespace ontorisk
