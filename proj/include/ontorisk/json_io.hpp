#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontorisk/blindspot.hpp"
#include "ontorisk/case_db.hpp"
#include "ontorisk/config.hpp"
#include "ontorisk/ontology.hpp"
#include "ontorisk/patterns.hpp"
#include "ontorisk/resilience.hpp"
#include "ontorisk/sim.hpp"
#include "ontorisk/taxonomy.hpp"

namespace ontorisk {

using json = nlohmann::json;

/// Canonical emission: two-space indentation and alphabetically sorted keys,
/// so identical values serialize to identical bytes.
std::string dump_canonical(const json& j);

json load_json_file(const std::string& path);          // ParseError on IO/syntax
void write_text_file(const std::string& path, const std::string& content);

// ---- parsing (strict: unknown keys are rejected with their JSON path) ----

Ontology parse_ontology(const json& j);
Ontology load_ontology(const std::string& path);

Shock parse_shock(const json& j);
Shock load_shock(const std::string& path);

InvestmentHistory parse_investment_history(const json& j);
InvestmentHistory load_investment_history(const std::string& path);

std::vector<CaseRecord> parse_cases(const json& j);
std::vector<CaseRecord> load_cases(const std::string& path);

std::map<std::string, double> parse_background(const json& j);
std::map<std::string, double> load_background(const std::string& path);

AnalysisConfig parse_analysis_config(const json& j);
AnalysisConfig load_analysis_config(const std::string& path);

// round-trip parsers for engine outputs
BlindSpot parse_blind_spot(const json& j);
SeverityReport parse_severity_report(const json& j);
TaxonomyReport parse_taxonomy_report(const json& j);
std::vector<PatternFinding> parse_pattern_findings(const json& j);
ResilienceReport parse_resilience_report(const json& j);
SimResult parse_sim_result(const json& j);

// ---- serialization ----

json to_json(const Ontology& o);
json to_json(const ValidationReport& r);
json to_json(const BlindSpot& bs);
json to_json(const SeverityReport& r);
json to_json(const TaxonomyReport& r);
json to_json(const PatternFinding& f);
json to_json(const std::vector<PatternFinding>& fs);
json to_json(const ResilienceReport& r);
json to_json(const Shock& s);
json to_json(const InvestmentHistory& h);
json to_json(const CaseRecord& c);
json to_json(const AnalysisConfig& cfg);
json to_json(const SimResult& r);
json rho_to_json(const std::map<EdgeRef, double>& rho);

}  // namespace ontorisk
