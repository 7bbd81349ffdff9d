#include "ontorisk/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ontorisk {

namespace {

// -------------------------------------------------------------------------
// strict readers

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
}

const json& expect_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

/// Tracks which keys a schema consumed and rejects the rest by name.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(expect_object(j, path)), path_(std::move(path)) {}

    const json* get(const char* key) {
        known_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    const json& require(const char* key) {
        const json* v = get(key);
        if (!v) fail(path_, std::string("missing required key \"") + key + "\"");
        return *v;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!known_.count(it.key()))
                fail(path_, "unknown key \"" + it.key() + "\"");
        }
    }

    const std::string& path() const { return path_; }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> known_;
};

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

std::int64_t as_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path, "expected a boolean");
    return v.get<bool>();
}

std::optional<double> opt_number(ObjectReader& r, const char* key) {
    const json* v = r.get(key);
    if (!v) return std::nullopt;
    return as_number(*v, r.path() + "." + key);
}

std::map<std::string, double> as_number_map(const json& v, const std::string& path) {
    std::map<std::string, double> out;
    for (auto it = expect_object(v, path).begin(); it != v.end(); ++it)
        out[it.key()] = as_number(it.value(), path + "." + it.key());
    return out;
}

NodeRef parse_node_ref(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    NodeRef ref;
    ref.dimension = as_string(r.require("dimension"), path + ".dimension");
    ref.id = as_string(r.require("id"), path + ".id");
    r.finish();
    return ref;
}

EdgeRef parse_edge_ref(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    EdgeRef ref;
    ref.dimension = as_string(r.require("dimension"), path + ".dimension");
    ref.source = as_string(r.require("source"), path + ".source");
    ref.target = as_string(r.require("target"), path + ".target");
    r.finish();
    return ref;
}

json node_ref_json(const NodeRef& ref) {
    return {{"dimension", ref.dimension}, {"id", ref.id}};
}

json edge_ref_json(const EdgeRef& ref) {
    return {{"dimension", ref.dimension}, {"source", ref.source}, {"target", ref.target}};
}

}  // namespace

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open file for writing");
    out << content;
    if (!out) throw Error(path + ": write failed");
}

// -------------------------------------------------------------------------
// Ontology

Ontology parse_ontology(const json& j) {
    ObjectReader r(j, "ontology");
    Ontology o;
    o.individual = as_string(r.require("individual"), "ontology.individual");
    o.stage = as_integer(r.require("stage"), "ontology.stage");
    o.stage_label = as_string(r.require("stage_label"), "ontology.stage_label");
    if (const json* bg = r.get("background"))
        o.background = as_number_map(*bg, "ontology.background");

    const json& dims = expect_object(r.require("dimensions"), "ontology.dimensions");
    for (auto it = dims.begin(); it != dims.end(); ++it) {
        const std::string dpath = "ontology.dimensions." + it.key();
        ObjectReader dr(it.value(), dpath);
        DimensionGraph g;
        g.dimension = it.key();

        const json& nodes = expect_array(dr.require("nodes"), dpath + ".nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const std::string npath = dpath + ".nodes[" + std::to_string(i) + "]";
            ObjectReader nr(nodes[i], npath);
            ConceptNode n;
            n.id = as_string(nr.require("id"), npath + ".id");
            n.weight = as_number(nr.require("weight"), npath + ".weight");
            n.omega = opt_number(nr, "omega");
            n.phi = opt_number(nr, "phi");
            n.tau_optimal = opt_number(nr, "tau_optimal");
            n.delta_tau_max = opt_number(nr, "delta_tau_max");
            n.c0 = opt_number(nr, "c0");
            n.lambda = opt_number(nr, "lambda");
            n.tau_acquire = opt_number(nr, "tau_acquire");
            n.transferability = opt_number(nr, "transferability");
            nr.finish();
            g.nodes.push_back(std::move(n));
        }

        const json& edges = expect_array(dr.require("edges"), dpath + ".edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string epath = dpath + ".edges[" + std::to_string(i) + "]";
            ObjectReader er(edges[i], epath);
            CausalEdge e;
            e.source = as_string(er.require("source"), epath + ".source");
            e.target = as_string(er.require("target"), epath + ".target");
            e.weight = opt_number(er, "weight");
            e.rho = opt_number(er, "rho");
            er.finish();
            g.edges.push_back(std::move(e));
        }
        dr.finish();
        o.dimensions.emplace(it.key(), std::move(g));
    }
    r.finish();
    o.canonicalize();
    return o;
}

Ontology load_ontology(const std::string& path) { return parse_ontology(load_json_file(path)); }

json to_json(const Ontology& o) {
    json dims = json::object();
    for (const auto& [label, g] : o.dimensions) {
        json nodes = json::array();
        std::vector<const ConceptNode*> sorted_nodes;
        for (const auto& n : g.nodes) sorted_nodes.push_back(&n);
        std::sort(sorted_nodes.begin(), sorted_nodes.end(),
                  [](const ConceptNode* a, const ConceptNode* b) { return a->id < b->id; });
        for (const ConceptNode* n : sorted_nodes) {
            json jn{{"id", n->id}, {"weight", n->weight}};
            if (n->omega) jn["omega"] = *n->omega;
            if (n->phi) jn["phi"] = *n->phi;
            if (n->tau_optimal) jn["tau_optimal"] = *n->tau_optimal;
            if (n->delta_tau_max) jn["delta_tau_max"] = *n->delta_tau_max;
            if (n->c0) jn["c0"] = *n->c0;
            if (n->lambda) jn["lambda"] = *n->lambda;
            if (n->tau_acquire) jn["tau_acquire"] = *n->tau_acquire;
            if (n->transferability) jn["transferability"] = *n->transferability;
            nodes.push_back(std::move(jn));
        }

        json edges = json::array();
        std::vector<const CausalEdge*> sorted_edges;
        for (const auto& e : g.edges) sorted_edges.push_back(&e);
        std::sort(sorted_edges.begin(), sorted_edges.end(),
                  [](const CausalEdge* a, const CausalEdge* b) {
                      return std::tie(a->source, a->target) < std::tie(b->source, b->target);
                  });
        for (const CausalEdge* e : sorted_edges) {
            json je{{"source", e->source}, {"target", e->target}};
            if (e->weight) je["weight"] = *e->weight;
            if (e->rho) je["rho"] = *e->rho;
            edges.push_back(std::move(je));
        }
        dims[label] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
    }
    return {{"individual", o.individual},
            {"stage", o.stage},
            {"stage_label", o.stage_label},
            {"background", json(o.background)},
            {"dimensions", std::move(dims)}};
}

json to_json(const ValidationReport& r) {
    json issues = json::array();
    for (const auto& issue : r.issues)
        issues.push_back(
            {{"code", issue.code}, {"location", issue.location}, {"message", issue.message}});
    return {{"valid", r.ok()}, {"issues", std::move(issues)}};
}

// -------------------------------------------------------------------------
// Shock / InvestmentHistory

Shock parse_shock(const json& j) {
    ObjectReader r(j, "shock");
    Shock s;
    s.magnitude = as_number(r.require("magnitude"), "shock.magnitude");
    if (s.magnitude < 0.0) fail("shock.magnitude", "must be >= 0");
    if (const json* stage = r.get("stage")) s.stage = as_integer(*stage, "shock.stage");
    const json& domain = expect_array(r.require("domain_nodes"), "shock.domain_nodes");
    for (std::size_t i = 0; i < domain.size(); ++i)
        s.domain_nodes.insert(
            parse_node_ref(domain[i], "shock.domain_nodes[" + std::to_string(i) + "]"));
    if (s.domain_nodes.empty()) fail("shock.domain_nodes", "must be nonempty");
    r.finish();
    return s;
}

Shock load_shock(const std::string& path) { return parse_shock(load_json_file(path)); }

json to_json(const Shock& s) {
    json domain = json::array();
    for (const auto& ref : s.domain_nodes) domain.push_back(node_ref_json(ref));
    return {{"magnitude", s.magnitude}, {"domain_nodes", std::move(domain)}, {"stage", s.stage}};
}

InvestmentHistory parse_investment_history(const json& j) {
    ObjectReader r(j, "investment");
    InvestmentHistory h;
    const json& entries = expect_array(r.require("entries"), "investment.entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "investment.entries[" + std::to_string(i) + "]";
        ObjectReader er(entries[i], path);
        const std::int64_t stage = as_integer(er.require("stage"), path + ".stage");
        const std::string dimension = as_string(er.require("dimension"), path + ".dimension");
        const double amount = as_number(er.require("amount"), path + ".amount");
        er.finish();
        if (stage < 0) fail(path + ".stage", "must be >= 0");
        if (amount < 0.0) fail(path + ".amount", "must be >= 0");
        if (!h.entries.emplace(std::make_pair(stage, dimension), amount).second)
            fail(path, "duplicate (stage, dimension) entry");
    }
    r.finish();
    return h;
}

InvestmentHistory load_investment_history(const std::string& path) {
    return parse_investment_history(load_json_file(path));
}

json to_json(const InvestmentHistory& h) {
    json entries = json::array();
    for (const auto& [key, amount] : h.entries)
        entries.push_back(
            {{"stage", key.first}, {"dimension", key.second}, {"amount", amount}});
    return {{"entries", std::move(entries)}};
}

// -------------------------------------------------------------------------
// cases

std::vector<CaseRecord> parse_cases(const json& j) {
    ObjectReader r(j, "cases");
    std::vector<CaseRecord> out;
    const json& cases = expect_array(r.require("cases"), "cases.cases");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const std::string path = "cases.cases[" + std::to_string(i) + "]";
        ObjectReader cr(cases[i], path);
        CaseRecord c;
        c.id = as_string(cr.require("id"), path + ".id");
        if (const json* bg = cr.get("background"))
            c.background = as_number_map(*bg, path + ".background");
        c.stage_label = as_string(cr.require("stage_label"), path + ".stage_label");
        const json& traj = expect_array(cr.require("trajectory"), path + ".trajectory");
        for (std::size_t t = 0; t < traj.size(); ++t)
            c.trajectory.push_back(
                parse_edge_ref(traj[t], path + ".trajectory[" + std::to_string(t) + "]"));
        if (const json* shock = cr.get("shock")) c.shock = parse_shock(*shock);
        c.outcome_severity = as_number(cr.require("outcome_severity"), path + ".outcome_severity");
        if (const json* label = cr.get("pattern_label")) {
            const std::string name = as_string(*label, path + ".pattern_label");
            c.pattern_label = pattern_from_name(name);
            if (!c.pattern_label)
                fail(path + ".pattern_label", "unknown pattern \"" + name + "\"");
        }
        cr.finish();
        out.push_back(std::move(c));
    }
    r.finish();
    return out;
}

std::vector<CaseRecord> load_cases(const std::string& path) {
    return parse_cases(load_json_file(path));
}

json to_json(const CaseRecord& c) {
    json traj = json::array();
    for (const auto& e : c.trajectory) traj.push_back(edge_ref_json(e));
    json out{{"id", c.id},
             {"background", json(c.background)},
             {"stage_label", c.stage_label},
             {"trajectory", std::move(traj)},
             {"outcome_severity", c.outcome_severity}};
    if (c.shock) out["shock"] = to_json(*c.shock);
    if (c.pattern_label) out["pattern_label"] = pattern_name(*c.pattern_label);
    return out;
}

std::map<std::string, double> parse_background(const json& j) {
    return as_number_map(j, "background");
}

std::map<std::string, double> load_background(const std::string& path) {
    return parse_background(load_json_file(path));
}

// -------------------------------------------------------------------------
// AnalysisConfig

void AnalysisConfig::check() const {
    taxonomy.check();
    patterns.check();
    if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
    if (sigma_max_override && !(*sigma_max_override > 0.0))
        throw ConfigError("sigma_max override must be > 0");
}

AnalysisConfig parse_analysis_config(const json& j) {
    ObjectReader r(j, "config");
    AnalysisConfig cfg;
    auto num = [&](const char* key, double& slot) {
        if (const json* v = r.get(key)) slot = as_number(*v, std::string("config.") + key);
    };
    num("eps_dom", cfg.taxonomy.eps_dom);
    num("eps_str", cfg.taxonomy.eps_str);
    num("eps_wt", cfg.taxonomy.eps_wt);
    num("eps_act", cfg.taxonomy.eps_act);
    num("theta_mono", cfg.patterns.theta_mono);
    num("eps_mono", cfg.patterns.eps_mono);
    num("eps_chain", cfg.patterns.eps_chain);
    num("theta_res", cfg.patterns.theta_res);
    num("omega_budget", cfg.patterns.omega_budget);
    num("alpha", cfg.patterns.alpha);
    num("beta", cfg.patterns.beta);
    num("gamma", cfg.patterns.gamma);
    num("epsilon", cfg.epsilon);
    if (const json* v = r.get("max_path_len"))
        cfg.patterns.max_path_len =
            static_cast<int>(as_integer(*v, "config.max_path_len"));
    if (const json* v = r.get("sigma_max")) {
        if (v->is_string()) {
            if (v->get<std::string>() != "computed")
                fail("config.sigma_max", "expected a number or the string \"computed\"");
        } else {
            cfg.sigma_max_override = as_number(*v, "config.sigma_max");
        }
    }
    r.finish();
    cfg.check();
    return cfg;
}

AnalysisConfig load_analysis_config(const std::string& path) {
    return parse_analysis_config(load_json_file(path));
}

json to_json(const AnalysisConfig& cfg) {
    json out{{"eps_dom", cfg.taxonomy.eps_dom},
             {"eps_str", cfg.taxonomy.eps_str},
             {"eps_wt", cfg.taxonomy.eps_wt},
             {"eps_act", cfg.taxonomy.eps_act},
             {"theta_mono", cfg.patterns.theta_mono},
             {"eps_mono", cfg.patterns.eps_mono},
             {"eps_chain", cfg.patterns.eps_chain},
             {"theta_res", cfg.patterns.theta_res},
             {"omega_budget", cfg.patterns.omega_budget},
             {"alpha", cfg.patterns.alpha},
             {"beta", cfg.patterns.beta},
             {"gamma", cfg.patterns.gamma},
             {"epsilon", cfg.epsilon},
             {"max_path_len", cfg.patterns.max_path_len}};
    if (cfg.sigma_max_override) out["sigma_max"] = *cfg.sigma_max_override;
    else out["sigma_max"] = "computed";
    return out;
}

// -------------------------------------------------------------------------
// engine outputs

json to_json(const BlindSpot& bs) {
    json nodes = json::array();
    for (const auto& ref : bs.missing_nodes) nodes.push_back(node_ref_json(ref));
    json edges = json::array();
    for (const auto& ref : bs.missing_edges) edges.push_back(edge_ref_json(ref));
    json deltas = json::array();
    for (const auto& [ref, dw] : bs.delta_w) {
        json entry = node_ref_json(ref);
        entry["delta"] = dw;
        deltas.push_back(std::move(entry));
    }
    return {{"missing_nodes", std::move(nodes)},
            {"missing_edges", std::move(edges)},
            {"delta_w", std::move(deltas)}};
}

BlindSpot parse_blind_spot(const json& j) {
    ObjectReader r(j, "blind_spot");
    BlindSpot bs;
    const json& nodes = expect_array(r.require("missing_nodes"), "blind_spot.missing_nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        bs.missing_nodes.insert(
            parse_node_ref(nodes[i], "blind_spot.missing_nodes[" + std::to_string(i) + "]"));
    const json& edges = expect_array(r.require("missing_edges"), "blind_spot.missing_edges");
    for (std::size_t i = 0; i < edges.size(); ++i)
        bs.missing_edges.insert(
            parse_edge_ref(edges[i], "blind_spot.missing_edges[" + std::to_string(i) + "]"));
    const json& deltas = expect_array(r.require("delta_w"), "blind_spot.delta_w");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const std::string path = "blind_spot.delta_w[" + std::to_string(i) + "]";
        ObjectReader dr(deltas[i], path);
        NodeRef ref;
        ref.dimension = as_string(dr.require("dimension"), path + ".dimension");
        ref.id = as_string(dr.require("id"), path + ".id");
        const double delta = as_number(dr.require("delta"), path + ".delta");
        dr.finish();
        if (!(delta > 0.0)) fail(path + ".delta", "must be > 0");
        bs.delta_w.emplace(std::move(ref), delta);
    }
    r.finish();
    return bs;
}

json to_json(const SeverityReport& r) {
    return {{"sigma", r.sigma},
            {"node_absence_term", r.node_absence_term},
            {"causal_absence_term", r.causal_absence_term},
            {"weight_suppression_term", r.weight_suppression_term},
            {"sigma_max", r.sigma_max}};
}

SeverityReport parse_severity_report(const json& j) {
    ObjectReader r(j, "severity");
    SeverityReport rep;
    rep.sigma = as_number(r.require("sigma"), "severity.sigma");
    rep.node_absence_term = as_number(r.require("node_absence_term"), "severity.node_absence_term");
    rep.causal_absence_term =
        as_number(r.require("causal_absence_term"), "severity.causal_absence_term");
    rep.weight_suppression_term =
        as_number(r.require("weight_suppression_term"), "severity.weight_suppression_term");
    rep.sigma_max = as_number(r.require("sigma_max"), "severity.sigma_max");
    r.finish();
    return rep;
}

json to_json(const TaxonomyReport& r) {
    json type1 = json::array();
    for (const auto& dim : r.type1_dimensions) type1.push_back(dim);
    json type2 = json::array();
    for (const auto& e : r.type2_edges) type2.push_back(edge_ref_json(e));
    json type3 = json::array();
    for (const auto& n : r.type3_nodes) type3.push_back(node_ref_json(n));
    json type4 = json::array();
    for (const auto& n : r.type4_nodes) type4.push_back(node_ref_json(n));
    json annex = json::array();
    for (const auto& n : r.type4_unevaluated) annex.push_back(node_ref_json(n));
    return {{"type1_dimensions", std::move(type1)},
            {"type2_edges", std::move(type2)},
            {"type3_nodes", std::move(type3)},
            {"type4_nodes", std::move(type4)},
            {"type4_unevaluated", std::move(annex)}};
}

TaxonomyReport parse_taxonomy_report(const json& j) {
    ObjectReader r(j, "taxonomy");
    TaxonomyReport rep;
    const json& type1 = expect_array(r.require("type1_dimensions"), "taxonomy.type1_dimensions");
    for (std::size_t i = 0; i < type1.size(); ++i)
        rep.type1_dimensions.insert(
            as_string(type1[i], "taxonomy.type1_dimensions[" + std::to_string(i) + "]"));
    auto read_nodes = [&](const char* key, std::set<NodeRef>& out) {
        const json& arr = expect_array(r.require(key), std::string("taxonomy.") + key);
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.insert(parse_node_ref(
                arr[i], std::string("taxonomy.") + key + "[" + std::to_string(i) + "]"));
    };
    const json& type2 = expect_array(r.require("type2_edges"), "taxonomy.type2_edges");
    for (std::size_t i = 0; i < type2.size(); ++i)
        rep.type2_edges.insert(
            parse_edge_ref(type2[i], "taxonomy.type2_edges[" + std::to_string(i) + "]"));
    read_nodes("type3_nodes", rep.type3_nodes);
    read_nodes("type4_nodes", rep.type4_nodes);
    read_nodes("type4_unevaluated", rep.type4_unevaluated);
    r.finish();
    return rep;
}

json to_json(const PatternFinding& f) {
    return {{"pattern", pattern_name(f.pattern)}, {"fired", f.fired}, {"evidence", f.evidence}};
}

json to_json(const std::vector<PatternFinding>& fs) {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(to_json(f));
    return arr;
}

std::vector<PatternFinding> parse_pattern_findings(const json& j) {
    std::vector<PatternFinding> out;
    const json& arr = expect_array(j, "patterns");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "patterns[" + std::to_string(i) + "]";
        ObjectReader r(arr[i], path);
        PatternFinding f;
        const std::string name = as_string(r.require("pattern"), path + ".pattern");
        const auto pattern = pattern_from_name(name);
        if (!pattern) fail(path + ".pattern", "unknown pattern \"" + name + "\"");
        f.pattern = *pattern;
        f.fired = as_bool(r.require("fired"), path + ".fired");
        f.evidence = r.require("evidence");
        r.finish();
        out.push_back(std::move(f));
    }
    return out;
}

json to_json(const ResilienceReport& r) {
    return {{"res", r.res},
            {"completeness", r.completeness},
            {"balance", r.balance},
            {"balance_raw", r.balance_raw},
            {"mobility", r.mobility},
            {"dimension_count", r.dimension_count},
            {"inputs",
             {{"sigma", r.inputs.sigma},
              {"sigma_max", r.inputs.sigma_max},
              {"max_mean_weight", r.inputs.max_mean_weight},
              {"switch_cost", r.inputs.switch_cost},
              {"omega_budget", r.inputs.omega_budget},
              {"epsilon", r.inputs.epsilon}}}};
}

ResilienceReport parse_resilience_report(const json& j) {
    ObjectReader r(j, "resilience");
    ResilienceReport rep;
    rep.res = as_number(r.require("res"), "resilience.res");
    rep.completeness = as_number(r.require("completeness"), "resilience.completeness");
    rep.balance = as_number(r.require("balance"), "resilience.balance");
    rep.balance_raw = as_number(r.require("balance_raw"), "resilience.balance_raw");
    rep.mobility = as_number(r.require("mobility"), "resilience.mobility");
    rep.dimension_count =
        static_cast<std::size_t>(as_integer(r.require("dimension_count"), "resilience.dimension_count"));
    const std::string ipath = "resilience.inputs";
    ObjectReader ir(r.require("inputs"), ipath);
    rep.inputs.sigma = as_number(ir.require("sigma"), ipath + ".sigma");
    rep.inputs.sigma_max = as_number(ir.require("sigma_max"), ipath + ".sigma_max");
    rep.inputs.max_mean_weight = as_number(ir.require("max_mean_weight"), ipath + ".max_mean_weight");
    rep.inputs.switch_cost = as_number(ir.require("switch_cost"), ipath + ".switch_cost");
    rep.inputs.omega_budget = as_number(ir.require("omega_budget"), ipath + ".omega_budget");
    rep.inputs.epsilon = as_number(ir.require("epsilon"), ipath + ".epsilon");
    ir.finish();
    r.finish();
    return rep;
}

json rho_to_json(const std::map<EdgeRef, double>& rho) {
    json arr = json::array();
    for (const auto& [edge, value] : rho) {
        json entry = edge_ref_json(edge);
        entry["rho"] = value;
        arr.push_back(std::move(entry));
    }
    return {{"rho", std::move(arr)}};
}

// -------------------------------------------------------------------------
// SimResult

json to_json(const SimResult& r) {
    json seeds_cfg = json::array();
    for (std::uint64_t s : r.config.seeds) seeds_cfg.push_back(s);
    json per_seed = json::array();
    for (const auto& s : r.per_seed)
        per_seed.push_back({{"seed", s.seed},
                            {"u_failure", s.u_failure},
                            {"u_success", s.u_success},
                            {"gap", s.gap}});
    json curve = json::array();
    for (const auto& p : r.sweep.curve)
        curve.push_back({{"n", p.n}, {"u_failure", p.u_failure}, {"u_success", p.u_success}});
    json sweep{{"target", r.sweep.target},
               {"curve", std::move(curve)},
               {"failure_crossing_n",
                r.sweep.failure_crossing_n ? json(*r.sweep.failure_crossing_n) : json()},
               {"success_crossing_n",
                r.sweep.success_crossing_n ? json(*r.sweep.success_crossing_n) : json()},
               {"ratio", r.sweep.ratio ? json(*r.sweep.ratio) : json()}};
    return {{"generator", r.generator},
            {"config",
             {{"m_dim", r.config.m_dim},
              {"ds_dim", r.config.ds_dim},
              {"n_samples", r.config.n_samples},
              {"n_patterns", r.config.n_patterns},
              {"noise_sigma", r.config.noise_sigma},
              {"seeds", std::move(seeds_cfg)},
              {"eval_size", r.config.eval_size},
              {"matched_sampling", r.config.matched_sampling},
              {"sweep_n_min", r.config.sweep_n_min},
              {"sweep_n_max", r.config.sweep_n_max},
              {"sweep_factor", r.config.sweep_factor},
              {"sweep_target", r.config.sweep_target},
              {"sweep_seed_count", r.config.sweep_seed_count}}},
            {"per_seed", std::move(per_seed)},
            {"mean_gap", r.mean_gap},
            {"gap_positive_fraction", r.gap_positive_fraction},
            {"gap_bootstrap",
             {{"mean", r.gap_bootstrap.mean}, {"half_width", r.gap_bootstrap.half_width}}},
            {"sweep", std::move(sweep)}};
}

SimResult parse_sim_result(const json& j) {
    ObjectReader r(j, "sim_result");
    SimResult out;
    out.generator = as_string(r.require("generator"), "sim_result.generator");

    const std::string cpath = "sim_result.config";
    ObjectReader cr(r.require("config"), cpath);
    out.config.m_dim = static_cast<int>(as_integer(cr.require("m_dim"), cpath + ".m_dim"));
    out.config.ds_dim = static_cast<int>(as_integer(cr.require("ds_dim"), cpath + ".ds_dim"));
    out.config.n_samples =
        static_cast<int>(as_integer(cr.require("n_samples"), cpath + ".n_samples"));
    out.config.n_patterns =
        static_cast<int>(as_integer(cr.require("n_patterns"), cpath + ".n_patterns"));
    out.config.noise_sigma = as_number(cr.require("noise_sigma"), cpath + ".noise_sigma");
    const json& seeds = expect_array(cr.require("seeds"), cpath + ".seeds");
    for (std::size_t i = 0; i < seeds.size(); ++i)
        out.config.seeds.push_back(static_cast<std::uint64_t>(
            as_integer(seeds[i], cpath + ".seeds[" + std::to_string(i) + "]")));
    out.config.eval_size =
        static_cast<int>(as_integer(cr.require("eval_size"), cpath + ".eval_size"));
    out.config.matched_sampling =
        as_bool(cr.require("matched_sampling"), cpath + ".matched_sampling");
    out.config.sweep_n_min =
        static_cast<int>(as_integer(cr.require("sweep_n_min"), cpath + ".sweep_n_min"));
    out.config.sweep_n_max =
        static_cast<int>(as_integer(cr.require("sweep_n_max"), cpath + ".sweep_n_max"));
    out.config.sweep_factor = as_number(cr.require("sweep_factor"), cpath + ".sweep_factor");
    out.config.sweep_target = as_number(cr.require("sweep_target"), cpath + ".sweep_target");
    out.config.sweep_seed_count = static_cast<int>(
        as_integer(cr.require("sweep_seed_count"), cpath + ".sweep_seed_count"));
    cr.finish();

    const json& per_seed = expect_array(r.require("per_seed"), "sim_result.per_seed");
    for (std::size_t i = 0; i < per_seed.size(); ++i) {
        const std::string path = "sim_result.per_seed[" + std::to_string(i) + "]";
        ObjectReader sr(per_seed[i], path);
        SeedOutcome s;
        s.seed = static_cast<std::uint64_t>(as_integer(sr.require("seed"), path + ".seed"));
        s.u_failure = as_number(sr.require("u_failure"), path + ".u_failure");
        s.u_success = as_number(sr.require("u_success"), path + ".u_success");
        s.gap = as_number(sr.require("gap"), path + ".gap");
        sr.finish();
        out.per_seed.push_back(s);
    }
    out.mean_gap = as_number(r.require("mean_gap"), "sim_result.mean_gap");
    out.gap_positive_fraction =
        as_number(r.require("gap_positive_fraction"), "sim_result.gap_positive_fraction");

    const std::string bpath = "sim_result.gap_bootstrap";
    ObjectReader br(r.require("gap_bootstrap"), bpath);
    out.gap_bootstrap.mean = as_number(br.require("mean"), bpath + ".mean");
    out.gap_bootstrap.half_width = as_number(br.require("half_width"), bpath + ".half_width");
    br.finish();

    const std::string spath = "sim_result.sweep";
    ObjectReader sw(r.require("sweep"), spath);
    out.sweep.target = as_number(sw.require("target"), spath + ".target");
    const json& curve = expect_array(sw.require("curve"), spath + ".curve");
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const std::string path = spath + ".curve[" + std::to_string(i) + "]";
        ObjectReader pr(curve[i], path);
        SweepPoint p;
        p.n = static_cast<int>(as_integer(pr.require("n"), path + ".n"));
        p.u_failure = as_number(pr.require("u_failure"), path + ".u_failure");
        p.u_success = as_number(pr.require("u_success"), path + ".u_success");
        pr.finish();
        out.sweep.curve.push_back(p);
    }
    auto opt_int = [&](const char* key) -> std::optional<int> {
        const json& v = sw.require(key);
        if (v.is_null()) return std::nullopt;
        return static_cast<int>(as_integer(v, spath + "." + key));
    };
    out.sweep.failure_crossing_n = opt_int("failure_crossing_n");
    out.sweep.success_crossing_n = opt_int("success_crossing_n");
    const json& ratio = sw.require("ratio");
    if (!ratio.is_null()) out.sweep.ratio = as_number(ratio, spath + ".ratio");
    sw.finish();
    r.finish();
    return out;
}

}  // namespace ontorisk
